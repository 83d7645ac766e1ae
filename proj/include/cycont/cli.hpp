#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cycont::cli {

// 0 success, 1 usage or parse error, 2 domain error (including size-guard
// refusals), 3 the construction algorithm produced no word.
enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kFailure = 3 };

struct RunConfig {
    std::string command;
    std::optional<std::string> alphabet;          // "abcde" or "x1,x2,x3"
    std::optional<std::vector<std::uint64_t>> values;
    std::optional<std::string> word;
    std::optional<std::vector<std::size_t>> vector;
    std::optional<std::string> letter;
    bool alt = false;
    bool semiregular = true;
    bool maximize = true;
    bool cyclic = false;
    bool inverse = false;
    std::vector<std::string> eval_kinds;  // subset of regular, semiregular, cyclic-regular, cyclic-semiregular, cf-*
    std::string format = "json";
    unsigned jobs = 1;
    std::size_t limit = 14;
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycont::cli
