#pragma once

#include <stdexcept>
#include <string>

namespace cycont {

// Malformed input: unknown symbols, bad alphabet declarations, unparsable lists.
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input outside an operation's domain (digit 1 in a semi-regular
// evaluation, empty cyclic word, zero vector, palindromic factor, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace cycont
