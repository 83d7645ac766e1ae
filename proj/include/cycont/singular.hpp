#pragma once

// Singular cyclic words: the δ statistic of a Parikh vector, the ξ_b
// insertion maps and their inverses, the arithmetic descent that builds the
// unique singular word when it succeeds, and the binary Christoffel tools.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cycont/extremal.hpp"
#include "cycont/words.hpp"

namespace cycont {

// δ_b = Σ_{c>b} n_c − Σ_{a<b} n_a.
std::int64_t delta(const ParikhVector& v, Symbol b);
std::vector<std::int64_t> delta_profile(const ParikhVector& v);

// Where the midpoint of [0, N] falls when [0, N] is cut into consecutive
// sections of lengths n_a, n_b, ...: strictly inside one section
// (SingleLetter, n_b > |δ_b|), or on the boundary between two sections of
// positive length separated only by empty ones (LetterPair).
struct MidpointCase {
    enum class Kind { SingleLetter, LetterPair };
    Kind kind = Kind::SingleLetter;
    Symbol first = 0;
    Symbol second = 0;  // equal to `first` for SingleLetter

    friend bool operator==(const MidpointCase&, const MidpointCase&) = default;
};

// Throws DomainError on the zero vector.
MidpointCase midpoint_case(const ParikhVector& v);

// Adds one b to every maximal run of b, and one b between every two adjacent
// letters lying on the same strict side of b.
Word xi_linear(Symbol b, const Word& x);
CyclicWord xi_cyclic(Symbol b, const CyclicWord& w);

// The unique preimage under ξ_b, or nullopt when the word is not an image.
std::optional<Word> xi_preimage(Symbol b, const Word& image);
std::optional<CyclicWord> xi_preimage(Symbol b, const CyclicWord& image);

struct ConstructionStep {
    ParikhVector vector;   // vector before the step
    Symbol letter = 0;     // least b with n_b >= |δ_b|
    std::size_t removed = 0;  // |δ_b|
};

struct ConstructionTrace {
    ParikhVector input;
    std::vector<ConstructionStep> steps;
    ParikhVector terminal;       // first vector whose chosen letter has δ = 0
    Symbol terminal_letter = 0;
    // On success: the seed b^k followed by each ξ image, ending with the output.
    std::vector<CyclicWord> words;
};

struct Construction {
    std::optional<CyclicWord> outcome;
    ConstructionTrace trace;
};

// Throws DomainError on the zero vector. An empty outcome is an algorithmic
// failure, not an error: the terminal vector was not supported on one letter.
Construction construct_singular(const ParikhVector& v);

// Every admissible factorization synchronizing (singular) or alt-synchronizing.
bool is_singular(const CyclicWord& w, SyncKind kind = SyncKind::Plain);

// Lower Christoffel word with p letters 0 and q letters 1, taken as a power
// of the primitive one when gcd(p, q) > 1.
CyclicWord christoffel(std::size_t p, std::size_t q);

// Cyclic balance over {0, 1}: equal-length factors differ by at most one in
// their number of 0s. Throws DomainError on a symbol outside {0, 1}.
bool is_balanced(const CyclicWord& w);

}  // namespace cycont
