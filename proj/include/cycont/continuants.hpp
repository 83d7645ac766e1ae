#pragma once

// Exact regular and semi-regular continuants, their cyclic analogues and
// the terminating continued-fraction quotients built from them.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cycont/words.hpp"

namespace cycont {

// Continuant values are non-negative, but the semi-regular recurrence
// subtracts, so the arbitrary-precision type is signed.
using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ContinuantKind { Regular, Semiregular };

const char* to_string(ContinuantKind k) noexcept;

// Regular: K() = 1, K(x1) = x1, K(x1..xn) = xn K(x1..xn-1) + K(x1..xn-2).
// Semi-regular: same with '-', and every digit must be at least 2.
BigNat continuant(std::span<const std::uint64_t> digits, ContinuantKind kind);

// Throws DomainError if the alphabet has no values, or when a semi-regular
// evaluation is requested over an alphabet that assigns the digit 1.
void check_domain(const Alphabet& alphabet, ContinuantKind kind);
std::vector<std::uint64_t> digits_of(std::span<const Symbol> w, const Alphabet& alphabet);

BigNat continuant(const Word& x, const Alphabet& alphabet, ContinuantKind kind);
inline BigNat continuant_regular(const Word& x, const Alphabet& alphabet) {
    return continuant(x, alphabet, ContinuantKind::Regular);
}
inline BigNat continuant_semiregular(const Word& x, const Alphabet& alphabet) {
    return continuant(x, alphabet, ContinuantKind::Semiregular);
}

// K(x) + K(x2..xn-1), resp. K̇(x) - K̇(x2..xn-1), evaluated on the given
// linear representative; the interior of a word of length 1 or 2 is empty.
BigNat cyclic_continuant(std::span<const std::uint64_t> digits, ContinuantKind kind);
BigNat cyclic_continuant(const Word& representative, const Alphabet& alphabet, ContinuantKind kind);
BigNat cyclic_continuant(const CyclicWord& w, const Alphabet& alphabet, ContinuantKind kind);
inline BigNat cyclic_regular(const CyclicWord& w, const Alphabet& alphabet) {
    return cyclic_continuant(w, alphabet, ContinuantKind::Regular);
}
inline BigNat cyclic_semiregular(const CyclicWord& w, const Alphabet& alphabet) {
    return cyclic_continuant(w, alphabet, ContinuantKind::Semiregular);
}

// [x] = K(x2..xn) / K(x1..xn), resp. with K̇.
Rational cf_value(const Word& x, const Alphabet& alphabet, ContinuantKind kind);

struct SplitSides {
    BigNat lhs;
    BigNat rhs;
};

// Both sides of K(x) = K(x1..xm)K(xm+1..xn) ± K(x1..xm-1)K(xm+2..xn) for a
// cut 1 <= m <= n-1; out-of-range segments have continuant 1.
SplitSides split_identity_check(const Word& x, std::size_t m, const Alphabet& alphabet, ContinuantKind kind);

std::string to_decimal(const BigNat& n);
std::string to_string(const Rational& q);

}  // namespace cycont
