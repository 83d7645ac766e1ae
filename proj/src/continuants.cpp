#include "cycont/continuants.hpp"

#include "cycont/error.hpp"

namespace cycont {

const char* to_string(ContinuantKind k) noexcept { return k == ContinuantKind::Regular ? "regular" : "semiregular"; }

BigNat continuant(std::span<const std::uint64_t> digits, ContinuantKind kind) {
    if (kind == ContinuantKind::Semiregular)
        for (auto d : digits)
            if (d < 2) throw DomainError("semi-regular continuants require every digit to be at least 2");
    BigNat prev = 1;  // K of the empty word
    if (digits.empty()) return prev;
    BigNat cur = digits[0];
    for (std::size_t i = 1; i < digits.size(); ++i) {
        BigNat next = BigNat(digits[i]) * cur;
        if (kind == ContinuantKind::Regular)
            next += prev;
        else
            next -= prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

void check_domain(const Alphabet& alphabet, ContinuantKind kind) {
    if (!alphabet.has_values()) throw DomainError("continuant evaluation needs a value for every symbol");
    if (kind == ContinuantKind::Semiregular)
        for (auto v : alphabet.values())
            if (v < 2) throw DomainError("semi-regular evaluation excludes the digit 1");
}

std::vector<std::uint64_t> digits_of(std::span<const Symbol> w, const Alphabet& alphabet) {
    std::vector<std::uint64_t> out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(alphabet.value(s));
    return out;
}

BigNat continuant(const Word& x, const Alphabet& alphabet, ContinuantKind kind) {
    check_domain(alphabet, kind);
    return continuant(digits_of(x.span(), alphabet), kind);
}

BigNat cyclic_continuant(std::span<const std::uint64_t> digits, ContinuantKind kind) {
    if (digits.empty()) throw DomainError("empty cyclic word");
    BigNat whole = continuant(digits, kind);
    BigNat interior = digits.size() <= 2 ? BigNat(1) : continuant(digits.subspan(1, digits.size() - 2), kind);
    return kind == ContinuantKind::Regular ? BigNat(whole + interior) : BigNat(whole - interior);
}

BigNat cyclic_continuant(const Word& representative, const Alphabet& alphabet, ContinuantKind kind) {
    check_domain(alphabet, kind);
    return cyclic_continuant(digits_of(representative.span(), alphabet), kind);
}

BigNat cyclic_continuant(const CyclicWord& w, const Alphabet& alphabet, ContinuantKind kind) {
    return cyclic_continuant(w.canonical(), alphabet, kind);
}

Rational cf_value(const Word& x, const Alphabet& alphabet, ContinuantKind kind) {
    if (x.empty()) throw DomainError("continued fraction of the empty word");
    check_domain(alphabet, kind);
    auto d = digits_of(x.span(), alphabet);
    BigNat num = continuant(std::span<const std::uint64_t>(d).subspan(1), kind);
    BigNat den = continuant(d, kind);
    return Rational(num, den);
}

SplitSides split_identity_check(const Word& x, std::size_t m, const Alphabet& alphabet, ContinuantKind kind) {
    const std::size_t n = x.size();
    if (m < 1 || m + 1 > n) throw DomainError("cut index must satisfy 1 <= m <= n-1");
    check_domain(alphabet, kind);
    auto d = digits_of(x.span(), alphabet);
    std::span<const std::uint64_t> all(d);
    // Segment x_{from}..x_{to} in 1-based inclusive bounds; empty when to < from.
    auto seg = [&](std::size_t from, std::size_t to) {
        if (to < from) return BigNat(1);
        return continuant(all.subspan(from - 1, to - from + 1), kind);
    };
    BigNat main = seg(1, m) * seg(m + 1, n);
    BigNat tail = seg(1, m - 1) * seg(m + 2, n);
    return SplitSides{continuant(d, kind), kind == ContinuantKind::Regular ? BigNat(main + tail) : BigNat(main - tail)};
}

std::string to_decimal(const BigNat& n) { return n.str(); }

std::string to_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace cycont
