#pragma once

// Ordered alphabets, linear and cyclic words, the two word orders used by the
// exchange arguments, Parikh vectors and cyclic Abelian class enumeration.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cycont {

// Index of a letter in its alphabet; the alphabet order is the index order.
using Symbol = std::uint16_t;

enum class Ordering { Less, Equal, Greater };

constexpr Ordering flip(Ordering o) noexcept {
    return o == Ordering::Less ? Ordering::Greater : o == Ordering::Greater ? Ordering::Less : Ordering::Equal;
}

const char* to_string(Ordering o) noexcept;

// Plain lexicographic order with longer-is-smaller prefixes, or the
// alternating order that flips comparison direction at even positions.
enum class OrderKind { Plain, Alt };

const char* to_string(OrderKind k) noexcept;

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Word(std::span<const Symbol> symbols) : symbols_(symbols.begin(), symbols.end()) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    Symbol front() const { return symbols_.front(); }
    Symbol back() const { return symbols_.back(); }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }
    std::span<const Symbol> span() const noexcept { return symbols_; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    Word reversed() const;
    // Rotation starting at position `shift` (mod size).
    Word rotated(std::size_t shift) const;
    Word slice(std::size_t pos, std::size_t len) const;
    bool is_palindrome() const noexcept;

    Word& push_back(Symbol s) {
        symbols_.push_back(s);
        return *this;
    }

    friend bool operator==(const Word&, const Word&) = default;
    // Plain dictionary order on symbol indices (a proper prefix is smaller).
    friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

private:
    std::vector<Symbol> symbols_;
};

Word reverse(const Word& w);
Word concat(const Word& a, const Word& b);
bool is_palindrome(std::span<const Symbol> w) noexcept;

// Finite totally ordered symbol set with an optional order-preserving
// assignment of positive integers.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names,
                      std::optional<std::vector<std::uint64_t>> values = std::nullopt);

    // First `k` lowercase letters a, b, c, ...
    static Alphabet letters(std::size_t k, std::optional<std::vector<std::uint64_t>> values = std::nullopt);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Symbol s) const { return names_.at(s); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Symbol> find(std::string_view name) const;

    bool has_values() const noexcept { return values_.has_value(); }
    std::uint64_t value(Symbol s) const;
    std::span<const std::uint64_t> values() const;
    Alphabet with_values(std::vector<std::uint64_t> values) const;

    // True when every symbol name is a single character, so words are
    // written without separators.
    bool single_char() const noexcept { return single_char_; }

    // Accepts concatenated single-character names, or comma-separated names.
    Word parse(std::string_view text) const;
    std::string format(std::span<const Symbol> w) const;
    std::string format(const Word& w) const { return format(w.span()); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
    std::optional<std::vector<std::uint64_t>> values_;
    bool single_char_ = true;
};

// Rotation class of a non-empty linear word, held by its least rotation.
class CyclicWord {
public:
    // Throws DomainError on the empty word.
    static CyclicWord from(const Word& representative);
    static CyclicWord from_canonical_unchecked(Word canonical) { return CyclicWord(std::move(canonical)); }

    const Word& canonical() const noexcept { return canonical_; }
    std::size_t size() const noexcept { return canonical_.size(); }
    CyclicWord reversed() const;
    // ω = ω*.
    bool symmetric() const;
    // Representative of the reversal-identified pair {ω, ω*}.
    CyclicWord symmetric_key() const;

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) { return a.canonical_ <=> b.canonical_; }

private:
    explicit CyclicWord(Word canonical) : canonical_(std::move(canonical)) {}
    Word canonical_;
};

// Start index of the least rotation (dictionary order), smallest such index.
std::size_t least_rotation(std::span<const Symbol> w) noexcept;

CyclicWord canonicalize(const Word& x);
CyclicWord reverse_cyclic(const CyclicWord& w);

class ParikhVector {
public:
    ParikhVector() = default;
    explicit ParikhVector(std::vector<std::size_t> counts) : counts_(std::move(counts)) {}
    ParikhVector(std::initializer_list<std::size_t> counts) : counts_(counts) {}

    // Number of alphabet letters the vector is indexed by.
    std::size_t letters() const noexcept { return counts_.size(); }
    std::size_t operator[](Symbol s) const { return counts_.at(s); }
    std::size_t total() const noexcept;
    bool is_zero() const noexcept { return total() == 0; }
    const std::vector<std::size_t>& counts() const noexcept { return counts_; }

    ParikhVector minus(Symbol s, std::size_t n) const;

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
    friend auto operator<=>(const ParikhVector& a, const ParikhVector& b) { return a.counts_ <=> b.counts_; }

private:
    std::vector<std::size_t> counts_;
};

ParikhVector parikh(std::span<const Symbol> w, std::size_t alphabet_size);
inline ParikhVector parikh(const Word& w, std::size_t alphabet_size) { return parikh(w.span(), alphabet_size); }
inline ParikhVector parikh(const CyclicWord& w, std::size_t alphabet_size) {
    return parikh(w.canonical().span(), alphabet_size);
}

// At the first difference the smaller symbol wins; if v is a proper prefix
// of u then u is the smaller one.
Ordering compare_lex(std::span<const Symbol> u, std::span<const Symbol> v) noexcept;
// First difference at odd (1-based) position: smaller symbol wins; at even
// position: larger symbol wins. If v is a proper prefix of u, u is smaller
// when |v| is even and larger when |v| is odd.
Ordering compare_alt(std::span<const Symbol> u, std::span<const Symbol> v) noexcept;
Ordering compare(std::span<const Symbol> u, std::span<const Symbol> v, OrderKind kind) noexcept;

inline Ordering compare_lex(const Word& u, const Word& v) noexcept { return compare_lex(u.span(), v.span()); }
inline Ordering compare_alt(const Word& u, const Word& v) noexcept { return compare_alt(u.span(), v.span()); }
inline Ordering compare(const Word& u, const Word& v, OrderKind kind) noexcept {
    return compare(u.span(), v.span(), kind);
}

// Order of w against its own mirror image, without materializing w*.
Ordering compare_with_reverse(std::span<const Symbol> w, OrderKind kind) noexcept;

// Pull-based enumeration of the necklaces with fixed content (FKM tree
// restricted to the remaining letter budget). Each cyclic word with the
// given Parikh vector is produced exactly once, in increasing canonical order.
class NecklaceStream {
public:
    explicit NecklaceStream(const ParikhVector& content);
    std::optional<CyclicWord> next();

private:
    bool advance();

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<std::size_t> remaining_;
    std::vector<int> a_;            // a_[0] is the FKM sentinel; positions 1..n
    std::vector<std::size_t> p_;    // period in force when entering depth t
    std::size_t t_ = 1;
    bool done_ = false;
};

// Throws DomainError on the zero vector.
std::vector<CyclicWord> enumerate_class(const ParikhVector& content);

struct Split {
    Word u;
    Word v;
    std::size_t rotation = 0;
    std::size_t cut = 0;
};

// Every (rotation, cut) of ω into non-palindromic non-empty parts u, v.
std::vector<Split> split_points(const CyclicWord& w);

// Visits the same factorizations as split_points without allocating. The
// callback receives (u, v) spans and returns false to stop early. Returns
// false iff the visit was stopped.
template <class F>
bool for_each_split(const CyclicWord& w, F&& visit) {
    const auto& base = w.canonical().symbols();
    const std::size_t n = base.size();
    if (n < 2) return true;
    std::vector<Symbol> doubled(base);
    doubled.insert(doubled.end(), base.begin(), base.end());
    const std::span<const Symbol> all(doubled);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t m = 1; m < n; ++m) {
            auto u = all.subspan(r, m);
            if (is_palindrome(u)) continue;
            auto v = all.subspan(r + m, n - m);
            if (is_palindrome(v)) continue;
            if (!visit(u, v)) return false;
        }
    }
    return true;
}

}  // namespace cycont
