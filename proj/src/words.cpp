#include "cycont/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cycont/error.hpp"

namespace cycont {

const char* to_string(Ordering o) noexcept {
    switch (o) {
        case Ordering::Less: return "LESS";
        case Ordering::Equal: return "EQUAL";
        case Ordering::Greater: return "GREATER";
    }
    return "?";
}

const char* to_string(OrderKind k) noexcept { return k == OrderKind::Plain ? "plain" : "alt"; }

// --- Word -------------------------------------------------------------------

Word Word::reversed() const { return Word(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend())); }

Word Word::rotated(std::size_t shift) const {
    if (symbols_.empty()) return *this;
    std::vector<Symbol> out(symbols_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
    return Word(std::move(out));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
    return Word(std::span<const Symbol>(symbols_).subspan(pos, len));
}

bool Word::is_palindrome() const noexcept { return cycont::is_palindrome(symbols_); }

bool is_palindrome(std::span<const Symbol> w) noexcept {
    for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
        if (w[i] != w[j - 1]) return false;
    return true;
}

Word reverse(const Word& w) { return w.reversed(); }

Word concat(const Word& a, const Word& b) {
    std::vector<Symbol> out(a.symbols());
    out.insert(out.end(), b.begin(), b.end());
    return Word(std::move(out));
}

// --- Alphabet ---------------------------------------------------------------

Alphabet::Alphabet(std::vector<std::string> names, std::optional<std::vector<std::uint64_t>> values)
    : names_(std::move(names)), values_(std::move(values)) {
    if (names_.empty()) throw ParseError("alphabet must contain at least one symbol");
    if (names_.size() > 0xFFFF) throw ParseError("alphabet too large");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw ParseError("alphabet symbol names must be non-empty");
        if (n.find(',') != std::string::npos) throw ParseError("alphabet symbol names may not contain ','");
        if (!seen.insert(n).second) throw ParseError("duplicate alphabet symbol '" + n + "'");
        if (n.size() != 1) single_char_ = false;
    }
    if (values_) {
        if (values_->size() != names_.size())
            throw ParseError("expected " + std::to_string(names_.size()) + " values, got " +
                             std::to_string(values_->size()));
        for (std::size_t i = 0; i < values_->size(); ++i) {
            if ((*values_)[i] == 0) throw DomainError("symbol values must be positive integers");
            if (i > 0 && (*values_)[i] <= (*values_)[i - 1])
                throw DomainError("symbol values must be strictly increasing with the alphabet order");
        }
    }
}

Alphabet Alphabet::letters(std::size_t k, std::optional<std::vector<std::uint64_t>> values) {
    if (k == 0 || k > 26) throw ParseError("default alphabet supports 1..26 letters");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(std::move(names), std::move(values));
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
}

std::uint64_t Alphabet::value(Symbol s) const {
    if (!values_) throw DomainError("alphabet has no value assignment");
    return values_->at(s);
}

std::span<const std::uint64_t> Alphabet::values() const {
    if (!values_) throw DomainError("alphabet has no value assignment");
    return *values_;
}

Alphabet Alphabet::with_values(std::vector<std::uint64_t> values) const { return Alphabet(names_, std::move(values)); }

Word Alphabet::parse(std::string_view text) const {
    std::vector<Symbol> out;
    auto lookup = [&](std::string_view token) {
        auto s = find(token);
        if (!s) throw ParseError("unknown symbol '" + std::string(token) + "'");
        out.push_back(*s);
    };
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            auto comma = text.find(',', start);
            auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            lookup(token);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (single_char_) {
        for (char c : text) lookup(std::string_view(&c, 1));
    } else if (!text.empty()) {
        lookup(text);
    }
    return Word(std::move(out));
}

std::string Alphabet::format(std::span<const Symbol> w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single_char_ && i > 0) out += ',';
        out += name(w[i]);
    }
    return out;
}

// --- CyclicWord -------------------------------------------------------------

std::size_t least_rotation(std::span<const Symbol> s) noexcept {
    const std::size_t n = s.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Symbol a = s[(i + k) % n], b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

CyclicWord CyclicWord::from(const Word& representative) {
    if (representative.empty()) throw DomainError("empty cyclic word");
    return CyclicWord(representative.rotated(least_rotation(representative.span())));
}

CyclicWord CyclicWord::reversed() const { return CyclicWord::from(canonical_.reversed()); }

bool CyclicWord::symmetric() const { return reversed() == *this; }

CyclicWord CyclicWord::symmetric_key() const { return std::min(*this, reversed()); }

CyclicWord canonicalize(const Word& x) { return CyclicWord::from(x); }

CyclicWord reverse_cyclic(const CyclicWord& w) { return w.reversed(); }

// --- ParikhVector -----------------------------------------------------------

std::size_t ParikhVector::total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0}); }

ParikhVector ParikhVector::minus(Symbol s, std::size_t n) const {
    if (counts_.at(s) < n) throw DomainError("Parikh vector entry would become negative");
    auto out = counts_;
    out[s] -= n;
    return ParikhVector(std::move(out));
}

ParikhVector parikh(std::span<const Symbol> w, std::size_t alphabet_size) {
    std::vector<std::size_t> counts(alphabet_size, 0);
    for (Symbol s : w) {
        if (s >= alphabet_size) throw DomainError("symbol outside the alphabet");
        ++counts[s];
    }
    return ParikhVector(std::move(counts));
}

// --- orders -----------------------------------------------------------------

Ordering compare_lex(std::span<const Symbol> u, std::span<const Symbol> v) noexcept {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
        if (u[i] != v[i]) return u[i] < v[i] ? Ordering::Less : Ordering::Greater;
    if (u.size() == v.size()) return Ordering::Equal;
    return u.size() > v.size() ? Ordering::Less : Ordering::Greater;
}

namespace {

// Position i is 0-based here, so even i is an odd (1-based) position.
Ordering alt_at(std::size_t i, Symbol x, Symbol y) noexcept {
    const bool smaller = x < y;
    return (i % 2 == 0) == smaller ? Ordering::Less : Ordering::Greater;
}

}  // namespace

Ordering compare_alt(std::span<const Symbol> u, std::span<const Symbol> v) noexcept {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
        if (u[i] != v[i]) return alt_at(i, u[i], v[i]);
    if (u.size() == v.size()) return Ordering::Equal;
    if (u.size() > v.size()) return v.size() % 2 == 0 ? Ordering::Less : Ordering::Greater;
    return u.size() % 2 == 0 ? Ordering::Greater : Ordering::Less;
}

Ordering compare(std::span<const Symbol> u, std::span<const Symbol> v, OrderKind kind) noexcept {
    return kind == OrderKind::Plain ? compare_lex(u, v) : compare_alt(u, v);
}

Ordering compare_with_reverse(std::span<const Symbol> w, OrderKind kind) noexcept {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        Symbol x = w[i], y = w[n - 1 - i];
        if (x == y) continue;
        if (kind == OrderKind::Plain) return x < y ? Ordering::Less : Ordering::Greater;
        return alt_at(i, x, y);
    }
    return Ordering::Equal;
}

// --- enumeration ------------------------------------------------------------

NecklaceStream::NecklaceStream(const ParikhVector& content)
    : n_(content.total()), k_(content.letters()), remaining_(content.counts()) {
    if (n_ == 0) throw DomainError("cannot enumerate the class of the zero vector");
    a_.assign(n_ + 1, -1);
    a_[0] = 0;
    p_.assign(n_ + 2, 1);
}

bool NecklaceStream::advance() {
    // Depth-first walk of the FKM prenecklace tree; returns true on reaching
    // a leaf that is a necklace, false when the tree is exhausted.
    while (t_ > 0) {
        int start;
        if (a_[t_] >= 0) {
            ++remaining_[static_cast<std::size_t>(a_[t_])];
            start = a_[t_] + 1;
        } else {
            start = a_[t_ - p_[t_]];
        }
        int j = start;
        while (j < static_cast<int>(k_) && remaining_[static_cast<std::size_t>(j)] == 0) ++j;
        if (j >= static_cast<int>(k_)) {
            a_[t_] = -1;
            --t_;
            continue;
        }
        a_[t_] = j;
        --remaining_[static_cast<std::size_t>(j)];
        p_[t_ + 1] = (j == a_[t_ - p_[t_]]) ? p_[t_] : t_;
        if (t_ == n_) {
            if (n_ % p_[n_ + 1] == 0) return true;
        } else {
            ++t_;
        }
    }
    return false;
}

std::optional<CyclicWord> NecklaceStream::next() {
    if (done_) return std::nullopt;
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    std::vector<Symbol> out;
    out.reserve(n_);
    for (std::size_t i = 1; i <= n_; ++i) out.push_back(static_cast<Symbol>(a_[i]));
    return CyclicWord::from_canonical_unchecked(Word(std::move(out)));
}

std::vector<CyclicWord> enumerate_class(const ParikhVector& content) {
    NecklaceStream stream(content);
    std::vector<CyclicWord> out;
    while (auto w = stream.next()) out.push_back(std::move(*w));
    return out;
}

std::vector<Split> split_points(const CyclicWord& w) {
    std::vector<Split> out;
    const std::size_t n = w.size();
    if (n < 2) return out;
    const Word& base = w.canonical();
    for (std::size_t r = 0; r < n; ++r) {
        Word rot = base.rotated(r);
        for (std::size_t m = 1; m < n; ++m) {
            Word u = rot.slice(0, m), v = rot.slice(m, n - m);
            if (u.is_palindrome() || v.is_palindrome()) continue;
            out.push_back(Split{std::move(u), std::move(v), r, m});
        }
    }
    return out;
}

}  // namespace cycont
