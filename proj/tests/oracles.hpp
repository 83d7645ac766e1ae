#pragma once

// Brute-force reference implementations. None of these call into the
// library's algorithms beyond value types, so they can cross-check them.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cycont/continuants.hpp"
#include "cycont/words.hpp"

namespace oracle {

using cycont::Symbol;
using Sym = std::vector<Symbol>;

inline Sym sym(const std::string& s) {
    Sym out;
    for (char c : s) out.push_back(static_cast<Symbol>(c - 'a'));
    return out;
}

inline std::string str(const Sym& w) {
    std::string out;
    for (auto s : w) out.push_back(static_cast<char>('a' + s));
    return out;
}

inline cycont::Word word(const std::string& s) { return cycont::Word(sym(s)); }

// Euler's rule: sum over sets of disjoint adjacent pairs of the product of the
// untouched digits, each removed pair contributing a factor sign.
inline std::int64_t euler(const std::vector<std::int64_t>& d, std::int64_t sign) {
    std::function<std::int64_t(std::size_t)> go = [&](std::size_t i) -> std::int64_t {
        if (i >= d.size()) return 1;
        std::int64_t keep = d[i] * go(i + 1);
        if (i + 1 < d.size()) keep += sign * go(i + 2);
        return keep;
    };
    return go(0);
}

// Same rule on the cycle graph: pairs may also join the last and first digit.
inline std::int64_t euler_cyclic(const std::vector<std::int64_t>& d, std::int64_t sign) {
    const std::size_t n = d.size();
    if (n == 1) return d[0] + sign;
    if (n == 2) return d[0] * d[1] + 2 * sign;
    std::int64_t without_wrap = euler(d, sign);
    std::vector<std::int64_t> inner(d.begin() + 1, d.end() - 1);
    return without_wrap + sign * euler(inner, sign);
}

inline std::vector<std::int64_t> digits(const Sym& w, const std::vector<std::int64_t>& values) {
    std::vector<std::int64_t> out;
    for (auto s : w) out.push_back(values.at(s));
    return out;
}

// Backward evaluation 1/(x1 ± 1/(x2 ± ...)).
inline cycont::Rational cf_backward(const std::vector<std::int64_t>& d, int sign) {
    cycont::Rational acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = cycont::Rational(1) / (cycont::Rational(d[i]) + sign * acc);
    return acc;
}

inline Sym rotate(const Sym& w, std::size_t r) {
    Sym out(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    return out;
}

inline Sym reversed(Sym w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline Sym min_rotation(const Sym& w) {
    Sym best = w;
    for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, rotate(w, r));
    return best;
}

inline bool palindrome(const Sym& w) { return w == reversed(w); }

// All linear words of length n over k letters.
inline void for_each_word(std::size_t n, std::size_t k, const std::function<void(const Sym&)>& f) {
    Sym w(n, 0);
    while (true) {
        f(w);
        std::size_t i = n;
        while (i > 0 && w[i - 1] + 1u == k) w[--i] = 0;
        if (i == 0) return;
        ++w[i - 1];
    }
}

// Every Parikh vector with k entries and total between lo and hi.
inline std::vector<std::vector<std::size_t>> vectors(std::size_t k, std::size_t lo, std::size_t hi) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> v(k, 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t left) {
        if (i + 1 == k) {
            for (std::size_t x = 0; x <= left; ++x) {
                v[i] = x;
                std::size_t t = 0;
                for (auto c : v) t += c;
                if (t >= lo) out.push_back(v);
            }
            return;
        }
        for (std::size_t x = 0; x <= left; ++x) {
            v[i] = x;
            go(i + 1, left - x);
        }
    };
    go(0, hi);
    return out;
}

// Distinct least rotations of all arrangements of the multiset.
inline std::set<Sym> necklaces(const std::vector<std::size_t>& counts) {
    Sym w;
    for (std::size_t s = 0; s < counts.size(); ++s) w.insert(w.end(), counts[s], static_cast<Symbol>(s));
    std::set<Sym> out;
    if (w.empty()) return out;
    do out.insert(min_rotation(w));
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Order keys: a word compares as its key sequence under the usual
// lexicographic order, with an end marker that decides proper prefixes.
inline std::vector<int> lex_key(const Sym& w) {
    std::vector<int> k(w.begin(), w.end());
    k.push_back(INT_MAX);
    return k;
}

inline std::vector<int> alt_key(const Sym& w) {
    std::vector<int> k;
    for (std::size_t i = 0; i < w.size(); ++i) k.push_back(i % 2 == 0 ? int(w[i]) : -int(w[i]));
    k.push_back(w.size() % 2 == 0 ? INT_MAX : INT_MIN);
    return k;
}

inline bool precedes(const Sym& u, const Sym& v, bool alt) { return alt ? alt_key(u) < alt_key(v) : lex_key(u) < lex_key(v); }

// Singular per definition: every factorization of every rotation into two
// non-palindromes has u vs u* matching v vs v*.
inline bool singular(const Sym& w, bool alt) {
    const std::size_t n = w.size();
    for (std::size_t r = 0; r < n; ++r) {
        Sym x = rotate(w, r);
        for (std::size_t m = 1; m < n; ++m) {
            Sym u(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
            Sym v(x.begin() + static_cast<std::ptrdiff_t>(m), x.end());
            if (palindrome(u) || palindrome(v)) continue;
            if (precedes(u, reversed(u), alt) != precedes(v, reversed(v), alt)) return false;
        }
    }
    return true;
}

inline bool none_sync(const Sym& w, bool alt) {
    const std::size_t n = w.size();
    for (std::size_t r = 0; r < n; ++r) {
        Sym x = rotate(w, r);
        for (std::size_t m = 1; m < n; ++m) {
            Sym u(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
            Sym v(x.begin() + static_cast<std::ptrdiff_t>(m), x.end());
            if (palindrome(u) || palindrome(v)) continue;
            if (precedes(u, reversed(u), alt) == precedes(v, reversed(v), alt)) return false;
        }
    }
    return true;
}

inline std::set<Sym> singular_set(const std::vector<std::size_t>& counts, bool alt = false) {
    std::set<Sym> out;
    for (const auto& w : necklaces(counts))
        if (singular(w, alt)) out.insert(w);
    return out;
}

// Cyclic balance: every window length, count of letter 0 within one.
inline bool balanced(const Sym& w) {
    const std::size_t n = w.size();
    for (std::size_t len = 1; len <= n; ++len) {
        std::size_t lo = SIZE_MAX, hi = 0;
        for (std::size_t s = 0; s < n; ++s) {
            std::size_t c = 0;
            for (std::size_t i = 0; i < len; ++i) c += w[(s + i) % n] == 0;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

}  // namespace oracle
