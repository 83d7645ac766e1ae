#include "cycont/singular.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "cycont/error.hpp"

namespace cycont {

namespace {

bool same_strict_side(Symbol d, Symbol e, Symbol b) noexcept { return (d < b && e < b) || (d > b && e > b); }

std::size_t abs_size(std::int64_t x) noexcept { return static_cast<std::size_t>(x < 0 ? -x : x); }

}  // namespace

std::int64_t delta(const ParikhVector& v, Symbol b) {
    if (b >= v.letters()) throw DomainError("letter outside the Parikh vector");
    std::int64_t above = 0, below = 0;
    for (std::size_t c = 0; c < v.letters(); ++c) {
        if (c > b) above += static_cast<std::int64_t>(v.counts()[c]);
        if (c < b) below += static_cast<std::int64_t>(v.counts()[c]);
    }
    return above - below;
}

std::vector<std::int64_t> delta_profile(const ParikhVector& v) {
    std::vector<std::int64_t> out(v.letters());
    for (std::size_t b = 0; b < v.letters(); ++b) out[b] = delta(v, static_cast<Symbol>(b));
    return out;
}

MidpointCase midpoint_case(const ParikhVector& v) {
    if (v.is_zero()) throw DomainError("midpoint case of the zero vector");
    const auto d = delta_profile(v);
    std::vector<Symbol> strict, tight;
    for (std::size_t b = 0; b < v.letters(); ++b) {
        const auto n = v.counts()[b];
        const auto ad = abs_size(d[b]);
        if (n > ad) strict.push_back(static_cast<Symbol>(b));
        if (n == ad && n > 0) tight.push_back(static_cast<Symbol>(b));
    }
    if (strict.size() == 1) return MidpointCase{MidpointCase::Kind::SingleLetter, strict[0], strict[0]};
    if (strict.empty() && tight.size() == 2) return MidpointCase{MidpointCase::Kind::LetterPair, tight[0], tight[1]};
    throw std::logic_error("midpoint classification found no consistent case");
}

// --- ξ maps -----------------------------------------------------------------

Word xi_linear(Symbol b, const Word& x) {
    std::vector<Symbol> out;
    out.reserve(2 * x.size() + 1);
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(x[i]);
        const bool last = i + 1 == n;
        if (x[i] == b) {
            if (last || x[i + 1] != b) out.push_back(b);
        } else if (!last && same_strict_side(x[i], x[i + 1], b)) {
            out.push_back(b);
        }
    }
    return Word(std::move(out));
}

CyclicWord xi_cyclic(Symbol b, const CyclicWord& w) {
    const Word& x = w.canonical();
    if (std::all_of(x.begin(), x.end(), [b](Symbol s) { return s == b; }))
        return CyclicWord::from(Word(x).push_back(b));
    std::vector<Symbol> y = xi_linear(b, x).symbols();
    const Symbol first = x.front(), last = x.back();
    if (same_strict_side(first, last, b))
        y.push_back(b);
    else if (first == b && last == b)
        y.pop_back();
    return CyclicWord::from(Word(std::move(y)));
}

namespace {

// Conditions 1 and 2 of the image characterization on the factor x[i] x[i+1]
// (and x[i+2] when present).
bool image_local_ok(Symbol b, Symbol d, Symbol e) noexcept { return !same_strict_side(d, e, b); }

bool image_triple_ok(Symbol b, Symbol d, Symbol m, Symbol e) noexcept {
    return !(m == b && ((d < b && e > b) || (d > b && e < b)));
}

// Removes one b from every maximal run of b.
std::vector<Symbol> erase_one_per_run(Symbol b, std::span<const Symbol> x) {
    std::vector<Symbol> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const bool run_end = x[i] == b && (i + 1 == x.size() || x[i + 1] != b);
        if (!run_end) out.push_back(x[i]);
    }
    return out;
}

}  // namespace

std::optional<Word> xi_preimage(Symbol b, const Word& image) {
    const std::size_t n = image.size();
    if (n == 1 && image[0] == b) return std::nullopt;
    if (n >= 2 && image[0] == b && image[1] != b) return std::nullopt;
    if (n >= 2 && image[n - 1] == b && image[n - 2] != b) return std::nullopt;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!image_local_ok(b, image[i], image[i + 1])) return std::nullopt;
    for (std::size_t i = 0; i + 2 < n; ++i)
        if (!image_triple_ok(b, image[i], image[i + 1], image[i + 2])) return std::nullopt;
    return Word(erase_one_per_run(b, image.span()));
}

std::optional<CyclicWord> xi_preimage(Symbol b, const CyclicWord& image) {
    const Word& x = image.canonical();
    const std::size_t n = x.size();
    if (n == 1 && x[0] == b) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        if (!image_local_ok(b, x[i], x[(i + 1) % n])) return std::nullopt;
        if (!image_triple_ok(b, x[i], x[(i + 1) % n], x[(i + 2) % n])) return std::nullopt;
    }
    if (std::all_of(x.begin(), x.end(), [b](Symbol s) { return s == b; }))
        return CyclicWord::from(x.slice(0, n - 1));
    // Start on a letter other than b so that no run of b wraps around.
    std::size_t start = 0;
    while (x[start] == b) ++start;
    const Word rotated = x.rotated(start);
    return CyclicWord::from(Word(erase_one_per_run(b, rotated.span())));
}

// --- construction -----------------------------------------------------------

Construction construct_singular(const ParikhVector& v) {
    if (v.is_zero()) throw DomainError("cannot construct a word with the zero vector");
    Construction result;
    auto& trace = result.trace;
    trace.input = v;
    ParikhVector current = v;
    while (true) {
        std::optional<Symbol> chosen;
        std::size_t removed = 0;
        for (std::size_t b = 0; b < current.letters(); ++b) {
            const auto ad = abs_size(delta(current, static_cast<Symbol>(b)));
            if (current.counts()[b] >= ad) {
                chosen = static_cast<Symbol>(b);
                removed = ad;
                break;
            }
        }
        if (!chosen) throw std::logic_error("no letter satisfies n_b >= |delta_b| on a non-zero vector");
        if (removed != 0) {
            trace.steps.push_back(ConstructionStep{current, *chosen, removed});
            current = current.minus(*chosen, removed);
            continue;
        }
        trace.terminal = current;
        trace.terminal_letter = *chosen;
        break;
    }

    const Symbol seed_letter = trace.terminal_letter;
    const std::size_t k = trace.terminal[seed_letter];
    if (k == 0 || trace.terminal.total() != k) return result;

    CyclicWord w = CyclicWord::from(Word(std::vector<Symbol>(k, seed_letter)));
    trace.words.push_back(w);
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        w = xi_cyclic(it->letter, w);
        trace.words.push_back(w);
    }
    result.outcome = std::move(w);
    return result;
}

bool is_singular(const CyclicWord& w, SyncKind kind) { return all_synchronizing(w, kind); }

// --- binary case ------------------------------------------------------------

CyclicWord christoffel(std::size_t p, std::size_t q) {
    if (p + q == 0) throw DomainError("Christoffel word needs at least one letter");
    const std::size_t g = std::gcd(p, q);
    const std::size_t pp = p / g, qq = q / g, n = pp + qq;
    std::vector<Symbol> primitive;
    primitive.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        primitive.push_back((i * qq) / n != ((i - 1) * qq) / n ? Symbol{1} : Symbol{0});
    std::vector<Symbol> out;
    out.reserve(g * n);
    for (std::size_t r = 0; r < g; ++r) out.insert(out.end(), primitive.begin(), primitive.end());
    return CyclicWord::from(Word(std::move(out)));
}

bool is_balanced(const CyclicWord& w) {
    const Word& x = w.canonical();
    const std::size_t n = x.size();
    for (Symbol s : x)
        if (s > 1) throw DomainError("balance is defined here for binary words only");
    // prefix[i] = number of zeros among the first i letters of x x.
    std::vector<std::size_t> prefix(2 * n + 1, 0);
    for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + (x[i % n] == 0 ? 1 : 0);
    for (std::size_t len = 1; len < n; ++len) {
        std::size_t lo = n, hi = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t c = prefix[i + len] - prefix[i];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

}  // namespace cycont
