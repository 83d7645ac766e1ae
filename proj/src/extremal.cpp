#include "cycont/extremal.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "cycont/error.hpp"
#include "parallel.hpp"

namespace cycont {

const char* to_string(Direction d) noexcept { return d == Direction::Max ? "max" : "min"; }

bool is_synchronizing(std::span<const Symbol> u, std::span<const Symbol> v, SyncKind kind) {
    const Ordering ou = compare_with_reverse(u, kind);
    const Ordering ov = compare_with_reverse(v, kind);
    if (ou == Ordering::Equal || ov == Ordering::Equal)
        throw DomainError("synchronization is only defined for non-palindromic factors");
    return ou == ov;
}

bool all_synchronizing(const CyclicWord& w, SyncKind kind) {
    return for_each_split(w, [&](auto u, auto v) { return is_synchronizing(u, v, kind); });
}

bool none_synchronizing(const CyclicWord& w, SyncKind kind) {
    return for_each_split(w, [&](auto u, auto v) { return !is_synchronizing(u, v, kind); });
}

ClassMembership classify(const CyclicWord& w) {
    ClassMembership m;
    for_each_split(w, [&](auto u, auto v) {
        if (is_synchronizing(u, v, SyncKind::Plain))
            m.in_U = false;
        else
            m.in_S = false;
        if (is_synchronizing(u, v, SyncKind::Alt))
            m.in_U_alt = false;
        else
            m.in_S_alt = false;
        return m.in_S || m.in_S_alt || m.in_U || m.in_U_alt;
    });
    return m;
}

CyclicWord exchange(const CyclicWord& w, const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw DomainError("exchange needs non-empty factors");
    if (u.is_palindrome() || v.is_palindrome()) throw DomainError("exchange needs non-palindromic factors");
    if (canonicalize(concat(u, v)) != w) throw DomainError("uv does not represent the given cyclic word");
    return canonicalize(concat(u.reversed(), v));
}

// --- search -----------------------------------------------------------------

SearchReport search(const ParikhVector& content, const Alphabet& alphabet, ContinuantKind valuation,
                    Direction direction, unsigned jobs) {
    if (content.letters() != alphabet.size())
        throw DomainError("Parikh vector length does not match the alphabet");
    check_domain(alphabet, valuation);
    auto members = enumerate_class(content);
    std::vector<BigNat> values(members.size());
    const auto digits = alphabet.values();
    detail::parallel_for(members.size(), jobs, [&](std::size_t i) {
        std::vector<std::uint64_t> d;
        d.reserve(members[i].size());
        for (Symbol s : members[i].canonical()) d.push_back(digits[s]);
        values[i] = cyclic_continuant(d, valuation);
    });

    SearchReport report;
    report.parikh = content;
    report.valuation = valuation;
    report.direction = direction;
    report.class_size = members.size();
    const auto better = [&](const BigNat& a, const BigNat& b) { return direction == Direction::Max ? a > b : a < b; };
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (better(values[i], values[best])) best = i;
    report.value = values[best];
    for (std::size_t i = 0; i < members.size(); ++i)
        if (values[i] == report.value) report.optima.push_back(Optimum{members[i], classify(members[i])});

    const auto& opt = report.optima;
    report.unique_up_to_reversal =
        opt.size() == 1 || (opt.size() == 2 && opt[0].word.reversed() == opt[1].word);
    return report;
}

// --- exchange graph ---------------------------------------------------------

std::size_t ExchangeGraph::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& e : out_edges) n += e.size();
    return n;
}

std::vector<std::size_t> ExchangeGraph::in_degrees() const {
    std::vector<std::size_t> deg(vertices.size(), 0);
    for (const auto& e : out_edges)
        for (auto t : e) ++deg[t];
    return deg;
}

std::vector<std::size_t> ExchangeGraph::sources() const {
    std::vector<std::size_t> out;
    auto deg = in_degrees();
    for (std::size_t i = 0; i < deg.size(); ++i)
        if (deg[i] == 0) out.push_back(i);
    return out;
}

std::vector<std::size_t> ExchangeGraph::sinks() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < out_edges.size(); ++i)
        if (out_edges[i].empty()) out.push_back(i);
    return out;
}

std::optional<std::vector<std::size_t>> ExchangeGraph::topological_order() const {
    auto deg = in_degrees();
    std::queue<std::size_t> ready;
    for (std::size_t i = 0; i < deg.size(); ++i)
        if (deg[i] == 0) ready.push(i);
    std::vector<std::size_t> order;
    order.reserve(vertices.size());
    while (!ready.empty()) {
        auto v = ready.front();
        ready.pop();
        order.push_back(v);
        for (auto t : out_edges[v])
            if (--deg[t] == 0) ready.push(t);
    }
    if (order.size() != vertices.size()) return std::nullopt;
    return order;
}

std::optional<std::size_t> ExchangeGraph::index_of(const CyclicWord& w) const {
    auto key = w.symmetric_key();
    auto it = std::lower_bound(vertices.begin(), vertices.end(), key);
    if (it == vertices.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

ExchangeGraph build_exchange_graph(const ParikhVector& content, SyncKind kind, unsigned jobs) {
    ExchangeGraph g;
    g.parikh = content;
    g.kind = kind;
    std::set<CyclicWord> keys;
    for (auto& w : enumerate_class(content)) keys.insert(w.symmetric_key());
    g.vertices.assign(keys.begin(), keys.end());
    g.out_edges.resize(g.vertices.size());

    detail::parallel_for(g.vertices.size(), jobs, [&](std::size_t i) {
        std::set<std::size_t> targets;
        std::vector<Symbol> flipped;
        for_each_split(g.vertices[i], [&](auto u, auto v) {
            if (is_synchronizing(u, v, kind)) return true;
            flipped.assign(u.rbegin(), u.rend());
            flipped.insert(flipped.end(), v.begin(), v.end());
            auto target = g.index_of(canonicalize(Word(flipped)));
            targets.insert(*target);
            return true;
        });
        g.out_edges[i].assign(targets.begin(), targets.end());
    });
    return g;
}

std::string to_dot(const ExchangeGraph& g, const Alphabet& alphabet) {
    std::ostringstream os;
    os << "digraph exchange {\n";
    for (const auto& v : g.vertices) os << "  \"" << alphabet.format(v.canonical()) << "\";\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (auto t : g.out_edges[i])
            os << "  \"" << alphabet.format(g.vertices[i].canonical()) << "\" -> \""
               << alphabet.format(g.vertices[t].canonical()) << "\";\n";
    os << "}\n";
    return os.str();
}

// --- linear/cyclic bridge ---------------------------------------------------

LintocircResult check_lintocirc(const Word& x, Symbol j, const Alphabet& alphabet, SyncKind kind) {
    if (alphabet.size() == 0 || j + 1u != alphabet.size())
        throw DomainError("the appended letter must be the largest letter of the alphabet");
    if (x.empty()) throw DomainError("the linear word must be non-empty");
    for (Symbol s : x) {
        if (s == j) throw DomainError("the linear word must avoid the largest letter");
        if (s >= alphabet.size()) throw DomainError("symbol outside the alphabet");
    }

    LintocircResult r;
    r.cyclic_side = all_synchronizing(canonicalize(Word(x).push_back(j)), kind);

    r.linear_side = true;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i <= n && r.linear_side; ++i) {
        const Word u = x.slice(0, i).reversed();
        for (std::size_t len = 1; i + len <= n; ++len) {
            const Word v = x.slice(i, len);
            const Word w = x.slice(i + len, n - i - len);
            if (v.is_palindrome() || u == w) continue;
            const bool left = compare(v, v.reversed(), kind) == Ordering::Less;
            const bool right = compare(w, u, kind) == Ordering::Less;
            if (left != right) {
                r.linear_side = false;
                break;
            }
        }
    }
    return r;
}

}  // namespace cycont
