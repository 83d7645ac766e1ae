#pragma once

// Synchronizing factorizations, the four membership classes, exchange steps,
// exhaustive extremal search over a cyclic Abelian class and the directed
// exchange graph on a symmetric class.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cycont/continuants.hpp"
#include "cycont/words.hpp"

namespace cycont {

using SyncKind = OrderKind;

enum class Direction { Max, Min };

const char* to_string(Direction d) noexcept;

// u ≺ u* iff v ≺ v* under the order selected by kind. Both arguments must be
// non-palindromic; throws DomainError otherwise.
bool is_synchronizing(std::span<const Symbol> u, std::span<const Symbol> v, SyncKind kind);
inline bool is_synchronizing(const Word& u, const Word& v, SyncKind kind) {
    return is_synchronizing(u.span(), v.span(), kind);
}

// Membership in S / S_alt (all factorizations synchronizing) and U / U_alt
// (none synchronizing). A word without any admissible factorization is in all
// four.
struct ClassMembership {
    bool in_S = true;
    bool in_S_alt = true;
    bool in_U = true;
    bool in_U_alt = true;

    friend bool operator==(const ClassMembership&, const ClassMembership&) = default;
};

// Short-circuiting predicates.
bool all_synchronizing(const CyclicWord& w, SyncKind kind);
bool none_synchronizing(const CyclicWord& w, SyncKind kind);

ClassMembership classify(const CyclicWord& w);

// Class of u*v, where uv must be a representative of w with u, v non-palindromic.
CyclicWord exchange(const CyclicWord& w, const Word& u, const Word& v);

struct Optimum {
    CyclicWord word;
    ClassMembership certificate;
};

struct SearchReport {
    ParikhVector parikh;
    ContinuantKind valuation = ContinuantKind::Regular;
    Direction direction = Direction::Max;
    BigNat value;
    std::vector<Optimum> optima;  // sorted by canonical representative
    bool unique_up_to_reversal = false;
    std::size_t class_size = 0;
};

// Evaluates the cyclic valuation on every member of the class. Ties are kept.
// `jobs` > 1 evaluates members on worker threads; the report is identical.
SearchReport search(const ParikhVector& content, const Alphabet& alphabet, ContinuantKind valuation,
                    Direction direction, unsigned jobs = 1);

// Vertices are the reversal-identified pairs {ω, ω*} of a symmetric class,
// each held by its smaller canonical representative; an edge ω → ω' is drawn
// for each non-synchronizing factorization ω = uv with ω' the class of u*v.
struct ExchangeGraph {
    ParikhVector parikh;
    SyncKind kind = SyncKind::Plain;
    std::vector<CyclicWord> vertices;                 // sorted
    std::vector<std::vector<std::size_t>> out_edges;  // sorted, duplicate-free

    std::size_t edge_count() const noexcept;
    std::vector<std::size_t> in_degrees() const;
    std::vector<std::size_t> sources() const;
    std::vector<std::size_t> sinks() const;
    // Kahn order; empty optional if the graph has a cycle.
    std::optional<std::vector<std::size_t>> topological_order() const;
    bool acyclic() const { return topological_order().has_value(); }
    std::optional<std::size_t> index_of(const CyclicWord& w) const;
};

ExchangeGraph build_exchange_graph(const ParikhVector& content, SyncKind kind, unsigned jobs = 1);

std::string to_dot(const ExchangeGraph& g, const Alphabet& alphabet);

struct LintocircResult {
    bool cyclic_side = false;
    bool linear_side = false;
};

// For j the largest letter and x a non-empty word avoiding j: cyclic_side is
// membership of the class of xj in S (resp. S_alt); linear_side is the
// statement that every x = u*vw with v ≠ v*, u ≠ w has v ≺ v* ⇔ w ≺ u.
LintocircResult check_lintocirc(const Word& x, Symbol j, const Alphabet& alphabet, SyncKind kind);

}  // namespace cycont
