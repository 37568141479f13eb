#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

#include "tinv/bounds.hpp"
#include "tinv/config.hpp"
#include "tinv/relation.hpp"

namespace tinv {

enum class Conclusion { Terminating, Nonterminating, InvalidInvariant };

std::string_view to_string(Conclusion c) noexcept;

struct DisjunctReport {
    bool well_founded = false;
    std::vector<State> cycle;
};

struct InvariantVerdict {
    StateSet accessible;
    bool covering_ok = false;
    std::optional<Edge> uncovered;  // least pair of R+ on Acc missing from every part
    std::vector<DisjunctReport> disjuncts;
    Conclusion conclusion = Conclusion::InvalidInvariant;
    /// Cycle of R restricted to Acc, when there is one.
    std::vector<State> cycle;
    /// Longest computation (in states) from each accessible state, when
    /// terminating; aligned with `accessible`.
    std::vector<std::uint64_t> longest;
};

/// Checks R+ on Acc x Acc against the union of `parts` and the
/// well-foundedness of every part. Terminating needs both; otherwise the
/// verdict is Nonterminating exactly when R on Acc has a cycle.
InvariantVerdict check_invariant(const TransitionSystem& ts, std::span<const FiniteRelation> parts,
                                 const Caps& caps = {});

/// Splits the edges of R+ on Acc into at most k acyclic classes (edges in
/// lexicographic order, lowest color first). nullopt when no split exists.
std::optional<std::vector<FiniteRelation>> find_invariant(const TransitionSystem& ts, unsigned k,
                                                          const Caps& caps = {});

struct RankTable {
    std::vector<State> states;
    /// rank[i][p]: rank_i of states[p], i = 0..k.
    std::vector<std::vector<std::uint64_t>> rank;
    /// (x, y, d(x, y)) for every x T_< y, d counting edges.
    std::vector<std::tuple<State, State, std::uint64_t>> distance;
    /// States whose rank was clipped by the size of their forward cone.
    std::vector<State> cap_binding;
};

struct Decomposition {
    FiniteRelation closure;
    FiniteRelation descending;         // T_>
    std::vector<FiniteRelation> parts;  // T_0 .. T_k
    std::optional<RankTable> ranks;     // bounded variant only
    /// Validation of the output, never assumed.
    bool covers = false;
    std::vector<Edge> unassigned;
    std::vector<BoundVerdict> part_checks;  // T_>, T_0, ..., T_k against F_0
};

/// Rank-based split of a deterministic F_k-bounded relation into F_0-bounded
/// parts. Throws NotDeterministic or NotBounded.
Decomposition decompose_bounded(const FiniteRelation& r, unsigned k, const Caps& caps = {});

/// Distance-based split of an F_k-bounded relation into F_0-H-bounded parts:
/// x T_i y when i is least with d(x, y) < F_i(x). Throws NotBounded.
Decomposition decompose_h_bounded(const FiniteRelation& r, unsigned k, const Caps& caps = {});

/// F_j restricted to the domain of r, saturated just above |domain|.
StateFunction fgh_on_domain(const FiniteRelation& r, unsigned j);

struct DepthSplit;

struct DepthWitness {
    unsigned depth = 0;
    bool holds = false;
    FiniteRelation relation;
    /// depth 0: the bound check.
    std::optional<BoundVerdict> base;
    /// depth > 0: one split per maximal connected set, or the first set that
    /// admits no split.
    std::vector<DepthSplit> splits;
    StateSet failing_set;
};

struct DepthSplit {
    StateSet set;
    std::vector<DepthWitness> parts;  // two entries
};

/// n-depth linear boundedness (H-variant: homogeneous sets, H-bounds).
/// Each connected set S' must have R+ on S' covered by two parts of depth
/// n - 1; maximal sets suffice because both properties pass to subsets.
/// Throws InstanceCapExceeded above caps.max_search_nodes.
DepthWitness depth_linearly_bounded(const FiniteRelation& r, unsigned n, bool h_variant, const Caps& caps = {});

/// Maximal sets of pairwise comparable states: under R+ (linearly connected)
/// or under R itself (homogeneous).
std::vector<StateSet> maximal_connected_sets(const FiniteRelation& r, bool homogeneous);

}  // namespace tinv
