#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tinv/config.hpp"

namespace tinv {

/// States are natural numbers; their magnitude is meaningful because bounds
/// such as F_0(x) = x + 1 compare sequence lengths against state values.
using State = std::uint64_t;

/// An edge (x, y) is a single step from x to y. Every sequence in this
/// library follows edges forward: a_0, a_1, ... with (a_i, a_{i+1}) in R.
using Edge = std::pair<State, State>;

/// Sorted, duplicate-free list of states.
using StateSet = std::vector<State>;

StateSet make_state_set(std::vector<State> states);

/// Explicit edge set over a finite domain of naturals.
///
/// Immutable after construction. Edges are kept sorted lexicographically and
/// adjacency is stored in CSR form, indexed by the position of a state in the
/// sorted domain.
class FiniteRelation {
public:
    FiniteRelation() = default;
    FiniteRelation(std::vector<State> domain, std::vector<Edge> edges, const Caps& caps = {});

    std::span<const State> domain() const noexcept { return domain_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return domain_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    bool has_state(State x) const noexcept;
    bool contains(State x, State y) const noexcept;
    bool contains(const Edge& e) const noexcept { return contains(e.first, e.second); }

    std::optional<std::size_t> find_index(State x) const noexcept;
    /// Position of `x` in the domain; throws StateNotInDomain.
    std::size_t index(State x) const;
    State state(std::size_t i) const noexcept { return domain_[i]; }

    std::span<const std::uint32_t> successors(std::size_t i) const noexcept;
    std::span<const std::uint32_t> predecessors(std::size_t i) const noexcept;

    friend bool operator==(const FiniteRelation& a, const FiniteRelation& b) {
        return a.domain_ == b.domain_ && a.edges_ == b.edges_;
    }

private:
    std::vector<State> domain_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> succ_offsets_;
    std::vector<std::uint32_t> succ_;
    std::vector<std::uint32_t> pred_offsets_;
    std::vector<std::uint32_t> pred_;
};

/// A program P = (S, I, R). The accessible-state set is always derived.
class TransitionSystem {
public:
    TransitionSystem() = default;
    TransitionSystem(FiniteRelation relation, StateSet initial);

    const FiniteRelation& relation() const noexcept { return relation_; }
    const StateSet& initial() const noexcept { return initial_; }

private:
    FiniteRelation relation_;
    StateSet initial_;
};

struct SequenceWitness {
    std::size_t length = 0;  // counts elements, not edges
    std::vector<State> items;
};

struct WellFoundedVerdict {
    bool well_founded = false;
    /// Non-empty iff not well-founded: c_0 -> c_1 -> ... -> c_0, starting at
    /// its least state. Repeating it yields an infinite sequence.
    std::vector<State> cycle;
    /// Height of each domain state (aligned with domain()) when well-founded.
    std::vector<std::uint64_t> ranking;
};

FiniteRelation transitive_closure(const FiniteRelation& r, const Caps& caps = {});

StateSet accessible_states(const TransitionSystem& ts);

WellFoundedVerdict is_well_founded(const FiniteRelation& r);

/// Number of edges on the longest path from each state (aligned with the
/// domain), or nullopt where a cycle is reachable.
std::vector<std::optional<std::uint64_t>> path_heights(const FiniteRelation& r);

/// Longest sequence start = a_0 -> a_1 -> ... ; lexicographically least among
/// the longest. Throws NotWellFounded if a cycle is reachable from start.
SequenceWitness longest_decreasing_sequence(const FiniteRelation& r, State start);

/// Restriction to `states` (which must be a subset of the domain).
FiniteRelation restrict(const FiniteRelation& r, const StateSet& states);

/// Union over a common domain (the union of all input domains).
FiniteRelation union_of(std::span<const FiniteRelation> rels, const Caps& caps = {});

/// Same edges viewed over a larger domain.
FiniteRelation widen(const FiniteRelation& r, const StateSet& domain, const Caps& caps = {});

bool is_irreflexive(const FiniteRelation& r);
bool is_transitive(const FiniteRelation& r);
bool is_deterministic(const FiniteRelation& r, State* branching = nullptr);

/// Whether `items` follows edges step by step.
bool is_sequence(const FiniteRelation& r, std::span<const State> items);

}  // namespace tinv
