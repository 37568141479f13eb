#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tinv/config.hpp"
#include "tinv/relation.hpp"

namespace tinv {

/// f : domain -> N. Values saturate at UINT64_MAX, which is harmless: every
/// comparison here is against a sequence length bounded by the domain size.
struct StateFunction {
    enum class Provenance { UserSupplied, Derived };

    std::map<State, std::uint64_t> table;
    Provenance provenance = Provenance::UserSupplied;

    static StateFunction from(const FiniteRelation& r, const std::function<std::uint64_t(State)>& fn,
                              Provenance p = Provenance::Derived);
    static StateFunction constant(const FiniteRelation& r, std::uint64_t value);

    /// Throws PartialFunction when x is not tabulated.
    std::uint64_t operator()(State x) const;
};

/// The single orientation rule for weights: along a step x -> y the weight
/// strictly drops.
constexpr bool weight_step_ok(std::uint64_t f_from, std::uint64_t f_to) noexcept { return f_to < f_from; }

struct WeightVerdict {
    bool ok = true;
    std::optional<Edge> violation;  // least offending edge
};

struct BoundVerdict {
    bool ok = true;
    /// A sequence from its first element whose length exceeds f there.
    std::vector<State> witness;
    /// The violation comes from a cycle (sequences of every length exist);
    /// `witness` is then a pumped prefix, not necessarily longer than f.
    bool unbounded = false;
};

struct HeightVerdict {
    bool height_omega = false;
    std::optional<StateFunction> weight;
    std::vector<State> cycle;
};

WeightVerdict is_weight_function(const FiniteRelation& r, const StateFunction& f);

/// Every sequence a_0 -> a_1 -> ... -> a_{l-1} has l <= f(a_0). States are
/// examined in increasing order; the first violation is reported.
BoundVerdict is_bound(const FiniteRelation& r, const StateFunction& f);

/// As is_bound, restricted to transitive sequences.
BoundVerdict is_h_bound(const FiniteRelation& r, const StateFunction& f, const Caps& caps = {});

/// Height of each state (edges on its longest path); the least weight
/// function, and height + 1 <= f. Throws NotABound if f is not a bound.
StateFunction weight_from_bound(const FiniteRelation& r, const StateFunction& f);

HeightVerdict has_height_omega(const FiniteRelation& r);

}  // namespace tinv
