#pragma once

#include <optional>
#include <span>

#include "tinv/config.hpp"
#include "tinv/relation.hpp"

namespace tinv {

/// Whether `items` is a transitive R-sequence: x_i R x_j for all i < j.
/// Throws StateNotInDomain for foreign states.
bool is_h_member(const FiniteRelation& r, std::span<const State> items);

/// Longest transitive sequence (starting at `start` when given).
///
/// H(R) is never materialized: the search extends a prefix by candidates that
/// are successors of every element so far, pruning on depth + |candidates|.
/// The witness is the lexicographically least among the longest. Throws
/// NotHWellFounded on a reflexive point and InstanceCapExceeded when the
/// search exceeds caps.max_search_nodes.
SequenceWitness longest_h_sequence(const FiniteRelation& r, std::optional<State> start = std::nullopt,
                                   const Caps& caps = {});

struct HWellFoundedVerdict {
    bool h_well_founded = false;
    /// Set iff not H-well-founded: a state x with (x, x) in R.
    std::optional<State> reflexive_witness;
};

/// On a finite domain an infinite transitive sequence must repeat a state x,
/// which forces x R x; conversely x R x gives x, x, x, ... So this is
/// irreflexivity.
HWellFoundedVerdict is_h_well_founded(const FiniteRelation& r);

}  // namespace tinv
