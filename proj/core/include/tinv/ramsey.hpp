#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tinv/config.hpp"
#include "tinv/relation.hpp"

namespace tinv {

/// Total map from unordered pairs of a finite vertex set to 0..k-1.
///
/// Pairs are addressed either by vertex value (`color`) or by position in the
/// sorted vertex list (`at`). Storage is the lower triangle by position.
class Coloring {
public:
    Coloring() = default;
    /// `pair_colors` is indexed by pair_index(i, j) for positions i < j.
    Coloring(std::vector<State> vertices, unsigned colors, std::vector<std::uint8_t> pair_colors);

    static Coloring from_function(std::vector<State> vertices, unsigned colors,
                                  const std::function<unsigned(State, State)>& fn);
    static Coloring constant(std::vector<State> vertices, unsigned colors, unsigned value);

    static constexpr std::size_t pair_index(std::size_t i, std::size_t j) noexcept {
        return j * (j - 1) / 2 + i;
    }

    std::span<const State> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    unsigned colors() const noexcept { return colors_; }
    std::span<const std::uint8_t> pair_colors() const noexcept { return pairs_; }

    /// Color of the pair at positions i != j.
    unsigned at(std::size_t i, std::size_t j) const noexcept {
        return i < j ? pairs_[pair_index(i, j)] : pairs_[pair_index(j, i)];
    }
    /// Color of the pair {x, y} by vertex value; throws StateNotInDomain.
    unsigned color(State x, State y) const;
    std::size_t position(State x) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<State> vertices_;
    unsigned colors_ = 2;
    std::vector<std::uint8_t> pairs_;
};

struct HomogeneityWitness {
    enum class Kind { HomogeneousSet, WeaklyHomogeneousSequence };
    Kind kind = Kind::HomogeneousSet;
    std::vector<State> members;  // increasing
    unsigned color = 0;
};

bool is_homogeneous(const Coloring& c, std::span<const State> members);
/// Consecutive pairs of the increasing enumeration share one color.
bool is_weakly_homogeneous(const Coloring& c, std::span<const State> members);

/// Maximum monochromatic clique; lexicographically least among ties, then
/// least color. Exponential; guarded by caps.max_coloring_vertices.
HomogeneityWitness largest_homogeneous_set(const Coloring& c, const Caps& caps = {});

/// Longest increasing sequence whose consecutive pairs share a color
/// (DP over (vertex, color)); lexicographically least among ties.
HomogeneityWitness longest_weakly_homogeneous_sequence(const Coloring& c);

struct TransitivityVerdict {
    bool transitive = true;
    /// First (x, y, z), x < y < z, with P{x,y} = P{y,z} != P{x,z}.
    std::optional<std::array<State, 3>> counterexample;
};

TransitivityVerdict is_transitive_coloring(const Coloring& c);

struct PStarResult {
    Coloring coloring;
    /// Per pair (pair_index by position): the least merge point z used, or
    /// nullopt when the pair kept its original color.
    std::vector<std::optional<State>> merge_point;
    /// False if two merge points would assign different colors to a pair.
    bool well_defined = true;
    std::optional<std::array<State, 3>> conflict;  // (x, y, z') for the first clash
};

/// Derived coloring by induction over the positional gap:
/// P*{x_i, x_{i+1}} = P{x_i, x_{i+1}}; for wider gaps P*{x, y} = P*{x, z} for
/// the least z strictly between with P*{x, z} = P*{z, y}, else P{x, y}.
PStarResult p_star(const Coloring& c);

struct ChainAntichain {
    std::vector<State> chain;      // increasing along the order
    std::vector<State> antichain;  // sorted
};

/// `poset` is read as a strict partial order x < y for each edge (x, y).
/// Throws NotAPartialOrder with the violating pair or triple.
ChainAntichain chain_antichain(const FiniteRelation& poset, const Caps& caps = {});

/// R_i = {(x, y) : x > y and c{x, y} = i}, i < k.
std::vector<FiniteRelation> coloring_to_relations(const Coloring& c);

/// Coloring of positions of a transitive sequence for the union of `rels`:
/// pair {m, n}, m < n, gets min{i : seq[m] R_i seq[n]}.
/// Throws NotTransitiveSequence if `seq` is not transitive for the union.
Coloring sequence_to_coloring(std::span<const FiniteRelation> rels, std::span<const State> seq);

/// Enumerate every coloring of `n` vertices 0..n-1 with 2 colors, in
/// increasing order of the pair-color bit pattern.
void for_each_two_coloring(std::size_t n, const std::function<void(const Coloring&)>& visit);

}  // namespace tinv
