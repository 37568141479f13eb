#pragma once

#include <cstddef>
#include <cstdint>

namespace tinv {

/// Instance caps shared by every operation whose cost can blow up.
///
/// A single record is threaded through the library so that the CLI flags
/// (`--states-cap`, `--edges-cap`, `--search-cap`) reach every search.
struct Caps {
    std::size_t max_states = 10'000;
    std::size_t max_edges = 100'000;
    /// Bound on |domain|^2 for transitive closure and pairwise tables.
    std::size_t max_closure_cells = 100'000'000;
    /// Node budget for every backtracking / exhaustive search.
    std::size_t max_search_nodes = 20'000'000;
    /// Largest set on which exhaustive partition search is attempted.
    std::size_t max_exhaustive_set = 16;
    /// Largest vertex set for exact homogeneous-set search.
    std::size_t max_coloring_vertices = 20;
    /// Largest vertex set on which m-density is decided exhaustively.
    std::size_t max_density_set = 8;
    /// Bit width allowed for intermediate program values.
    std::size_t max_value_bits = 4096;
};

/// Budget for fast-growing hierarchy evaluation.
struct FghBudget {
    std::size_t max_result_bits = std::size_t{1} << 16;
    std::uint64_t max_recursive_steps = 1'000'000;
};

}  // namespace tinv
