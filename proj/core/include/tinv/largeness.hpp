#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tinv/config.hpp"
#include "tinv/hierarchy.hpp"
#include "tinv/ramsey.hpp"
#include "tinv/relation.hpp"

namespace tinv {

/// Partition tree for a k-largeness claim. A level-0 node is a non-empty leaf;
/// a level-(j+1) node splits block \ {min block} into at least min(block)
/// children of level j.
struct LargenessCertificate {
    StateSet block;
    unsigned level = 0;
    std::vector<LargenessCertificate> children;
};

enum class LargenessMode { Exhaustive, Intervals };

struct LargenessVerdict {
    bool large = false;
    std::optional<LargenessCertificate> certificate;
};

/// min X < |X|. Throws EmptySet.
bool is_one_large(const StateSet& x);

/// Exhaustive mode searches every set partition (|x| <= caps.max_exhaustive_set);
/// intervals mode only uses runs of the sorted enumeration and has no size
/// limit. Throws EmptySet / InstanceCapExceeded.
LargenessVerdict is_k_large(const StateSet& x, unsigned k, LargenessMode mode = LargenessMode::Exhaustive,
                            const Caps& caps = {});

/// Structural check of a certificate against the definition.
bool check_largeness_certificate(const LargenessCertificate& cert);

/// Size lower bound for a k-large set whose minimum is at least m (m >= 1),
/// saturating at UINT64_MAX.
std::uint64_t min_large_size(unsigned k, std::uint64_t m);

struct LargeSubset {
    StateSet members;
    LargenessCertificate certificate;
};

/// A smallest k-large subset, lexicographically least among those; nullopt if
/// none exists. Throws InstanceCapExceeded when a candidate size passes
/// caps.max_exhaustive_set or the enumeration passes caps.max_search_nodes.
std::optional<LargeSubset> find_k_large_subset(const StateSet& x, unsigned k, const Caps& caps = {});

struct DensityWitness {
    std::uint64_t coloring_bits = 0;  // canonical: the first pair is color 0
    StateSet chosen;                  // homogeneous (weakly homogeneous) subset
    std::size_t sub = 0;              // index into DensityCertificate::subs
};

struct DensityCertificate {
    StateSet set;
    unsigned m = 0;
    bool weak = false;
    bool dense = false;
    /// True when every canonical coloring was listed with its witness. Larger
    /// sets are decided by a counter-coloring search and carry no table.
    bool tabulated = false;
    std::vector<DensityWitness> table;
    std::vector<DensityCertificate> subs;
    /// A coloring with no suitable subset, when not dense.
    std::optional<Coloring> counter;
};

/// 0-dense: |X| > min X. (m+1)-dense: every 2-coloring of [X]^2 has a
/// homogeneous (weakly homogeneous when `weak`) m-dense subset.
/// Throws InstanceCapExceeded above caps.max_density_set elements.
DensityCertificate is_m_dense(const StateSet& x, unsigned m, bool weak, const Caps& caps = {});

bool check_density_certificate(const DensityCertificate& cert);

/// Least y <= search_cap with (x, y] m-w-dense. Throws NotFoundWithinCap,
/// also when the scan reaches sets too big to decide.
std::uint64_t ww(unsigned m, std::uint64_t x, std::uint64_t search_cap, const Caps& caps = {});
/// As ww, with homogeneous subsets.
std::uint64_t hh(unsigned m, std::uint64_t x, std::uint64_t search_cap, const Caps& caps = {});

struct XinResult {
    /// levels[i] holds x^i_0, x^i_1, ... as far as they are defined inside
    /// the window; later entries are undefined.
    std::vector<std::vector<State>> levels;
    /// P{x, y} = max{i < k : some x^i_j lies in [x, y)}.
    Coloring coloring;
};

/// x^i_0 = min X, x^i_{n+1} = least y in L_i with [x^i_n, y) i-large, where
/// L_0 = X and L_i collects the x^{i-1}_n. Intervals are taken inside X.
XinResult xin_construction(const StateSet& x, unsigned k, const Caps& caps = {});

/// min{|X| : X k-large inside {f(x) : x > a}} + 1 over the tabulated window,
/// or nullopt when the window holds no k-large subset.
std::optional<std::uint64_t> f_k_window(unsigned k, const TabulatedFunction& f, std::uint64_t a,
                                        const Caps& caps = {});

struct IntervalLargeness {
    bool large = false;
    std::uint64_t upper = 0;  // F_{k,f}(n)
    StateSet members;         // [n, upper) intersected with X
    LargenessMode mode = LargenessMode::Exhaustive;
};

/// Checks that [n, F_{k,f}(n)) of X is k-large, f enumerating the prefix.
/// Throws OutsideTable when the prefix is too short and InternalInconsistency
/// if the check fails.
IntervalLargeness verify_interval_largeness(unsigned k, const StateSet& prefix, std::uint64_t n,
                                            const Caps& caps = {}, const FghBudget& budget = {});

}  // namespace tinv
