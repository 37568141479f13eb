#include "tinv/largeness.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "tinv/error.hpp"

namespace tinv {
namespace {

using Mask = std::uint64_t;
constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kInf / a) return kInf;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return b > kInf - a ? kInf : a + b; }

std::size_t low(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

// Partition search over subsets of a fixed value list (at most 64 values),
// memoized across calls so that many subsets of one window share work.
class ExhaustiveLargeness {
public:
    ExhaustiveLargeness(std::vector<State> values, std::size_t node_budget)
        : vals_(std::move(values)), budget_(node_budget) {}

    bool large(Mask mask, unsigned level) {
        if (mask == 0) return false;
        if (level == 0) return true;
        const Key key = memo_key(mask, level, 0);
        if (auto it = large_memo_.find(key); it != large_memo_.end()) return it->second;
        const std::size_t m = low(mask);
        const Mask rest = mask & ~(Mask{1} << m);
        bool ok;
        if (rest == 0) {
            ok = vals_[m] == 0;
        } else {
            const std::uint64_t need = std::max<std::uint64_t>(vals_[m], 1);
            ok = need <= static_cast<std::uint64_t>(std::popcount(rest)) && part(rest, level - 1, need);
        }
        large_memo_.emplace(key, ok);
        return ok;
    }

    LargenessCertificate certificate(Mask mask, unsigned level) {
        LargenessCertificate node;
        node.level = level;
        for (Mask b = mask; b; b &= b - 1) node.block.push_back(vals_[low(b)]);
        if (level == 0) return node;
        const std::size_t m = low(mask);
        Mask rest = mask & ~(Mask{1} << m);
        std::uint64_t need = std::max<std::uint64_t>(vals_[m], 1);
        while (rest) {
            Mask chosen = part_memo_.at(memo_key(rest, level - 1, need));
            node.children.push_back(certificate(chosen, level - 1));
            rest &= ~chosen;
            need = need > 1 ? need - 1 : 1;
        }
        return node;
    }

private:
    struct Key {
        Mask mask;
        unsigned level;
        std::uint64_t need;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            std::uint64_t h = k.mask * 0x9E3779B97F4A7C15ULL;
            h ^= (static_cast<std::uint64_t>(k.level) << 32 | (k.need & 0xffffffffULL)) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    static Key memo_key(Mask mask, unsigned level, std::uint64_t need) { return {mask, level, need}; }

    // Can `s` be split into at least `need` blocks, each `level`-large?
    // On success the block holding the least element is stored for
    // certificate reconstruction.
    bool part(Mask s, unsigned level, std::uint64_t need) {
        if (++nodes_ > budget_) {
            fail(ErrorKind::InstanceCapExceeded,
                 "partition search exceeded " + std::to_string(budget_) + " nodes");
        }
        const std::uint64_t size = static_cast<std::uint64_t>(std::popcount(s));
        // Every block has minimum at least min(s), hence at least
        // min_large_size(level, min(s)) elements.
        if (sat_mul(need, min_large_size(level, vals_[low(s)])) > size) return false;
        const Key key = memo_key(s, level, need);
        if (auto it = part_memo_.find(key); it != part_memo_.end()) return it->second != 0;
        const Mask first = s & (~s + 1);
        const Mask others = s & ~first;
        bool ok = false;
        Mask chosen = 0;
        Mask sub = 0;
        do {
            const Mask block = first | sub;
            if (large(block, level)) {
                const Mask rest = s & ~block;
                if (rest == 0 ? need <= 1 : part(rest, level, need > 1 ? need - 1 : 1)) {
                    ok = true;
                    chosen = block;
                    break;
                }
            }
            sub = (sub - others) & others;
        } while (sub != 0);
        part_memo_.emplace(key, ok ? chosen : 0);
        return ok;
    }

    std::vector<State> vals_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::unordered_map<Key, bool, KeyHash> large_memo_;
    std::unordered_map<Key, Mask, KeyHash> part_memo_;
};

// Interval partitions of a sorted list. end(j, i) is one past the shortest
// j-large run starting at i. Blocks below the top level never contain 0, and
// such blocks stay j-large when larger elements are appended (they go into the
// last sub-block), so a run [s, t) with a[s] >= 1 is j-large iff
// end(j, s) <= t.
class IntervalEngine {
public:
    explicit IntervalEngine(std::span<const State> a) : a_(a), n_(a.size()) {}

    std::uint64_t end(unsigned level, std::uint64_t i) {
        if (i >= n_) return kInf;
        if (level == 0) return i + 1;
        if (a_[i] == 0) return i + 1;
        if (level == 1) {
            const std::uint64_t e = sat_add(i + 1, a_[i]);
            return e > n_ ? kInf : e;
        }
        if (memo_.size() < level + 1) memo_.resize(level + 1);
        auto& table = memo_[level];
        if (table.empty()) table.assign(n_, 0);
        if (table[i] != 0) return table[i];
        std::uint64_t p = i + 1;
        for (std::uint64_t b = 0; b < a_[i] && p != kInf; ++b) p = end(level - 1, p);
        if (p != kInf && p > n_) p = kInf;
        table[i] = p;
        return p;
    }

    bool run_large(std::uint64_t s, std::uint64_t t, unsigned level) {
        if (s >= t) return false;
        if (level == 0) return true;
        if (a_[s] == 0) return t == s + 1 || end(level - 1, s + 1) <= t;
        return end(level, s) <= t;
    }

    LargenessCertificate certificate(std::uint64_t s, std::uint64_t t, unsigned level) {
        LargenessCertificate node;
        node.level = level;
        node.block.assign(a_.begin() + static_cast<std::ptrdiff_t>(s), a_.begin() + static_cast<std::ptrdiff_t>(t));
        if (level == 0) return node;
        if (a_[s] == 0) {
            if (t > s + 1) node.children.push_back(certificate(s + 1, t, level - 1));
            return node;
        }
        std::uint64_t p = s + 1;
        for (std::uint64_t b = 0; b < a_[s]; ++b) {
            const std::uint64_t q = b + 1 == a_[s] ? t : end(level - 1, p);
            node.children.push_back(certificate(p, q, level - 1));
            p = q;
        }
        return node;
    }

private:
    std::span<const State> a_;
    std::uint64_t n_;
    std::vector<std::vector<std::uint64_t>> memo_;
};

bool cert_ok(const LargenessCertificate& c) {
    if (c.block.empty() || !std::is_sorted(c.block.begin(), c.block.end()) ||
        std::adjacent_find(c.block.begin(), c.block.end()) != c.block.end()) {
        return false;
    }
    if (c.level == 0) return c.children.empty();
    const State m = c.block.front();
    if (c.children.size() < m) return false;
    StateSet covered;
    for (const auto& child : c.children) {
        if (child.level + 1 != c.level || !cert_ok(child)) return false;
        covered.insert(covered.end(), child.block.begin(), child.block.end());
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) return false;
    return std::equal(covered.begin(), covered.end(), c.block.begin() + 1, c.block.end());
}

void require_set(const StateSet& x) {
    if (x.empty()) fail(ErrorKind::EmptySet, "the set is empty");
    if (!std::is_sorted(x.begin(), x.end()) || std::adjacent_find(x.begin(), x.end()) != x.end()) {
        fail(ErrorKind::InvalidArgument, "sets must be strictly increasing");
    }
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

std::uint64_t min_large_size(unsigned k, std::uint64_t m) {
    if (k == 0 || m == 0) return 1;
    return sat_add(1, sat_mul(m, min_large_size(k - 1, m + 1)));
}

bool is_one_large(const StateSet& x) {
    if (x.empty()) fail(ErrorKind::EmptySet, "the set is empty");
    return *std::min_element(x.begin(), x.end()) < x.size();
}

LargenessVerdict is_k_large(const StateSet& x, unsigned k, LargenessMode mode, const Caps& caps) {
    require_set(x);
    LargenessVerdict v;
    if (mode == LargenessMode::Intervals) {
        IntervalEngine engine(x);
        v.large = engine.run_large(0, x.size(), k);
        if (v.large) v.certificate = engine.certificate(0, x.size(), k);
        return v;
    }
    if (x.size() > caps.max_exhaustive_set || x.size() > 64) {
        fail(ErrorKind::InstanceCapExceeded, "exhaustive largeness check on " + std::to_string(x.size()) +
                                                 " elements exceeds cap " +
                                                 std::to_string(caps.max_exhaustive_set));
    }
    ExhaustiveLargeness engine(x, caps.max_search_nodes);
    const Mask all = full_mask(x.size());
    v.large = engine.large(all, k);
    if (v.large) v.certificate = engine.certificate(all, k);
    return v;
}

bool check_largeness_certificate(const LargenessCertificate& cert) { return cert_ok(cert); }

std::optional<LargeSubset> find_k_large_subset(const StateSet& x, unsigned k, const Caps& caps) {
    require_set(x);
    const std::size_t n = x.size();
    if (n > 64) fail(ErrorKind::InstanceCapExceeded, "subset search is limited to 64 elements");
    ExhaustiveLargeness engine(x, caps.max_search_nodes);
    std::size_t visited = 0;
    for (std::size_t size = 1; size <= n; ++size) {
        if (min_large_size(k, x[0]) > size) continue;
        if (size > caps.max_exhaustive_set) {
            fail(ErrorKind::InstanceCapExceeded, "candidate subsets of size " + std::to_string(size) +
                                                     " exceed the exhaustive cap " +
                                                     std::to_string(caps.max_exhaustive_set));
        }
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            // The least element decides the size bound; larger minima only
            // need more elements.
            if (min_large_size(k, x[idx[0]]) > size) break;
            if (++visited > caps.max_search_nodes) {
                fail(ErrorKind::InstanceCapExceeded, "subset enumeration exceeded " +
                                                         std::to_string(caps.max_search_nodes) + " candidates");
            }
            Mask mask = 0;
            for (std::size_t i : idx) mask |= Mask{1} << i;
            if (engine.large(mask, k)) {
                LargeSubset out;
                for (std::size_t i : idx) out.members.push_back(x[i]);
                out.certificate = engine.certificate(mask, k);
                return out;
            }
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

namespace {

struct DensitySearch {
    std::size_t n;
    std::size_t pairs;
    // Per candidate subset: the pair indices that must share a color.
    std::vector<std::vector<std::size_t>> constraints;
    // Candidates grouped by their largest pair index.
    std::vector<std::vector<std::size_t>> closing;
    std::vector<std::uint8_t> colors;
    std::size_t nodes = 0;
    std::size_t budget;
    bool trivially_dense = false;

    bool monochrome(std::size_t c) const {
        const auto& pr = constraints[c];
        for (std::size_t p : pr)
            if (colors[p] != colors[pr.front()]) return false;
        return true;
    }

    // Looks for a coloring making every candidate non-homogeneous.
    bool counter(std::size_t p) {
        if (++nodes > budget) {
            fail(ErrorKind::InstanceCapExceeded, "density search exceeded " + std::to_string(budget) + " nodes");
        }
        if (p == pairs) return true;
        for (std::uint8_t col = 0; col < (p == 0 ? 1 : 2); ++col) {
            colors[p] = col;
            bool blocked = false;
            for (std::size_t c : closing[p])
                if (monochrome(c)) {
                    blocked = true;
                    break;
                }
            if (!blocked && counter(p + 1)) return true;
        }
        return false;
    }
};

std::vector<std::size_t> pair_list(const std::vector<std::size_t>& pos, bool weak) {
    std::vector<std::size_t> out;
    if (weak) {
        for (std::size_t i = 0; i + 1 < pos.size(); ++i) out.push_back(Coloring::pair_index(pos[i], pos[i + 1]));
    } else {
        for (std::size_t j = 1; j < pos.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) out.push_back(Coloring::pair_index(pos[i], pos[j]));
    }
    return out;
}

}  // namespace

DensityCertificate is_m_dense(const StateSet& x, unsigned m, bool weak, const Caps& caps) {
    DensityCertificate cert;
    cert.set = x;
    cert.m = m;
    cert.weak = weak;
    if (!std::is_sorted(x.begin(), x.end()) || std::adjacent_find(x.begin(), x.end()) != x.end()) {
        fail(ErrorKind::InvalidArgument, "sets must be strictly increasing");
    }
    if (m == 0) {
        cert.dense = !x.empty() && x.size() > x.front();
        return cert;
    }
    const std::size_t n = x.size();
    if (n > caps.max_density_set) {
        fail(ErrorKind::InstanceCapExceeded, "density check on " + std::to_string(n) +
                                                 " elements exceeds cap " + std::to_string(caps.max_density_set));
    }
    // Candidate subsets that are (m-1)-dense, smallest first then
    // lexicographic, so the first match is the reported witness.
    std::vector<std::vector<std::size_t>> cands;
    for (Mask mask = 1; mask <= full_mask(n); ++mask) {
        std::vector<std::size_t> pos;
        for (Mask b = mask; b; b &= b - 1) pos.push_back(low(b));
        cands.push_back(std::move(pos));
    }
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::vector<std::size_t>> dense_cands;
    std::vector<DensityCertificate> dense_certs;
    for (auto& pos : cands) {
        StateSet y;
        for (std::size_t p : pos) y.push_back(x[p]);
        auto sub = is_m_dense(y, m - 1, weak, caps);
        if (!sub.dense) continue;
        dense_cands.push_back(std::move(pos));
        dense_certs.push_back(std::move(sub));
    }

    DensitySearch search;
    search.n = n;
    search.pairs = n * (n ? n - 1 : 0) / 2;
    search.budget = caps.max_search_nodes;
    search.closing.assign(search.pairs, {});
    for (std::size_t c = 0; c < dense_cands.size(); ++c) {
        auto pr = pair_list(dense_cands[c], weak);
        if (pr.empty()) search.trivially_dense = true;
        search.constraints.push_back(pr);
        if (!pr.empty()) search.closing[*std::max_element(pr.begin(), pr.end())].push_back(c);
    }
    search.colors.assign(search.pairs, 0);

    auto coloring_of = [&](const std::vector<std::uint8_t>& cols) {
        return Coloring(std::vector<State>(x.begin(), x.end()), 2, cols);
    };

    if (search.pairs <= 12) {
        cert.tabulated = true;
        const std::uint64_t count = search.pairs == 0 ? 1 : std::uint64_t{1} << (search.pairs - 1);
        std::vector<std::size_t> used(dense_cands.size(), SIZE_MAX);
        for (std::uint64_t bits = 0; bits < count; ++bits) {
            for (std::size_t p = 0; p < search.pairs; ++p)
                search.colors[p] = p == 0 ? 0 : static_cast<std::uint8_t>((bits >> (p - 1)) & 1U);
            std::optional<std::size_t> found;
            for (std::size_t c = 0; c < dense_cands.size() && !found; ++c)
                if (search.constraints[c].empty() || search.monochrome(c)) found = c;
            if (!found) {
                cert.dense = false;
                cert.table.clear();
                cert.subs.clear();
                cert.counter = coloring_of(search.colors);
                return cert;
            }
            if (used[*found] == SIZE_MAX) {
                used[*found] = cert.subs.size();
                cert.subs.push_back(dense_certs[*found]);
            }
            DensityWitness w;
            w.coloring_bits = bits << 1;
            for (std::size_t p : dense_cands[*found]) w.chosen.push_back(x[p]);
            w.sub = used[*found];
            cert.table.push_back(std::move(w));
        }
        cert.dense = true;
        return cert;
    }

    if (search.trivially_dense) {
        cert.dense = true;
        return cert;
    }
    if (search.counter(0)) {
        cert.dense = false;
        cert.counter = coloring_of(search.colors);
    } else {
        cert.dense = true;
    }
    return cert;
}

bool check_density_certificate(const DensityCertificate& c) {
    if (c.m == 0) return c.dense == (!c.set.empty() && c.set.size() > c.set.front());
    const std::size_t n = c.set.size();
    const std::size_t pairs = n * (n ? n - 1 : 0) / 2;
    if (!c.dense) {
        if (!c.counter) return false;
        // Refute every candidate by brute force.
        for (Mask mask = 1; mask <= full_mask(n); ++mask) {
            StateSet y;
            for (Mask b = mask; b; b &= b - 1) y.push_back(c.set[low(b)]);
            bool hom = c.weak ? is_weakly_homogeneous(*c.counter, y) : is_homogeneous(*c.counter, y);
            if (hom && is_m_dense(y, c.m - 1, c.weak).dense) return false;
        }
        return true;
    }
    if (!c.tabulated) return true;
    const std::uint64_t count = pairs == 0 ? 1 : std::uint64_t{1} << (pairs - 1);
    if (c.table.size() != count) return false;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto& w = c.table[i];
        if (w.coloring_bits != (i << 1) || w.sub >= c.subs.size()) return false;
        const auto& sub = c.subs[w.sub];
        if (sub.set != w.chosen || sub.m + 1 != c.m || sub.weak != c.weak || !sub.dense) return false;
        if (!check_density_certificate(sub)) return false;
        if (!std::includes(c.set.begin(), c.set.end(), w.chosen.begin(), w.chosen.end())) return false;
        std::vector<std::uint8_t> cols(pairs);
        for (std::size_t p = 0; p < pairs; ++p) cols[p] = static_cast<std::uint8_t>((w.coloring_bits >> p) & 1U);
        Coloring col(c.set, 2, cols);
        bool hom = c.weak ? is_weakly_homogeneous(col, w.chosen) : is_homogeneous(col, w.chosen);
        if (!hom) return false;
    }
    return true;
}

namespace {

std::uint64_t density_threshold(unsigned m, std::uint64_t x, std::uint64_t search_cap, bool weak,
                                const Caps& caps) {
    const char* name = weak ? "WW" : "HH";
    if (m == 0) {
        // (x, y] has y - x elements and minimum x + 1.
        const std::uint64_t y = sat_add(sat_mul(2, x), 2);
        if (y > search_cap) {
            fail(ErrorKind::NotFoundWithinCap, std::string(name) + "_0(" + std::to_string(x) +
                                                   ") not found within cap " + std::to_string(search_cap));
        }
        return y;
    }
    for (std::uint64_t y = x + 1; y <= search_cap; ++y) {
        if (y - x > caps.max_density_set) {
            fail(ErrorKind::NotFoundWithinCap,
                 std::string(name) + "_" + std::to_string(m) + "(" + std::to_string(x) + ") not found up to " +
                     std::to_string(y - 1) + " (cap " + std::to_string(search_cap) + ", larger intervals exceed " +
                     std::to_string(caps.max_density_set) + " elements)");
        }
        StateSet interval;
        for (std::uint64_t v = x + 1; v <= y; ++v) interval.push_back(v);
        if (is_m_dense(interval, m, weak, caps).dense) return y;
    }
    fail(ErrorKind::NotFoundWithinCap, std::string(name) + "_" + std::to_string(m) + "(" + std::to_string(x) +
                                           ") not found within cap " + std::to_string(search_cap));
}

}  // namespace

std::uint64_t ww(unsigned m, std::uint64_t x, std::uint64_t search_cap, const Caps& caps) {
    return density_threshold(m, x, search_cap, true, caps);
}

std::uint64_t hh(unsigned m, std::uint64_t x, std::uint64_t search_cap, const Caps& caps) {
    return density_threshold(m, x, search_cap, false, caps);
}

XinResult xin_construction(const StateSet& x, unsigned k, const Caps& caps) {
    require_set(x);
    if (k == 0) fail(ErrorKind::InvalidArgument, "at least one color is required");
    XinResult out;
    out.levels.push_back(x);
    IntervalEngine intervals(x);
    auto run_large = [&](std::size_t s, std::size_t t, unsigned level) {
        if (t - s <= caps.max_exhaustive_set) {
            StateSet run(x.begin() + static_cast<std::ptrdiff_t>(s), x.begin() + static_cast<std::ptrdiff_t>(t));
            return is_k_large(run, level, LargenessMode::Exhaustive, caps).large;
        }
        return intervals.run_large(s, t, level);
    };
    for (unsigned i = 1; i < k; ++i) {
        const auto& prev = out.levels[i - 1];
        std::vector<State> cur{x.front()};
        std::size_t start = 0;  // position of the current x^i_n in x
        for (State y : prev) {
            if (y <= cur.back()) continue;
            const std::size_t end = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), y) - x.begin());
            if (run_large(start, end, i)) {
                cur.push_back(y);
                start = end;
            }
        }
        out.levels.push_back(std::move(cur));
    }
    const std::size_t n = x.size();
    std::vector<unsigned> level_of(n, 0);
    for (unsigned i = 1; i < k; ++i)
        for (State v : out.levels[i])
            level_of[static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), v) - x.begin())] = i;
    std::vector<std::uint8_t> pairs(n * (n ? n - 1 : 0) / 2);
    for (std::size_t p = 0; p < n; ++p) {
        unsigned best = 0;
        for (std::size_t q = p + 1; q < n; ++q) {
            best = std::max(best, level_of[q - 1]);
            pairs[Coloring::pair_index(p, q)] = static_cast<std::uint8_t>(best);
        }
    }
    out.coloring = Coloring(x, k, std::move(pairs));
    return out;
}

std::optional<std::uint64_t> f_k_window(unsigned k, const TabulatedFunction& f, std::uint64_t a,
                                        const Caps& caps) {
    StateSet image;
    for (std::uint64_t v = a + 1; v < f.size(); ++v) image.push_back(f.values[v]);
    image = make_state_set(std::move(image));
    if (image.empty()) return std::nullopt;
    auto found = find_k_large_subset(image, k, caps);
    if (!found) return std::nullopt;
    return found->members.size() + 1;
}

IntervalLargeness verify_interval_largeness(unsigned k, const StateSet& prefix, std::uint64_t n,
                                            const Caps& caps, const FghBudget& budget) {
    require_set(prefix);
    TabulatedFunction f{prefix};
    const Integer upper_big = fgh_relative(k, n, f, budget);
    const auto upper = static_cast<std::uint64_t>(upper_big);
    if (prefix.back() + 1 < upper) {
        fail(ErrorKind::OutsideTable, "the prefix ends at " + std::to_string(prefix.back()) +
                                          " but the interval reaches " + std::to_string(upper));
    }
    IntervalLargeness out;
    out.upper = upper;
    auto lo = std::lower_bound(prefix.begin(), prefix.end(), n);
    auto hi = std::lower_bound(prefix.begin(), prefix.end(), upper);
    out.members.assign(lo, hi);
    if (out.members.empty()) {
        out.large = false;
    } else if (out.members.size() <= caps.max_exhaustive_set) {
        out.mode = LargenessMode::Exhaustive;
        out.large = is_k_large(out.members, k, LargenessMode::Exhaustive, caps).large;
    } else {
        // A positive interval verdict is a genuine certificate; a negative one
        // is reported like any other failure below.
        out.mode = LargenessMode::Intervals;
        IntervalEngine engine(out.members);
        out.large = engine.run_large(0, out.members.size(), k);
    }
    if (!out.large) {
        fail(ErrorKind::InternalInconsistency, "[" + std::to_string(n) + ", " + std::to_string(upper) +
                                                   ") is not " + std::to_string(k) + "-large");
    }
    return out;
}

}  // namespace tinv
