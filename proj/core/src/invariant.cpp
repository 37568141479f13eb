#include "tinv/invariant.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "tinv/error.hpp"
#include "tinv/hierarchy.hpp"

namespace tinv {
namespace {

std::string seq_text(const std::vector<State>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

Caps relaxed(const Caps& caps, std::size_t states) {
    Caps c = caps;
    c.max_edges = std::max(c.max_edges, states * states);
    return c;
}

// Reachability inside one color class, used to keep every class acyclic.
bool reaches(const std::vector<std::vector<std::uint32_t>>& succ, std::uint32_t from, std::uint32_t to) {
    std::vector<char> seen(succ.size(), 0);
    std::vector<std::uint32_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (auto w : succ[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return false;
}

class InvariantSearch {
public:
    InvariantSearch(const FiniteRelation& closure, unsigned k, std::size_t budget)
        : c_(closure), k_(k), budget_(budget), succ_(k, std::vector<std::vector<std::uint32_t>>(closure.size())) {
        for (const Edge& e : closure.edges()) edges_.emplace_back(closure.index(e.first), closure.index(e.second));
        color_.assign(edges_.size(), 0);
    }

    bool run() { return assign(0, 0); }

    std::vector<FiniteRelation> parts(const Caps& caps) const {
        std::vector<std::vector<Edge>> split(k_);
        for (std::size_t i = 0; i < edges_.size(); ++i) split[color_[i]].push_back(c_.edges()[i]);
        std::vector<FiniteRelation> out;
        auto dom = std::vector<State>(c_.domain().begin(), c_.domain().end());
        for (auto& e : split) out.emplace_back(dom, std::move(e), relaxed(caps, dom.size()));
        return out;
    }

private:
    bool assign(std::size_t i, unsigned used) {
        if (++nodes_ > budget_) {
            fail(ErrorKind::InstanceCapExceeded, "invariant search exceeded " + std::to_string(budget_) + " nodes");
        }
        if (i == edges_.size()) return true;
        auto [x, y] = edges_[i];
        // Colors are interchangeable, so a fresh color is only tried once.
        const unsigned limit = std::min(k_, used + 1);
        for (unsigned col = 0; col < limit; ++col) {
            if (x == y || reaches(succ_[col], y, x)) continue;
            succ_[col][x].push_back(y);
            color_[i] = col;
            if (assign(i + 1, std::max(used, col + 1))) return true;
            succ_[col][x].pop_back();
        }
        return false;
    }

    const FiniteRelation& c_;
    unsigned k_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<unsigned> color_;
    std::vector<std::vector<std::vector<std::uint32_t>>> succ_;
};

// Longest T_< chain between every ordered pair, counting edges. T_< only goes
// upwards, so increasing state order is a topological order.
std::vector<std::vector<std::int64_t>> chain_lengths(const FiniteRelation& up) {
    const std::size_t n = up.size();
    std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, -1));
    for (std::size_t x = 0; x < n; ++x) {
        d[x][x] = 0;
        for (std::size_t y = x; y < n; ++y) {
            if (d[x][y] < 0) continue;
            for (std::uint32_t z : up.successors(y)) d[x][z] = std::max(d[x][z], d[x][y] + 1);
        }
    }
    return d;
}

struct Split {
    FiniteRelation closure;
    std::vector<Edge> up, down;
};

Split split_closure(const FiniteRelation& r, const Caps& caps) {
    Split s;
    s.closure = transitive_closure(r, caps);
    for (const Edge& e : s.closure.edges()) (e.first < e.second ? s.up : s.down).push_back(e);
    return s;
}

void require_bounded(const FiniteRelation& r, unsigned k) {
    auto v = is_bound(r, fgh_on_domain(r, k));
    if (!v.ok) {
        fail(ErrorKind::NotBounded, "not bounded by F_" + std::to_string(k) + ": sequence " + seq_text(v.witness) +
                                        (v.unbounded ? " repeats forever" : ""));
    }
}

Decomposition assemble(const FiniteRelation& r, const Split& s, std::vector<std::vector<Edge>> parts,
                       std::vector<Edge> unassigned, bool h_variant, const Caps& caps) {
    Decomposition out;
    const auto dom = std::vector<State>(r.domain().begin(), r.domain().end());
    const Caps c = relaxed(caps, dom.size());
    out.closure = s.closure;
    out.descending = FiniteRelation(dom, s.down, c);
    for (auto& p : parts) out.parts.emplace_back(dom, std::move(p), c);
    out.unassigned = std::move(unassigned);
    out.covers = out.unassigned.empty();
    out.part_checks.push_back(is_bound(out.descending, fgh_on_domain(out.descending, 0)));
    for (const auto& p : out.parts) {
        auto f0 = fgh_on_domain(p, 0);
        out.part_checks.push_back(h_variant ? is_h_bound(p, f0, caps) : is_bound(p, f0));
    }
    return out;
}

// Bron-Kerbosch with pivoting over adjacency masks.
void maximal_cliques(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                     std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    const std::uint64_t px = p | x;
    const std::size_t pivot = static_cast<std::size_t>(std::countr_zero(px));
    std::uint64_t cand = p & ~adj[pivot];
    while (cand) {
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(cand));
        const std::uint64_t bit = std::uint64_t{1} << v;
        cand &= cand - 1;
        maximal_cliques(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

class DepthChecker {
public:
    DepthChecker(bool h_variant, const Caps& caps) : h_(h_variant), caps_(caps) {}

    DepthWitness check(const FiniteRelation& rel, unsigned n) {
        auto key = std::make_pair(std::vector<Edge>(rel.edges().begin(), rel.edges().end()), n);
        std::vector<State> dom(rel.domain().begin(), rel.domain().end());
        if (auto it = memo_.find(key); it != memo_.end() && it->second.relation.domain().size() == dom.size() &&
                                       std::equal(dom.begin(), dom.end(), it->second.relation.domain().begin())) {
            return it->second;
        }
        DepthWitness w;
        w.depth = n;
        w.relation = rel;
        if (n == 0) {
            auto f0 = fgh_on_domain(rel, 0);
            w.base = h_ ? is_h_bound(rel, f0, caps_) : is_bound(rel, f0);
            w.holds = w.base->ok;
        } else {
            const Caps c = relaxed(caps_, dom.size());
            const FiniteRelation closure = transitive_closure(rel, caps_);
            w.holds = true;
            for (const StateSet& s : maximal_connected_sets(rel, h_)) {
                std::vector<Edge> inside;
                for (const Edge& e : closure.edges())
                    if (std::binary_search(s.begin(), s.end(), e.first) &&
                        std::binary_search(s.begin(), s.end(), e.second)) {
                        inside.push_back(e);
                    }
                auto split = find_split(s, inside, n - 1, c);
                if (!split) {
                    w.holds = false;
                    w.failing_set = s;
                    w.splits.clear();
                    break;
                }
                w.splits.push_back(std::move(*split));
            }
        }
        memo_.emplace(std::move(key), w);
        return w;
    }

private:
    std::optional<DepthSplit> find_split(const StateSet& s, const std::vector<Edge>& edges, unsigned depth,
                                         const Caps& c) {
        FiniteRelation whole(s, edges, c);
        auto first = check(whole, depth);
        if (first.holds) {
            return DepthSplit{s, {std::move(first), check(FiniteRelation(s, {}, c), depth)}};
        }
        std::vector<Edge> a, b;
        std::optional<DepthSplit> found;
        search(s, edges, 0, a, b, depth, c, found);
        return found;
    }

    // A part that already fails cannot be repaired by adding edges: bound
    // violations persist, and from depth 1 on every accepted part is acyclic.
    bool viable(const StateSet& s, const std::vector<Edge>& part, unsigned depth, const Caps& c) {
        FiniteRelation rel(s, part, c);
        if (depth == 0) {
            auto f0 = fgh_on_domain(rel, 0);
            return h_ ? is_h_bound(rel, f0, caps_).ok : is_bound(rel, f0).ok;
        }
        return is_well_founded(rel).well_founded;
    }

    void search(const StateSet& s, const std::vector<Edge>& edges, std::size_t i, std::vector<Edge>& a,
                std::vector<Edge>& b, unsigned depth, const Caps& c, std::optional<DepthSplit>& found) {
        if (found) return;
        if (++nodes_ > caps_.max_search_nodes) {
            fail(ErrorKind::InstanceCapExceeded,
                 "depth split search exceeded " + std::to_string(caps_.max_search_nodes) + " nodes");
        }
        if (i == edges.size()) {
            auto wa = check(FiniteRelation(s, a, c), depth);
            if (!wa.holds) return;
            auto wb = check(FiniteRelation(s, b, c), depth);
            if (!wb.holds) return;
            found = DepthSplit{s, {std::move(wa), std::move(wb)}};
            return;
        }
        for (int side = 0; side < (i == 0 ? 1 : 2); ++side) {
            auto& part = side == 0 ? a : b;
            part.push_back(edges[i]);
            if (viable(s, part, depth, c)) search(s, edges, i + 1, a, b, depth, c, found);
            part.pop_back();
            if (found) return;
        }
    }

    bool h_;
    const Caps& caps_;
    std::size_t nodes_ = 0;
    std::map<std::pair<std::vector<Edge>, unsigned>, DepthWitness> memo_;
};

}  // namespace

std::string_view to_string(Conclusion c) noexcept {
    switch (c) {
        case Conclusion::Terminating:
            return "terminating";
        case Conclusion::Nonterminating:
            return "nonterminating";
        case Conclusion::InvalidInvariant:
            return "invalid-invariant";
    }
    return "?";
}

InvariantVerdict check_invariant(const TransitionSystem& ts, std::span<const FiniteRelation> parts,
                                 const Caps& caps) {
    InvariantVerdict v;
    v.accessible = accessible_states(ts);
    const FiniteRelation w = restrict(ts.relation(), v.accessible);
    const FiniteRelation closure = transitive_closure(w, caps);
    v.covering_ok = true;
    for (const Edge& e : closure.edges()) {
        bool hit = std::any_of(parts.begin(), parts.end(), [&](const FiniteRelation& p) { return p.contains(e); });
        if (!hit) {
            v.covering_ok = false;
            v.uncovered = e;
            break;
        }
    }
    bool all_wf = true;
    for (const auto& p : parts) {
        auto wf = is_well_founded(p);
        all_wf = all_wf && wf.well_founded;
        v.disjuncts.push_back({wf.well_founded, std::move(wf.cycle)});
    }
    auto wf = is_well_founded(w);
    v.cycle = wf.cycle;
    if (v.covering_ok && all_wf) {
        if (!wf.well_founded) {
            fail(ErrorKind::InternalInconsistency, "a valid invariant was accepted for a cyclic relation");
        }
        v.conclusion = Conclusion::Terminating;
        for (std::uint64_t h : wf.ranking) v.longest.push_back(h + 1);
    } else {
        v.conclusion = wf.well_founded ? Conclusion::InvalidInvariant : Conclusion::Nonterminating;
    }
    return v;
}

std::optional<std::vector<FiniteRelation>> find_invariant(const TransitionSystem& ts, unsigned k,
                                                          const Caps& caps) {
    if (k == 0) fail(ErrorKind::InvalidArgument, "an invariant needs at least one part");
    const FiniteRelation w = restrict(ts.relation(), accessible_states(ts));
    const FiniteRelation closure = transitive_closure(w, caps);
    // A reflexive pair of R+ lies in some part and makes it ill-founded.
    for (const Edge& e : closure.edges())
        if (e.first == e.second) return std::nullopt;
    InvariantSearch search(closure, k, caps.max_search_nodes);
    if (!search.run()) return std::nullopt;
    return search.parts(caps);
}

StateFunction fgh_on_domain(const FiniteRelation& r, unsigned j) {
    const std::uint64_t cap = r.size() + 1;
    return StateFunction::from(r, [&](State x) { return fgh_capped(j, x, cap); });
}

Decomposition decompose_bounded(const FiniteRelation& r, unsigned k, const Caps& caps) {
    State branching = 0;
    if (!is_deterministic(r, &branching)) {
        fail(ErrorKind::NotDeterministic, "state " + std::to_string(branching) + " has more than one successor");
    }
    require_bounded(r, k);
    const Split s = split_closure(r, caps);
    const auto dom = std::vector<State>(r.domain().begin(), r.domain().end());
    const std::size_t n = dom.size();
    const FiniteRelation up(dom, s.up, relaxed(caps, n));
    const auto d = chain_lengths(up);
    const FiniteRelation reach = s.closure;

    RankTable table;
    table.states = dom;
    for (std::size_t x = 0; x < n; ++x)
        for (std::uint32_t y : up.successors(x)) table.distance.emplace_back(dom[x], dom[y], d[x][y]);
    for (unsigned i = 0; i <= k; ++i) {
        std::vector<std::uint64_t> rank(n, 0);
        for (std::size_t x = n; x-- > 0;) {
            const auto fx = static_cast<std::int64_t>(fgh_capped(i, dom[x], n + 1));
            std::uint64_t best = 0;
            for (std::uint32_t y : up.successors(x))
                if (d[x][y] >= fx) best = std::max(best, rank[y] + 1);
            // The rank never exceeds the number of states reachable from x.
            const std::uint64_t cone = reach.successors(x).size();
            if (best > cone) {
                best = cone;
                if (std::find(table.cap_binding.begin(), table.cap_binding.end(), dom[x]) == table.cap_binding.end())
                    table.cap_binding.push_back(dom[x]);
            }
            rank[x] = best;
        }
        table.rank.push_back(std::move(rank));
    }

    std::vector<std::vector<Edge>> parts(k + 1);
    std::vector<Edge> unassigned;
    for (const Edge& e : s.up) {
        const std::size_t x = up.index(e.first), y = up.index(e.second);
        bool placed = false;
        for (unsigned j = 0; j <= k && !placed; ++j)
            if (table.rank[j][x] == table.rank[j][y]) {
                parts[j].push_back(e);
                placed = true;
            }
        if (!placed) unassigned.push_back(e);
    }
    auto out = assemble(r, s, std::move(parts), std::move(unassigned), false, caps);
    out.ranks = std::move(table);
    return out;
}

Decomposition decompose_h_bounded(const FiniteRelation& r, unsigned k, const Caps& caps) {
    require_bounded(r, k);
    const Split s = split_closure(r, caps);
    const auto dom = std::vector<State>(r.domain().begin(), r.domain().end());
    const std::size_t n = dom.size();
    const FiniteRelation up(dom, s.up, relaxed(caps, n));
    const auto d = chain_lengths(up);
    std::vector<std::vector<Edge>> parts(k + 1);
    std::vector<Edge> unassigned;
    for (const Edge& e : s.up) {
        const std::size_t x = up.index(e.first), y = up.index(e.second);
        bool placed = false;
        for (unsigned j = 0; j <= k && !placed; ++j)
            if (d[x][y] < static_cast<std::int64_t>(fgh_capped(j, e.first, n + 1))) {
                parts[j].push_back(e);
                placed = true;
            }
        if (!placed) unassigned.push_back(e);
    }
    return assemble(r, s, std::move(parts), std::move(unassigned), true, caps);
}

std::vector<StateSet> maximal_connected_sets(const FiniteRelation& r, bool homogeneous) {
    const std::size_t n = r.size();
    if (n > 64) fail(ErrorKind::InstanceCapExceeded, "connected-set enumeration is limited to 64 states");
    const FiniteRelation rel = homogeneous ? r : transitive_closure(r);
    std::vector<std::uint64_t> adj(n, 0);
    for (const Edge& e : rel.edges()) {
        if (e.first == e.second) continue;
        const std::size_t x = rel.index(e.first), y = rel.index(e.second);
        adj[x] |= std::uint64_t{1} << y;
        adj[y] |= std::uint64_t{1} << x;
    }
    std::vector<std::uint64_t> masks;
    if (n > 0) maximal_cliques(adj, 0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0, masks);
    std::vector<StateSet> out;
    for (std::uint64_t m : masks) {
        StateSet s;
        for (; m; m &= m - 1) s.push_back(r.state(static_cast<std::size_t>(std::countr_zero(m))));
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

DepthWitness depth_linearly_bounded(const FiniteRelation& r, unsigned n, bool h_variant, const Caps& caps) {
    DepthChecker checker(h_variant, caps);
    return checker.check(r, n);
}

}  // namespace tinv
