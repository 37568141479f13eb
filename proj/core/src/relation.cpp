#include "tinv/relation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tinv/error.hpp"

namespace tinv {
namespace {

std::string edge_text(const Edge& e) {
    std::ostringstream os;
    os << "(" << e.first << "," << e.second << ")";
    return os.str();
}

void build_csr(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arcs,
               std::vector<std::uint32_t>& offsets, std::vector<std::uint32_t>& targets) {
    offsets.assign(n + 1, 0);
    for (const auto& [from, to] : arcs) ++offsets[from + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.resize(arcs.size());
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [from, to] : arcs) targets[cursor[from]++] = to;
}

// Tarjan's SCC, iterative. Components come out in reverse topological order
// (sinks first).
struct Components {
    std::vector<std::uint32_t> of;               // state index -> component
    std::vector<std::vector<std::uint32_t>> members;
    std::vector<bool> cyclic;                    // size > 1 or has a self-loop
};

Components strongly_connected(const FiniteRelation& r) {
    const std::size_t n = r.size();
    constexpr std::uint32_t unvisited = UINT32_MAX;
    std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    Components out;
    out.of.assign(n, 0);
    std::uint32_t counter = 0;

    struct Frame {
        std::uint32_t v;
        std::size_t next;
    };
    std::vector<Frame> frames;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto succ = r.successors(f.v);
            if (f.next < succ.size()) {
                std::uint32_t w = succ[f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::uint32_t v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::uint32_t> comp;
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.of[w] = static_cast<std::uint32_t>(out.members.size());
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                bool cyclic = comp.size() > 1;
                if (!cyclic) {
                    auto s = r.successors(v);
                    cyclic = std::binary_search(s.begin(), s.end(), v);
                }
                out.members.push_back(std::move(comp));
                out.cyclic.push_back(cyclic);
            }
        }
    }
    return out;
}

}  // namespace

StateSet make_state_set(std::vector<State> states) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

FiniteRelation::FiniteRelation(std::vector<State> domain, std::vector<Edge> edges, const Caps& caps)
    : domain_(make_state_set(std::move(domain))) {
    if (domain_.size() > caps.max_states) {
        fail(ErrorKind::InstanceCapExceeded,
             "domain has " + std::to_string(domain_.size()) + " states, cap is " +
                 std::to_string(caps.max_states));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() > caps.max_edges) {
        fail(ErrorKind::InstanceCapExceeded,
             "relation has " + std::to_string(edges.size()) + " edges, cap is " +
                 std::to_string(caps.max_edges));
    }
    edges_ = std::move(edges);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    arcs.reserve(edges_.size());
    for (const Edge& e : edges_) {
        auto a = find_index(e.first);
        auto b = find_index(e.second);
        if (!a || !b) fail(ErrorKind::StateNotInDomain, "edge " + edge_text(e) + " leaves the domain");
        arcs.emplace_back(static_cast<std::uint32_t>(*a), static_cast<std::uint32_t>(*b));
    }
    build_csr(domain_.size(), arcs, succ_offsets_, succ_);
    for (auto& arc : arcs) std::swap(arc.first, arc.second);
    std::sort(arcs.begin(), arcs.end());
    build_csr(domain_.size(), arcs, pred_offsets_, pred_);
}

bool FiniteRelation::has_state(State x) const noexcept {
    return std::binary_search(domain_.begin(), domain_.end(), x);
}

bool FiniteRelation::contains(State x, State y) const noexcept {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{x, y});
}

std::optional<std::size_t> FiniteRelation::find_index(State x) const noexcept {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), x);
    if (it == domain_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - domain_.begin());
}

std::size_t FiniteRelation::index(State x) const {
    auto i = find_index(x);
    if (!i) fail(ErrorKind::StateNotInDomain, "state " + std::to_string(x) + " is not in the domain");
    return *i;
}

std::span<const std::uint32_t> FiniteRelation::successors(std::size_t i) const noexcept {
    if (succ_offsets_.empty()) return {};
    return {succ_.data() + succ_offsets_[i], succ_.data() + succ_offsets_[i + 1]};
}

std::span<const std::uint32_t> FiniteRelation::predecessors(std::size_t i) const noexcept {
    if (pred_offsets_.empty()) return {};
    return {pred_.data() + pred_offsets_[i], pred_.data() + pred_offsets_[i + 1]};
}

TransitionSystem::TransitionSystem(FiniteRelation relation, StateSet initial)
    : relation_(std::move(relation)), initial_(make_state_set(std::move(initial))) {
    for (State s : initial_) {
        if (!relation_.has_state(s)) {
            fail(ErrorKind::StateNotInDomain,
                 "initial state " + std::to_string(s) + " is not in the domain");
        }
    }
}

FiniteRelation transitive_closure(const FiniteRelation& r, const Caps& caps) {
    const std::size_t n = r.size();
    if (n != 0 && n > caps.max_closure_cells / n) {
        fail(ErrorKind::InstanceCapExceeded,
             "closure table |domain|^2 = " + std::to_string(n) + "^2 exceeds cap " +
                 std::to_string(caps.max_closure_cells));
    }
    const Components comps = strongly_connected(r);
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reach(comps.members.size(),
                                                  std::vector<std::uint64_t>(words, 0));
    // Components are numbered sinks first, so successors are already done.
    for (std::size_t c = 0; c < comps.members.size(); ++c) {
        auto& row = reach[c];
        for (std::uint32_t v : comps.members[c]) {
            for (std::uint32_t w : r.successors(v)) {
                std::uint32_t d = comps.of[w];
                row[w / 64] |= std::uint64_t{1} << (w % 64);
                if (d != c) {
                    const auto& other = reach[d];
                    for (std::size_t k = 0; k < words; ++k) row[k] |= other[k];
                }
            }
        }
        if (comps.cyclic[c]) {
            for (std::uint32_t v : comps.members[c]) row[v / 64] |= std::uint64_t{1} << (v % 64);
        }
    }
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& row = reach[comps.of[v]];
        for (std::size_t k = 0; k < words; ++k) {
            std::uint64_t bits = row[k];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                edges.emplace_back(r.state(v), r.state(k * 64 + static_cast<std::size_t>(b)));
            }
        }
    }
    Caps relaxed = caps;
    relaxed.max_edges = std::max(caps.max_edges, caps.max_closure_cells);
    return FiniteRelation(std::vector<State>(r.domain().begin(), r.domain().end()), std::move(edges),
                          relaxed);
}

StateSet accessible_states(const TransitionSystem& ts) {
    const FiniteRelation& r = ts.relation();
    std::vector<bool> seen(r.size(), false);
    std::deque<std::size_t> queue;
    for (State s : ts.initial()) {
        std::size_t i = r.index(s);
        if (!seen[i]) {
            seen[i] = true;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t w : r.successors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    StateSet out;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (seen[i]) out.push_back(r.state(i));
    return out;
}

std::vector<std::optional<std::uint64_t>> path_heights(const FiniteRelation& r) {
    const std::size_t n = r.size();
    std::vector<std::size_t> out_degree(n);
    std::vector<std::optional<std::uint64_t>> height(n);
    std::vector<std::uint64_t> best(n, 0);
    std::deque<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i) {
        out_degree[i] = r.successors(i).size();
        if (out_degree[i] == 0) ready.push_back(i);
    }
    while (!ready.empty()) {
        std::size_t y = ready.front();
        ready.pop_front();
        height[y] = best[y];
        for (std::uint32_t x : r.predecessors(y)) {
            best[x] = std::max(best[x], best[y] + 1);
            if (--out_degree[x] == 0) ready.push_back(x);
        }
    }
    return height;
}

WellFoundedVerdict is_well_founded(const FiniteRelation& r) {
    WellFoundedVerdict verdict;
    auto heights = path_heights(r);
    if (std::all_of(heights.begin(), heights.end(), [](const auto& h) { return h.has_value(); })) {
        verdict.well_founded = true;
        verdict.ranking.reserve(heights.size());
        for (const auto& h : heights) verdict.ranking.push_back(*h);
        return verdict;
    }
    // The least state lying on a cycle; walk a DFS restricted to its strongly
    // connected component to recover the least cycle through it.
    const Components comps = strongly_connected(r);
    std::size_t start = r.size();
    for (std::size_t i = 0; i < r.size() && start == r.size(); ++i)
        if (comps.cyclic[comps.of[i]]) start = i;
    const std::uint32_t comp = comps.of[start];

    // BFS inside the component for the shortest path back to start, taking
    // successors in ascending order.
    std::vector<std::int64_t> parent(r.size(), -1);
    std::vector<bool> seen(r.size(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    std::int64_t closing = -1;
    while (!queue.empty() && closing < 0) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t w : r.successors(v)) {
            if (comps.of[w] != comp) continue;
            if (w == start) {
                closing = static_cast<std::int64_t>(v);
                break;
            }
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = static_cast<std::int64_t>(v);
                queue.push_back(w);
            }
        }
    }
    std::vector<State> path;
    for (std::int64_t v = closing; v >= 0; v = parent[static_cast<std::size_t>(v)]) {
        path.push_back(r.state(static_cast<std::size_t>(v)));
        if (static_cast<std::size_t>(v) == start) break;
    }
    std::reverse(path.begin(), path.end());
    verdict.cycle = std::move(path);
    return verdict;
}

SequenceWitness longest_decreasing_sequence(const FiniteRelation& r, State start) {
    const std::size_t s = r.index(start);
    auto heights = path_heights(r);
    if (!heights[s]) {
        fail(ErrorKind::NotWellFounded,
             "a cycle is reachable from state " + std::to_string(start));
    }
    SequenceWitness w;
    std::size_t v = s;
    w.items.push_back(r.state(v));
    while (*heights[v] > 0) {
        for (std::uint32_t next : r.successors(v)) {
            if (heights[next] && *heights[next] + 1 == *heights[v]) {
                v = next;
                break;
            }
        }
        w.items.push_back(r.state(v));
    }
    w.length = w.items.size();
    return w;
}

FiniteRelation restrict(const FiniteRelation& r, const StateSet& states) {
    StateSet keep = make_state_set(states);
    for (State x : keep) {
        if (!r.has_state(x)) {
            fail(ErrorKind::StateNotInDomain, "state " + std::to_string(x) + " is not in the domain");
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : r.edges()) {
        if (std::binary_search(keep.begin(), keep.end(), e.first) &&
            std::binary_search(keep.begin(), keep.end(), e.second)) {
            edges.push_back(e);
        }
    }
    Caps unlimited;
    unlimited.max_states = keep.size();
    unlimited.max_edges = edges.size();
    return FiniteRelation(std::move(keep), std::move(edges), unlimited);
}

FiniteRelation union_of(std::span<const FiniteRelation> rels, const Caps& caps) {
    std::vector<State> domain;
    std::vector<Edge> edges;
    for (const auto& r : rels) {
        domain.insert(domain.end(), r.domain().begin(), r.domain().end());
        edges.insert(edges.end(), r.edges().begin(), r.edges().end());
    }
    return FiniteRelation(std::move(domain), std::move(edges), caps);
}

FiniteRelation widen(const FiniteRelation& r, const StateSet& domain, const Caps& caps) {
    std::vector<State> all(domain.begin(), domain.end());
    all.insert(all.end(), r.domain().begin(), r.domain().end());
    return FiniteRelation(std::move(all), std::vector<Edge>(r.edges().begin(), r.edges().end()), caps);
}

bool is_irreflexive(const FiniteRelation& r) {
    return std::none_of(r.edges().begin(), r.edges().end(),
                        [](const Edge& e) { return e.first == e.second; });
}

bool is_transitive(const FiniteRelation& r) {
    for (std::size_t x = 0; x < r.size(); ++x) {
        for (std::uint32_t y : r.successors(x)) {
            for (std::uint32_t z : r.successors(y)) {
                if (!r.contains(r.state(x), r.state(z))) return false;
            }
        }
    }
    return true;
}

bool is_deterministic(const FiniteRelation& r, State* branching) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r.successors(i).size() > 1) {
            if (branching) *branching = r.state(i);
            return false;
        }
    }
    return true;
}

bool is_sequence(const FiniteRelation& r, std::span<const State> items) {
    for (State x : items)
        if (!r.has_state(x)) return false;
    for (std::size_t i = 0; i + 1 < items.size(); ++i)
        if (!r.contains(items[i], items[i + 1])) return false;
    return true;
}

}  // namespace tinv
