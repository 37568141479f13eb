#include "tinv/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "tinv/error.hpp"
#include "tinv/hclosure.hpp"

namespace tinv {
namespace {

// Maximum clique over at most 64 vertices given as adjacency masks. Cliques are
// enumerated as increasing position lists in lexicographic order and only a
// strictly larger clique replaces the incumbent, so the result is the
// lexicographically least maximum clique.
class CliqueSearch {
public:
    CliqueSearch(std::vector<std::uint64_t> adj, std::size_t budget) : adj_(std::move(adj)), budget_(budget) {}

    std::vector<std::size_t> run() {
        const std::size_t n = adj_.size();
        std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        extend(all);
        return best_;
    }

private:
    void extend(std::uint64_t cand) {
        if (++nodes_ > budget_) {
            fail(ErrorKind::InstanceCapExceeded, "clique search exceeded " + std::to_string(budget_) + " nodes");
        }
        if (prefix_.size() > best_.size()) best_ = prefix_;
        while (cand) {
            if (prefix_.size() + static_cast<std::size_t>(std::popcount(cand)) <= best_.size()) return;
            std::size_t v = static_cast<std::size_t>(std::countr_zero(cand));
            cand &= cand - 1;
            prefix_.push_back(v);
            extend(cand & adj_[v]);
            prefix_.pop_back();
        }
    }

    std::vector<std::uint64_t> adj_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<std::size_t> prefix_, best_;
};

std::string triple_text(State a, State b, State c) {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

// Maximum antichain through König's theorem on the comparability bipartite
// graph; used above 64 elements where the exact lexicographic search is not
// attempted.
std::vector<std::size_t> konig_antichain(const FiniteRelation& poset) {
    const std::size_t n = poset.size();
    constexpr std::size_t none = SIZE_MAX;
    std::vector<std::size_t> match_left(n, none), match_right(n, none);
    std::vector<char> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t u) {
        for (std::uint32_t v : poset.successors(u)) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (match_right[v] == none || augment(match_right[v])) {
                match_left[u] = v;
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        visited.assign(n, 0);
        augment(u);
    }
    std::vector<char> z_left(n, 0), z_right(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t u = 0; u < n; ++u)
        if (match_left[u] == none) {
            z_left[u] = 1;
            stack.push_back(u);
        }
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t v : poset.successors(u)) {
            if (z_right[v]) continue;
            z_right[v] = 1;
            std::size_t w = match_right[v];
            if (w != none && !z_left[w]) {
                z_left[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n; ++x) {
        bool left_in_cover = !z_left[x];
        bool right_in_cover = z_right[x];
        if (!left_in_cover && !right_in_cover) out.push_back(x);
    }
    return out;
}

}  // namespace

Coloring::Coloring(std::vector<State> vertices, unsigned colors, std::vector<std::uint8_t> pair_colors)
    : vertices_(std::move(vertices)), colors_(colors), pairs_(std::move(pair_colors)) {
    if (colors_ == 0 || colors_ > 255) fail(ErrorKind::InvalidArgument, "color count must be in 1..255");
    if (!std::is_sorted(vertices_.begin(), vertices_.end()) ||
        std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        fail(ErrorKind::InvalidArgument, "vertices must be strictly increasing");
    }
    const std::size_t n = vertices_.size();
    if (pairs_.size() != n * (n ? n - 1 : 0) / 2) {
        fail(ErrorKind::InvalidArgument, "coloring is not total over the vertex pairs");
    }
    for (std::uint8_t c : pairs_)
        if (c >= colors_) fail(ErrorKind::InvalidArgument, "color value out of range");
}

Coloring Coloring::from_function(std::vector<State> vertices, unsigned colors,
                                 const std::function<unsigned(State, State)>& fn) {
    vertices = make_state_set(std::move(vertices));
    const std::size_t n = vertices.size();
    std::vector<std::uint8_t> pairs(n * (n ? n - 1 : 0) / 2);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            pairs[pair_index(i, j)] = static_cast<std::uint8_t>(fn(vertices[i], vertices[j]));
    return Coloring(std::move(vertices), colors, std::move(pairs));
}

Coloring Coloring::constant(std::vector<State> vertices, unsigned colors, unsigned value) {
    return from_function(std::move(vertices), colors, [value](State, State) { return value; });
}

std::size_t Coloring::position(State x) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    if (it == vertices_.end() || *it != x) {
        fail(ErrorKind::StateNotInDomain, "vertex " + std::to_string(x) + " is not colored");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

unsigned Coloring::color(State x, State y) const {
    if (x == y) fail(ErrorKind::InvalidArgument, "pairs must have distinct vertices");
    return at(position(x), position(y));
}

bool is_homogeneous(const Coloring& c, std::span<const State> members) {
    std::vector<std::size_t> pos;
    for (State x : members) pos.push_back(c.position(x));
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (c.at(pos[i], pos[j]) != c.at(pos[0], pos[1])) return false;
    return true;
}

bool is_weakly_homogeneous(const Coloring& c, std::span<const State> members) {
    std::vector<State> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 2 < sorted.size(); ++i) {
        if (c.color(sorted[i], sorted[i + 1]) != c.color(sorted[i + 1], sorted[i + 2])) return false;
    }
    return true;
}

HomogeneityWitness largest_homogeneous_set(const Coloring& c, const Caps& caps) {
    const std::size_t n = c.size();
    if (n > caps.max_coloring_vertices || n > 64) {
        fail(ErrorKind::InstanceCapExceeded, "homogeneous-set search over " + std::to_string(n) +
                                                 " vertices exceeds cap " +
                                                 std::to_string(caps.max_coloring_vertices));
    }
    HomogeneityWitness best;
    best.kind = HomogeneityWitness::Kind::HomogeneousSet;
    std::vector<std::size_t> best_pos;
    for (unsigned color = 0; color < c.colors(); ++color) {
        std::vector<std::uint64_t> adj(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && c.at(i, j) == color) adj[i] |= std::uint64_t{1} << j;
        auto clique = CliqueSearch(std::move(adj), caps.max_search_nodes).run();
        if (color == 0 || clique.size() > best_pos.size() ||
            (clique.size() == best_pos.size() && clique < best_pos)) {
            best_pos = std::move(clique);
            best.color = color;
        }
    }
    for (std::size_t p : best_pos) best.members.push_back(c.vertices()[p]);
    return best;
}

HomogeneityWitness longest_weakly_homogeneous_sequence(const Coloring& c) {
    const std::size_t n = c.size();
    const unsigned k = c.colors();
    HomogeneityWitness out;
    out.kind = HomogeneityWitness::Kind::WeaklyHomogeneousSequence;
    if (n == 0) return out;
    // len[i * k + col]: longest sequence starting at position i whose
    // consecutive pairs all have color col.
    std::vector<std::size_t> len(n * k, 1);
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j) {
            unsigned col = c.at(i, j);
            len[i * k + col] = std::max(len[i * k + col], len[j * k + col] + 1);
        }
    std::vector<std::size_t> best_seq;
    unsigned best_color = 0;
    for (unsigned col = 0; col < k; ++col) {
        std::size_t target = 0;
        for (std::size_t i = 0; i < n; ++i) target = std::max(target, len[i * k + col]);
        std::vector<std::size_t> seq;
        std::size_t i = 0;
        while (len[i * k + col] != target) ++i;
        seq.push_back(i);
        while (len[i * k + col] > 1) {
            std::size_t j = i + 1;
            while (!(c.at(i, j) == col && len[j * k + col] + 1 == len[i * k + col])) ++j;
            seq.push_back(j);
            i = j;
        }
        if (col == 0 || seq.size() > best_seq.size() || (seq.size() == best_seq.size() && seq < best_seq)) {
            best_seq = std::move(seq);
            best_color = col;
        }
    }
    for (std::size_t p : best_seq) out.members.push_back(c.vertices()[p]);
    out.color = best_color;
    return out;
}

TransitivityVerdict is_transitive_coloring(const Coloring& c) {
    const std::size_t n = c.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z)
                if (c.at(x, y) == c.at(y, z) && c.at(x, z) != c.at(x, y)) {
                    auto v = c.vertices();
                    return {false, std::array<State, 3>{v[x], v[y], v[z]}};
                }
    return {};
}

PStarResult p_star(const Coloring& c) {
    const std::size_t n = c.size();
    std::vector<std::uint8_t> star(c.pair_colors().begin(), c.pair_colors().end());
    PStarResult out;
    out.merge_point.assign(star.size(), std::nullopt);
    auto at = [&](std::size_t i, std::size_t j) { return star[Coloring::pair_index(i, j)]; };
    for (std::size_t gap = 2; gap < n; ++gap) {
        for (std::size_t i = 0; i + gap < n; ++i) {
            const std::size_t j = i + gap;
            std::optional<std::size_t> chosen;
            for (std::size_t z = i + 1; z < j; ++z) {
                if (at(i, z) != at(z, j)) continue;
                if (!chosen) {
                    chosen = z;
                } else if (at(i, z) != at(i, *chosen) && out.well_defined) {
                    out.well_defined = false;
                    auto v = c.vertices();
                    out.conflict = std::array<State, 3>{v[i], v[j], v[z]};
                }
            }
            const std::size_t idx = Coloring::pair_index(i, j);
            if (chosen) {
                star[idx] = at(i, *chosen);
                out.merge_point[idx] = c.vertices()[*chosen];
            }
        }
    }
    out.coloring = Coloring(std::vector<State>(c.vertices().begin(), c.vertices().end()), c.colors(),
                            std::move(star));
    return out;
}

ChainAntichain chain_antichain(const FiniteRelation& poset, const Caps& caps) {
    for (const Edge& e : poset.edges()) {
        if (e.first == e.second) {
            fail(ErrorKind::NotAPartialOrder, "reflexive pair (" + std::to_string(e.first) + "," +
                                                  std::to_string(e.second) + ")");
        }
    }
    for (std::size_t x = 0; x < poset.size(); ++x)
        for (std::uint32_t y : poset.successors(x))
            for (std::uint32_t z : poset.successors(y))
                if (!poset.contains(poset.state(x), poset.state(z))) {
                    fail(ErrorKind::NotAPartialOrder,
                         "intransitive triple " + triple_text(poset.state(x), poset.state(y), poset.state(z)));
                }

    ChainAntichain out;
    const std::size_t n = poset.size();
    if (n == 0) return out;
    auto heights = path_heights(poset);
    std::size_t v = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (*heights[i] > *heights[v]) v = i;
    out.chain.push_back(poset.state(v));
    while (*heights[v] > 0) {
        for (std::uint32_t w : poset.successors(v))
            if (*heights[w] + 1 == *heights[v]) {
                v = w;
                break;
            }
        out.chain.push_back(poset.state(v));
    }

    std::vector<std::size_t> anti;
    if (n <= 64) {
        std::vector<std::uint64_t> adj(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !poset.contains(poset.state(i), poset.state(j)) &&
                    !poset.contains(poset.state(j), poset.state(i))) {
                    adj[i] |= std::uint64_t{1} << j;
                }
        anti = CliqueSearch(std::move(adj), caps.max_search_nodes).run();
    } else {
        anti = konig_antichain(poset);
    }
    for (std::size_t p : anti) out.antichain.push_back(poset.state(p));
    return out;
}

std::vector<FiniteRelation> coloring_to_relations(const Coloring& c) {
    std::vector<std::vector<Edge>> edges(c.colors());
    auto v = c.vertices();
    for (std::size_t j = 1; j < c.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) edges[c.at(i, j)].emplace_back(v[j], v[i]);
    std::vector<FiniteRelation> out;
    Caps caps;
    caps.max_edges = std::max(caps.max_edges, c.pair_colors().size());
    for (auto& e : edges) out.emplace_back(std::vector<State>(v.begin(), v.end()), std::move(e), caps);
    return out;
}

Coloring sequence_to_coloring(std::span<const FiniteRelation> rels, std::span<const State> seq) {
    if (rels.empty()) fail(ErrorKind::InvalidArgument, "at least one relation is required");
    FiniteRelation u = union_of(rels);
    bool in_domain = std::all_of(seq.begin(), seq.end(), [&](State x) { return u.has_state(x); });
    if (!in_domain || !is_h_member(u, seq)) {
        fail(ErrorKind::NotTransitiveSequence, "sequence is not transitive for the union");
    }
    const std::size_t n = seq.size();
    std::vector<State> positions(n);
    for (std::size_t i = 0; i < n; ++i) positions[i] = i;
    std::vector<std::uint8_t> pairs(n * (n ? n - 1 : 0) / 2);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            unsigned col = 0;
            while (!rels[col].contains(seq[i], seq[j])) ++col;
            pairs[Coloring::pair_index(i, j)] = static_cast<std::uint8_t>(col);
        }
    return Coloring(std::move(positions), static_cast<unsigned>(rels.size()), std::move(pairs));
}

void for_each_two_coloring(std::size_t n, const std::function<void(const Coloring&)>& visit) {
    const std::size_t m = n * (n ? n - 1 : 0) / 2;
    if (m >= 63) fail(ErrorKind::InstanceCapExceeded, "too many pairs to enumerate");
    std::vector<State> vertices(n);
    for (std::size_t i = 0; i < n; ++i) vertices[i] = i;
    std::vector<std::uint8_t> pairs(m);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        for (std::size_t p = 0; p < m; ++p) pairs[p] = static_cast<std::uint8_t>((bits >> p) & 1U);
        visit(Coloring(vertices, 2, pairs));
    }
}

}  // namespace tinv
