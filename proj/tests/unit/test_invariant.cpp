#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "tinv/error.hpp"
#include "tinv/hierarchy.hpp"
#include "tinv/invariant.hpp"
#include "tinv/io.hpp"
#include "tinv/program.hpp"
#include "tinv/ramsey.hpp"

using namespace tinv;
using oracle::make;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

FiniteRelation closure_of(const FiniteRelation& r) {
    auto c = oracle::closure(oracle::of(r));
    return make(std::vector<State>(r.domain().begin(), r.domain().end()), {c.begin(), c.end()});
}

FiniteRelation restricted(const FiniteRelation& r, const std::set<State>& keep) {
    std::vector<Edge> e;
    for (const Edge& x : r.edges())
        if (keep.count(x.first) && keep.count(x.second)) e.push_back(x);
    return make({keep.begin(), keep.end()}, e);
}

StateFunction f0(const FiniteRelation& r) { return StateFunction::from(r, [](State x) { return x + 1; }); }

// {(x, x+1) : 2 <= x <= 5}
FiniteRelation chain_2_6() { return make({2, 3, 4, 5, 6}, {{2, 3}, {3, 4}, {4, 5}, {5, 6}}); }

bool covers(const FiniteRelation& closure, const Decomposition& d) {
    for (const Edge& e : closure.edges()) {
        bool hit = d.descending.contains(e);
        for (const auto& p : d.parts) hit = hit || p.contains(e);
        if (!hit) return false;
    }
    return true;
}

}  // namespace

TEST(CheckInvariant, ClosureOfAnAcyclicRelationIsAnInvariant) {
    auto r = make({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 3}});
    TransitionSystem ts(r, {0});
    std::vector<FiniteRelation> parts{closure_of(r)};
    auto v = check_invariant(ts, parts);
    EXPECT_EQ(v.conclusion, Conclusion::Terminating);
    EXPECT_TRUE(v.covering_ok);
    EXPECT_EQ(v.longest, (std::vector<std::uint64_t>{3, 2, 1, 1}));
}

TEST(CheckInvariant, TwoCycleNeverTerminates) {
    auto r = make({0, 1}, {{0, 1}, {1, 0}});
    TransitionSystem ts(r, {0});
    for (auto parts : std::vector<std::vector<FiniteRelation>>{
             {},
             {make({0, 1}, {{0, 1}})},
             {make({0, 1}, {{0, 1}}), make({0, 1}, {{1, 0}})},
         }) {
        auto v = check_invariant(ts, parts);
        EXPECT_NE(v.conclusion, Conclusion::Terminating);
        EXPECT_EQ(v.conclusion, Conclusion::Nonterminating);
        EXPECT_FALSE(v.cycle.empty());
    }
}

TEST(CheckInvariant, UncoveredPairIsReported) {
    auto r = make({0, 1, 2}, {{0, 1}, {1, 2}});
    TransitionSystem ts(r, {0});
    std::vector<FiniteRelation> parts{r};
    auto v = check_invariant(ts, parts);
    EXPECT_EQ(v.conclusion, Conclusion::InvalidInvariant);
    EXPECT_FALSE(v.covering_ok);
    EXPECT_EQ(v.uncovered, (Edge{0, 2}));
    EXPECT_EQ(to_string(v.conclusion), "invalid-invariant");
}

TEST(CheckInvariant, InaccessibleStatesAreIgnored) {
    // the cycle sits outside what the initial state reaches
    auto r = make({0, 1, 5, 6}, {{0, 1}, {5, 6}, {6, 5}});
    TransitionSystem ts(r, {0});
    std::vector<FiniteRelation> parts{make({0, 1}, {{0, 1}})};
    auto v = check_invariant(ts, parts);
    EXPECT_EQ(v.conclusion, Conclusion::Terminating);
    EXPECT_EQ(v.accessible, (StateSet{0, 1}));
}

TEST(FindInvariant, Examples) {
    auto r = make({0, 1, 2}, {{0, 1}, {1, 2}});
    auto p = find_invariant(TransitionSystem(r, {0}), 1);
    ASSERT_TRUE(p);
    ASSERT_EQ(p->size(), 1u);
    EXPECT_EQ((*p)[0].edge_count(), 3u);

    auto cyc = make({0, 1}, {{0, 1}, {1, 0}});
    for (unsigned k = 1; k <= 4; ++k) EXPECT_FALSE(find_invariant(TransitionSystem(cyc, {0}), k));
    EXPECT_EQ(kind_of([&] { find_invariant(TransitionSystem(r, {0}), 0); }), ErrorKind::InvalidArgument);
}

TEST(FindInvariant, WhileProgramHasATwoPartInvariant) {
    auto prog = parse_program(read_text_file(std::string(TINV_FIXTURES) + "/while.prog"));
    auto ps = simulate_program(prog, 500, 50);
    auto p = find_invariant(ps.system, 2);
    ASSERT_TRUE(p);
    EXPECT_LE(p->size(), 2u);
    EXPECT_EQ(check_invariant(ps.system, *p).conclusion, Conclusion::Terminating);
}

TEST(FindInvariant, SearchCapIsEnforced) {
    std::vector<Edge> e;
    for (State x = 0; x < 7; ++x) e.emplace_back(x, x + 1);
    auto r = make({0, 1, 2, 3, 4, 5, 6, 7}, e);
    Caps caps;
    caps.max_search_nodes = 10;
    EXPECT_EQ(kind_of([&] { find_invariant(TransitionSystem(r, {0}), 2, caps); }), ErrorKind::InstanceCapExceeded);
    // a reflexive pair of R+ settles it before any search
    e.emplace_back(7, 0);
    EXPECT_FALSE(find_invariant(TransitionSystem(make({0, 1, 2, 3, 4, 5, 6, 7}, e), {0}), 3, caps));
}

TEST(InvariantProperty, SoundAndCompleteAgainstTheCycleOracle) {
    std::mt19937_64 rng(81);
    for (int t = 0; t < 300; ++t) {
        auto ts = gen::random_system(rng, 10, 20);
        auto o = oracle::of(ts.relation());
        auto acc = oracle::accessible(o, {ts.initial().begin(), ts.initial().end()});
        auto w = restricted(ts.relation(), acc);
        const bool acyclic = !oracle::has_cycle(oracle::of(w));

        std::vector<FiniteRelation> self{closure_of(w)};
        auto v = check_invariant(ts, self);
        EXPECT_EQ(v.conclusion == Conclusion::Terminating, acyclic);
        EXPECT_EQ(v.conclusion == Conclusion::Nonterminating, !acyclic);

        auto found = find_invariant(ts, 1);
        EXPECT_EQ(found.has_value(), acyclic);
        if (found) EXPECT_EQ(check_invariant(ts, *found).conclusion, Conclusion::Terminating);

        // random candidate parts never prove a cyclic system terminating
        std::vector<FiniteRelation> junk{oracle::random_dag(rng, 10, 20), oracle::random_dag(rng, 10, 20)};
        auto j = check_invariant(ts, junk);
        if (j.conclusion == Conclusion::Terminating) EXPECT_TRUE(acyclic);
        if (v.conclusion == Conclusion::Terminating) {
            for (std::size_t i = 0; i < v.accessible.size(); ++i)
                EXPECT_EQ(v.longest[i], oracle::longest_from(oracle::of(w), v.accessible[i]));
        }
    }
}

TEST(InvariantProperty, FoundPartsAreAcyclicAndCover) {
    std::mt19937_64 rng(82);
    for (int t = 0; t < 200; ++t) {
        auto ts = gen::random_system(rng, 7, 12);
        const unsigned k = 1 + rng() % 3;
        auto found = find_invariant(ts, k);
        if (!found) continue;
        EXPECT_LE(found->size(), k);
        for (const auto& p : *found) EXPECT_FALSE(oracle::has_cycle(oracle::of(p)));
        EXPECT_EQ(check_invariant(ts, *found).conclusion, Conclusion::Terminating);
    }
}

// A coloring of pairs read as relations (larger to smaller) is an invariant
// for the full descending relation, and the longest path inside one color is
// the longest weakly homogeneous sequence.
TEST(InvariantProperty, ColoringTranslation) {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 2 + rng() % 7;
        auto c = oracle::random_coloring(rng, n, 2 + rng() % 2);
        auto parts = coloring_to_relations(c);
        std::vector<Edge> full;
        for (State x = 0; x < n; ++x)
            for (State y = 0; y < x; ++y) full.emplace_back(x, y);
        std::vector<State> dom(c.vertices().begin(), c.vertices().end());
        TransitionSystem ts(make(dom, full), dom);
        auto v = check_invariant(ts, parts);
        EXPECT_EQ(v.conclusion, Conclusion::Terminating);
        for (const auto& p : parts) EXPECT_TRUE(is_well_founded(p).well_founded);
        auto found = find_invariant(ts, c.colors());
        EXPECT_TRUE(found);

        std::uint64_t longest = 0;
        for (const auto& p : parts)
            for (State x : dom) longest = std::max<std::uint64_t>(longest, oracle::longest_from(oracle::of(p), x));
        auto w = longest_weakly_homogeneous_sequence(c);
        EXPECT_EQ(w.members.size(), longest);
        EXPECT_EQ(longest, oracle::max_weakly_homogeneous(oracle::table_of(c)));
    }
}

TEST(InvariantProperty, LongestComputationStaysBelowTheCeiling) {
    std::mt19937_64 rng(84);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        auto ts = gen::random_system(rng, 10, 16);
        const unsigned k = 1 + rng() % 2;
        auto found = find_invariant(ts, k);
        if (!found) continue;
        bool all_f0 = true;
        for (const auto& p : *found) all_f0 = all_f0 && is_bound(p, f0(p)).ok;
        if (!all_f0) continue;
        auto v = check_invariant(ts, *found);
        ASSERT_EQ(v.conclusion, Conclusion::Terminating);
        for (std::size_t i = 0; i < v.accessible.size(); ++i) {
            ++checked;
            EXPECT_EQ(fgh_capped(k + 5, v.accessible[i], v.longest[i]), v.longest[i]);
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(Decompose, DecreasingMapGoesToTheDescendingPart) {
    std::vector<Edge> e;
    for (State x = 1; x <= 6; ++x) e.emplace_back(x, x - 1);
    auto r = make({0, 1, 2, 3, 4, 5, 6}, e);
    auto d = decompose_bounded(r, 1);
    EXPECT_EQ(d.descending, closure_of(r));
    for (const auto& p : d.parts) EXPECT_TRUE(p.empty());
    EXPECT_TRUE(d.covers);

    auto h = decompose_h_bounded(r, 1);
    EXPECT_EQ(h.descending, closure_of(r));
    for (const auto& p : h.parts) EXPECT_TRUE(p.empty());
}

TEST(Decompose, AscendingChainRankTable) {
    auto d = decompose_bounded(chain_2_6(), 1);
    ASSERT_TRUE(d.ranks);
    EXPECT_EQ(d.ranks->states, (std::vector<State>{2, 3, 4, 5, 6}));
    EXPECT_EQ(d.ranks->rank[0], (std::vector<std::uint64_t>{1, 0, 0, 0, 0}));
    ASSERT_EQ(d.parts.size(), 2u);
    EXPECT_EQ(d.parts[1].edges().size(), 4u);
    for (State y = 3; y <= 6; ++y) EXPECT_TRUE(d.parts[1].contains(2, y));
    // all ascending pairs inside {3..6}
    EXPECT_EQ(d.parts[0].edge_count(), 6u);
    EXPECT_TRUE(d.descending.empty());
    EXPECT_TRUE(d.covers);
    ASSERT_EQ(d.part_checks.size(), 3u);
    for (const auto& c : d.part_checks) EXPECT_TRUE(c.ok);
    EXPECT_TRUE(d.ranks->cap_binding.empty());
    // d counts edges
    for (auto [x, y, dist] : d.ranks->distance) EXPECT_EQ(dist, y - x);
}

TEST(Decompose, Preconditions) {
    auto branching = make({2, 3, 4}, {{2, 3}, {2, 4}});
    try {
        decompose_bounded(branching, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotDeterministic);
        EXPECT_NE(std::string(e.what()).find('2'), std::string::npos);
    }
    // the H variant takes it
    auto h = decompose_h_bounded(branching, 1);
    EXPECT_TRUE(h.covers);
    for (const auto& c : h.part_checks) EXPECT_TRUE(c.ok);

    // 0 -> 1 -> 2 from 0 has 3 elements > F_1(0) = 1
    auto tall = make({0, 1, 2}, {{0, 1}, {1, 2}});
    EXPECT_EQ(kind_of([&] { decompose_bounded(tall, 1); }), ErrorKind::NotBounded);
    EXPECT_EQ(kind_of([&] { decompose_h_bounded(tall, 1); }), ErrorKind::NotBounded);
}

TEST(DecomposeProperty, BoundedVariantOnRandomDeterministicInstances) {
    std::mt19937_64 rng(85);
    for (int t = 0; t < 100; ++t) {
        auto r = gen::bounded_relation(rng, 20, true);
        auto d = decompose_bounded(r, 1);
        const auto closure = closure_of(r);
        EXPECT_TRUE(d.covers);
        EXPECT_TRUE(covers(closure, d));
        EXPECT_TRUE(d.unassigned.empty());
        EXPECT_TRUE(is_bound(d.descending, f0(d.descending)).ok);
        for (const auto& p : d.parts) EXPECT_TRUE(oracle::is_bound(oracle::of(p), [](State x) { return x + 1; }));
        // rank is monotone along ascending pairs and below the cone size
        const auto& rt = *d.ranks;
        for (const auto& level : rt.rank)
            for (auto [x, y, dist] : rt.distance) {
                const auto px = std::find(rt.states.begin(), rt.states.end(), x) - rt.states.begin();
                const auto py = std::find(rt.states.begin(), rt.states.end(), y) - rt.states.begin();
                EXPECT_GE(level[px], level[py]);
                EXPECT_LE(level[px], oracle::reach(oracle::of(r), x).size());
            }
        // both variants accept deterministic F_1-bounded input
        EXPECT_TRUE(decompose_h_bounded(r, 1).covers);
    }
}

TEST(DecomposeProperty, HVariantOnRandomInstances) {
    std::mt19937_64 rng(86);
    for (int t = 0; t < 100; ++t) {
        auto r = gen::bounded_relation(rng, 12, false);
        auto d = decompose_h_bounded(r, 1);
        EXPECT_TRUE(covers(closure_of(r), d));
        for (const auto& p : d.parts)
            EXPECT_TRUE(oracle::is_h_bound(oracle::of(p), [](State x) { return x + 1; }));
    }
}

TEST(Depth, BaseCaseAndExamples) {
    auto r = make({2, 3, 4}, {{2, 3}, {3, 4}});
    for (unsigned n = 0; n <= 3; ++n) {
        auto w = depth_linearly_bounded(r, n, false);
        EXPECT_TRUE(w.holds) << n;
    }
    EXPECT_TRUE(depth_linearly_bounded(r, 0, false).base->ok);

    auto cyc = make({5, 6}, {{5, 6}, {6, 5}});
    for (unsigned n = 0; n <= 3; ++n) EXPECT_FALSE(depth_linearly_bounded(cyc, n, false).holds);
    for (unsigned n = 1; n <= 3; ++n) EXPECT_FALSE(depth_linearly_bounded(cyc, n, true).holds);

    // 1 -> 2 -> 3 -> 4 -> 5 from 1 has 5 elements > F_0(1) = 2
    auto up = make({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    EXPECT_FALSE(depth_linearly_bounded(up, 0, false).holds);
}

TEST(Depth, MaximalSets) {
    auto r = make({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 3}});
    auto lin = maximal_connected_sets(r, false);
    EXPECT_EQ(lin, (std::vector<StateSet>{{0, 1, 2}, {0, 3}}));
    auto hom = maximal_connected_sets(r, true);
    EXPECT_EQ(hom, (std::vector<StateSet>{{0, 1}, {0, 3}, {1, 2}}));
}

TEST(DepthProperty, MonotoneAndWellFounded) {
    std::mt19937_64 rng(87);
    for (int t = 0; t < 120; ++t) {
        auto r = oracle::random_relation(rng, 6, 9);
        const bool wf = !oracle::has_cycle(oracle::of(r));
        for (bool h : {false, true}) {
            bool prev = false;
            for (unsigned n = h ? 1 : 0; n <= 3; ++n) {
                const bool now = depth_linearly_bounded(r, n, h).holds;
                if (prev) EXPECT_TRUE(now) << "h=" << h << " n=" << n;
                if (now) EXPECT_TRUE(wf);
                prev = now;
            }
        }
    }
}

TEST(DepthProperty, UnionOfTwoBoundedPartsAtDepthTwo) {
    std::mt19937_64 rng(88);
    for (int t = 0; t < 40; ++t) {
        auto u = gen::two_part_union(rng, 8);
        ASSERT_TRUE(oracle::is_bound(oracle::of(u.down), [](State x) { return x + 1; }));
        ASSERT_TRUE(oracle::is_bound(oracle::of(u.up), [](State x) { return x + 1; }));
        EXPECT_TRUE(depth_linearly_bounded(u.relation, 2, false).holds);
        EXPECT_TRUE(depth_linearly_bounded(u.relation, 1, false).holds);
    }
}

// A split found for a maximal set restricts to a split for every subset.
TEST(DepthProperty, SplitsRestrictToSubsets) {
    std::mt19937_64 rng(89);
    int checked = 0;
    for (int t = 0; t < 80; ++t) {
        auto r = gen::two_part_union(rng, 6).relation;
        auto w = depth_linearly_bounded(r, 1, false);
        ASSERT_TRUE(w.holds);
        const auto closure = closure_of(r);
        for (const auto& s : w.splits) {
            ASSERT_EQ(s.parts.size(), 2u);
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s.set.size()); ++mask) {
                std::set<State> sub;
                for (std::size_t i = 0; i < s.set.size(); ++i)
                    if (mask >> i & 1U) sub.insert(s.set[i]);
                auto a = restricted(s.parts[0].relation, sub);
                auto b = restricted(s.parts[1].relation, sub);
                EXPECT_TRUE(oracle::is_bound(oracle::of(a), [](State x) { return x + 1; }));
                EXPECT_TRUE(oracle::is_bound(oracle::of(b), [](State x) { return x + 1; }));
                const auto inside = restricted(closure, sub);
                for (const Edge& e : inside.edges()) EXPECT_TRUE(a.contains(e) || b.contains(e));
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(Depth, NodeCap) {
    auto u = make({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    Caps caps;
    caps.max_search_nodes = 1;
    EXPECT_EQ(kind_of([&] { depth_linearly_bounded(u, 2, false, caps); }), ErrorKind::InstanceCapExceeded);
}
