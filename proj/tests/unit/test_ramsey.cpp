#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tinv/error.hpp"
#include "tinv/hclosure.hpp"
#include "tinv/ramsey.hpp"

using namespace tinv;
using oracle::make;

namespace {

std::vector<State> range(State n) {
    std::vector<State> v(n);
    for (State i = 0; i < n; ++i) v[i] = i;
    return v;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(Coloring, ValidatesInput) {
    EXPECT_EQ(kind_of([] { Coloring({0, 1, 2}, 2, {0, 1}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Coloring({0, 1}, 2, {2}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { Coloring({1, 0}, 2, {0}); }), ErrorKind::InvalidArgument);
    Coloring c({3, 5, 9}, 2, {0, 1, 1});
    EXPECT_EQ(c.color(5, 3), 0u);
    EXPECT_EQ(c.color(3, 9), 1u);
    EXPECT_EQ(kind_of([&] { c.color(3, 4); }), ErrorKind::StateNotInDomain);
}

TEST(Ramsey, HomogeneousExamples) {
    auto w = largest_homogeneous_set(Coloring::constant(range(6), 2, 0));
    EXPECT_EQ(w.members, range(6));
    EXPECT_EQ(w.color, 0u);

    auto parity = Coloring::from_function(range(5), 2, [](State x, State y) { return unsigned((x + y) % 2); });
    w = largest_homogeneous_set(parity);
    EXPECT_EQ(w.members, (std::vector<State>{0, 2, 4}));
    EXPECT_EQ(w.color, 0u);
}

TEST(Ramsey, HomogeneousCapIsEnforced) {
    Caps caps;
    caps.max_coloring_vertices = 5;
    EXPECT_EQ(kind_of([&] { largest_homogeneous_set(Coloring::constant(range(6), 2, 0), caps); }),
              ErrorKind::InstanceCapExceeded);
}

TEST(Ramsey, EverySixVertexColoringHasATriangle) {
    std::size_t count = 0;
    for_each_two_coloring(6, [&](const Coloring& c) {
        ++count;
        auto w = largest_homogeneous_set(c);
        EXPECT_GE(w.members.size(), 3u);
        EXPECT_TRUE(is_homogeneous(c, w.members));
    });
    EXPECT_EQ(count, 1u << 15);
}

TEST(Ramsey, FiveVerticesCanAvoidTriangles) {
    // the pentagon and its complement
    auto pentagon = Coloring::from_function(range(5), 2, [](State x, State y) {
        State d = x > y ? x - y : y - x;
        return unsigned(d == 1 || d == 4);
    });
    EXPECT_EQ(largest_homogeneous_set(pentagon).members.size(), 2u);
}

TEST(Ramsey, WeaklyHomogeneousExamples) {
    auto w = longest_weakly_homogeneous_sequence(Coloring::constant(range(6), 2, 1));
    EXPECT_EQ(w.members.size(), 6u);

    auto path = Coloring::from_function(range(4), 2, [](State x, State y) { return unsigned(y != x + 1); });
    w = longest_weakly_homogeneous_sequence(path);
    EXPECT_EQ(w.members, (std::vector<State>{0, 1, 2, 3}));
    EXPECT_EQ(w.color, 0u);

    // two vertices: the single pair is the whole answer
    w = longest_weakly_homogeneous_sequence(Coloring({4, 7}, 2, {1}));
    EXPECT_EQ(w.members, (std::vector<State>{4, 7}));
}

TEST(Ramsey, TransitivityExamples) {
    EXPECT_TRUE(is_transitive_coloring(Coloring::constant(range(5), 2, 0)).transitive);
    const std::vector<State> perm{3, 0, 4, 1, 2};
    auto order = Coloring::from_function(range(5), 2, [&](State x, State y) {
        auto px = std::find(perm.begin(), perm.end(), x) - perm.begin();
        auto py = std::find(perm.begin(), perm.end(), y) - perm.begin();
        return unsigned(px < py ? 0 : 1);
    });
    EXPECT_TRUE(is_transitive_coloring(order).transitive);
    auto bad = Coloring(range(3), 2, {0, 1, 0});  // {0,1}=0 {0,2}=1 {1,2}=0
    auto v = is_transitive_coloring(bad);
    EXPECT_FALSE(v.transitive);
    EXPECT_EQ(v.counterexample, (std::array<State, 3>{0, 1, 2}));
}

TEST(Ramsey, PStarExamples) {
    auto constant = Coloring::constant(range(5), 2, 1);
    EXPECT_EQ(p_star(constant).coloring, constant);

    auto c = Coloring(range(3), 2, {0, 1, 0});
    auto p = p_star(c);
    EXPECT_EQ(p.coloring.at(0, 2), 0u);
    EXPECT_EQ(p.merge_point[Coloring::pair_index(0, 2)], State{1});

    auto alternating = Coloring::from_function(range(8), 2, [](State x, State y) {
        if (y == x + 1) return unsigned(x % 2);
        return 1u;
    });
    EXPECT_TRUE(is_transitive_coloring(p_star(alternating).coloring).transitive);
}

TEST(Ramsey, PStarOnSparseVertexSetsUsesPositions) {
    auto c = Coloring({10, 20, 35}, 2, {0, 1, 0});
    auto p = p_star(c);
    EXPECT_EQ(p.coloring.color(10, 35), 0u);
    EXPECT_EQ(p.merge_point[Coloring::pair_index(0, 2)], State{20});
}

TEST(RamseyProperty, PStarIsWellDefinedAndTransitiveExhaustively) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for_each_two_coloring(n, [&](const Coloring& c) {
            auto p = p_star(c);
            EXPECT_TRUE(p.well_defined);
            EXPECT_TRUE(oracle::transitive(oracle::table_of(p.coloring)));
            // consecutive pairs are untouched
            for (std::size_t i = 0; i + 1 < n; ++i) EXPECT_EQ(p.coloring.at(i, i + 1), c.at(i, i + 1));
        });
    }
}

TEST(RamseyProperty, HomogeneousAndWeakSearchesMatchEnumeration) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        auto c = oracle::random_coloring(rng, 2 + rng() % 9, 2 + rng() % 2);
        auto table = oracle::table_of(c);
        auto h = largest_homogeneous_set(c);
        EXPECT_EQ(h.members.size(), oracle::max_homogeneous(table));
        EXPECT_TRUE(is_homogeneous(c, h.members));
        EXPECT_TRUE(is_weakly_homogeneous(c, h.members));
        auto w = longest_weakly_homogeneous_sequence(c);
        EXPECT_EQ(w.members.size(), oracle::max_weakly_homogeneous(table));
        EXPECT_TRUE(is_weakly_homogeneous(c, w.members));
        EXPECT_GE(w.members.size(), h.members.size());
    }
}

TEST(RamseyProperty, HomogeneousWitnessIsLexLeast) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 100; ++t) {
        auto c = oracle::random_coloring(rng, 2 + rng() % 7);
        auto table = oracle::table_of(c);
        auto h = largest_homogeneous_set(c);
        std::vector<std::vector<State>> best;
        for (std::uint32_t mask = 1; mask < (1u << c.size()); ++mask) {
            auto m = oracle::members(mask);
            if (m.size() == h.members.size() && oracle::homogeneous(table, m))
                best.emplace_back(m.begin(), m.end());
        }
        EXPECT_EQ(h.members, *std::min_element(best.begin(), best.end()));
    }
}

TEST(Ramsey, ChainAntichainExamples) {
    std::vector<Edge> total;
    for (State x = 0; x < 6; ++x)
        for (State y = x + 1; y < 6; ++y) total.emplace_back(x, y);
    auto ca = chain_antichain(make(range(6), total));
    EXPECT_EQ(ca.chain.size(), 6u);
    EXPECT_EQ(ca.antichain.size(), 1u);

    ca = chain_antichain(make(range(6), {}));
    EXPECT_EQ(ca.chain.size(), 1u);
    EXPECT_EQ(ca.antichain.size(), 6u);

    ca = chain_antichain(make(range(6), {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}));
    EXPECT_EQ(ca.chain.size(), 3u);
    EXPECT_EQ(ca.antichain.size(), 2u);

    EXPECT_EQ(kind_of([] { chain_antichain(make({0, 1}, {{0, 0}})); }), ErrorKind::NotAPartialOrder);
    EXPECT_EQ(kind_of([] { chain_antichain(make({0, 1, 2}, {{0, 1}, {1, 2}})); }), ErrorKind::NotAPartialOrder);
}

TEST(RamseyProperty, ChainTimesAntichainCoversThePoset) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 200; ++t) {
        auto dag = oracle::random_dag(rng, 12, 20);
        auto poset = transitive_closure(dag);
        auto ca = chain_antichain(poset);
        EXPECT_GE(ca.chain.size() * ca.antichain.size(), poset.size());
        for (std::size_t i = 0; i + 1 < ca.chain.size(); ++i) EXPECT_TRUE(poset.contains(ca.chain[i], ca.chain[i + 1]));
        for (State a : ca.antichain)
            for (State b : ca.antichain) EXPECT_FALSE(poset.contains(a, b));
        // maximum antichain by enumeration
        std::size_t best = 0;
        for (std::uint32_t mask = 1; mask < (1u << poset.size()); ++mask) {
            auto m = oracle::members(mask);
            bool anti = true;
            for (auto a : m)
                for (auto b : m) anti = anti && !poset.contains(poset.state(a), poset.state(b));
            if (anti) best = std::max(best, m.size());
        }
        EXPECT_EQ(ca.antichain.size(), best);
    }
}

TEST(Ramsey, ColoringToRelationsExamples) {
    auto rs = coloring_to_relations(Coloring::constant(range(3), 2, 0));
    ASSERT_EQ(rs.size(), 2u);
    EXPECT_EQ(std::vector<Edge>(rs[0].edges().begin(), rs[0].edges().end()),
              (std::vector<Edge>{{1, 0}, {2, 0}, {2, 1}}));
    EXPECT_TRUE(rs[1].empty());

    rs = coloring_to_relations(Coloring(range(3), 2, {0, 1, 1}));
    EXPECT_EQ(std::vector<Edge>(rs[0].edges().begin(), rs[0].edges().end()), (std::vector<Edge>{{1, 0}}));
    EXPECT_EQ(std::vector<Edge>(rs[1].edges().begin(), rs[1].edges().end()), (std::vector<Edge>{{2, 0}, {2, 1}}));
}

// The example pairs later elements with earlier ones; the edges are reversed
// into the step orientation.
TEST(Ramsey, SequenceToColoringExamples) {
    std::vector<FiniteRelation> rels{make({0, 1, 2}, oracle::reversed({{2, 1}, {2, 0}})),
                                     make({0, 1, 2}, oracle::reversed({{1, 0}}))};
    auto c = sequence_to_coloring(rels, std::vector<State>{0, 1, 2});
    EXPECT_EQ(c.at(0, 1), 1u);
    EXPECT_EQ(c.at(0, 2), 0u);
    EXPECT_EQ(c.at(1, 2), 0u);

    std::vector<FiniteRelation> one{make({0, 1, 2}, {{2, 1}, {2, 0}, {1, 0}})};
    auto k1 = sequence_to_coloring(one, std::vector<State>{2, 1, 0});
    EXPECT_EQ(k1, Coloring::constant(range(3), 1, 0));

    EXPECT_EQ(kind_of([&] { sequence_to_coloring(one, std::vector<State>{0, 1}); }),
              ErrorKind::NotTransitiveSequence);
}

TEST(RamseyProperty, TranslationsRoundTrip) {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 8;
        auto c = oracle::random_coloring(rng, n, 2 + rng() % 2);
        auto rels = coloring_to_relations(c);
        auto u = union_of(rels);
        std::set<Edge> want;
        for (State x = 0; x < n; ++x)
            for (State y = 0; y < x; ++y) want.insert({x, y});
        EXPECT_EQ(std::set<Edge>(u.edges().begin(), u.edges().end()), want);
        // descending enumeration n-1, ..., 0 is transitive for the union
        std::vector<State> seq;
        for (State x = n; x-- > 0;) seq.push_back(x);
        auto back = sequence_to_coloring(rels, seq);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) EXPECT_EQ(back.at(i, j), c.color(seq[i], seq[j]));
    }
}
