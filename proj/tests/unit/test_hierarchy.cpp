#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tinv/error.hpp"
#include "tinv/hierarchy.hpp"

using namespace tinv;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

TabulatedFunction tabulate(std::uint64_t size, const std::function<std::uint64_t(std::uint64_t)>& f) {
    TabulatedFunction t;
    for (std::uint64_t x = 0; x < size; ++x) t.values.push_back(f(x));
    return t;
}

}  // namespace

TEST(Hierarchy, Examples) {
    EXPECT_EQ(fgh(0, 7), 8);
    for (std::uint64_t x = 0; x <= 20; ++x) EXPECT_EQ(fgh(1, x), Integer(2 * x + 1));
    EXPECT_EQ(fgh(2, 2), 23);
    EXPECT_EQ(fgh(3, 1), fgh(2, fgh(2, 1)));
    EXPECT_EQ(fgh(3, 1), 2047);
}

TEST(Hierarchy, ClosedFormsAgreeWithIteration) {
    for (unsigned n = 0; n <= 3; ++n)
        for (std::uint64_t x = 0; x <= 10; ++x) {
            const std::uint64_t o = oracle::fgh(n, x, std::uint64_t{1} << 22);
            if (o == std::uint64_t{1} << 22) continue;
            EXPECT_EQ(fgh(n, x), Integer(o)) << "n=" << n << " x=" << x;
        }
    for (std::uint64_t x = 0; x <= 10; ++x) {
        EXPECT_EQ(fgh(2, x), (Integer(1) << (x + 1)) * (x + 1) - 1);
        EXPECT_GE(fgh(2, x), Integer(1) << x);
    }
}

TEST(Hierarchy, Monotone) {
    for (unsigned n = 0; n <= 2; ++n)
        for (std::uint64_t x = 0; x < 10; ++x) {
            EXPECT_LE(fgh(n, x), fgh(n, x + 1));
            if (n < 2 || x < 2) EXPECT_LE(fgh(n, x), fgh(n + 1, x));
        }
}

TEST(Hierarchy, BudgetsSurfaceAsBudgetExceeded) {
    EXPECT_EQ(kind_of([] { fgh(3, 3); }), ErrorKind::BudgetExceeded);
    FghBudget tiny;
    tiny.max_result_bits = 8;
    EXPECT_EQ(kind_of([&] { fgh(2, 10, tiny); }), ErrorKind::BudgetExceeded);
    EXPECT_EQ(fgh(2, 2, tiny), 23);
    FghBudget few;
    few.max_recursive_steps = 1;
    EXPECT_EQ(kind_of([&] { fgh(3, 1, few); }), ErrorKind::BudgetExceeded);
    EXPECT_EQ(kind_of([] { fgh(0, Integer(-1)); }), ErrorKind::InvalidArgument);
}

TEST(Hierarchy, CappedMatchesExactBelowTheCap) {
    for (unsigned n = 0; n <= 4; ++n)
        for (std::uint64_t x = 0; x <= 12; ++x)
            for (std::uint64_t cap : {1ull, 5ull, 30ull, 1000ull, 1ull << 20}) {
                const std::uint64_t want = oracle::fgh(n, x, cap);
                EXPECT_EQ(fgh_capped(n, x, cap), want) << n << " " << x << " " << cap;
            }
}

TEST(Hierarchy, RelativeExamples) {
    auto id = tabulate(200, [](std::uint64_t x) { return x; });
    for (std::uint64_t x = 0; x < 50; ++x) EXPECT_EQ(fgh_relative(0, x, id), fgh(0, x));
    auto succ = tabulate(200, [](std::uint64_t x) { return x + 1; });
    for (std::uint64_t x = 0; x < 50; ++x) EXPECT_EQ(fgh_relative(0, x, succ), Integer(x + 2));
    auto twice = tabulate(200, [](std::uint64_t x) { return 2 * x; });
    EXPECT_EQ(fgh_relative(1, 1, twice), 7);
    // F_{0,f}(x) = f(x) + 1 over the whole table
    for (std::uint64_t x = 0; x < twice.size(); ++x) EXPECT_EQ(fgh_relative(0, x, twice), Integer(twice.at(x) + 1));
}

TEST(Hierarchy, RelativeRecursionIsLiteral) {
    auto f = tabulate(5000, [](std::uint64_t x) { return x + x / 3; });
    // F_{n+1,f}(x) = F_{n,f} iterated x + 1 times
    for (std::uint64_t x = 0; x < 2; ++x) {
        Integer y = x;
        for (std::uint64_t i = 0; i <= x; ++i) y = fgh_relative(1, y.convert_to<std::uint64_t>(), f);
        EXPECT_EQ(fgh_relative(2, x, f), y);
    }
}

TEST(Hierarchy, RelativeErrors) {
    auto small = tabulate(5, [](std::uint64_t x) { return x; });
    EXPECT_EQ(kind_of([&] { fgh_relative(1, 3, small); }), ErrorKind::OutsideTable);
    EXPECT_EQ(kind_of([&] { small.at(5); }), ErrorKind::OutsideTable);
    FghBudget few;
    few.max_recursive_steps = 3;
    auto id = tabulate(100, [](std::uint64_t x) { return x; });
    EXPECT_EQ(kind_of([&] { fgh_relative(1, 4, id, few); }), ErrorKind::BudgetExceeded);
    EXPECT_TRUE(id.strictly_increasing());
    EXPECT_FALSE(tabulate(3, [](std::uint64_t) { return 1; }).strictly_increasing());
}
