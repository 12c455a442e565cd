#include <gtest/gtest.h>

#include "selorder/error.hpp"
#include "selorder/orders.hpp"

using namespace selorder;
using namespace selorder::orders;
using building::canonicalize;
using building::SplittingType;

TEST(IntMatrix, Arithmetic)
{
    IntMatrix A{{1, 2}, {3, 4}};
    IntMatrix B{{0, 1}, {1, 0}};
    EXPECT_EQ(A * B, (IntMatrix{{2, 1}, {4, 3}}));
    EXPECT_EQ(A + B, (IntMatrix{{1, 3}, {4, 4}}));
    EXPECT_EQ(B.pow(2), IntMatrix::identity(2));
    EXPECT_EQ(A.pow(0), IntMatrix::identity(2));
    EXPECT_THROW(A * IntMatrix(3), DomainError);
    EXPECT_THROW((IntMatrix{{1, 2}, {3}}), DomainError);
}

TEST(Valuation, Basics)
{
    EXPECT_EQ(valuation(48, 2), 4);
    EXPECT_EQ(valuation(-27, 3), 3);
    EXPECT_EQ(valuation(5, 3), 0);
    EXPECT_FALSE(valuation(0, 7));
}

TEST(ValuationPattern, FromDefiningVector)
{
    std::vector<std::int64_t> a{2, 0, 1};
    ValuationPattern V(a);
    EXPECT_EQ(V(0, 1), 2);
    EXPECT_EQ(V(1, 0), -2);
    EXPECT_EQ(V(2, 2), 0);
    EXPECT_THROW(ValuationPattern(BoundMatrix{{0, 1}, {0, 0}}), DomainError);
    EXPECT_EQ(ValuationPattern(V.bounds()), V);
}

TEST(UnramifiedGenerator, ReductionIsIrreducible)
{
    for (long p : {2, 3, 5})
        for (int f = 1; f <= 4; ++f) {
            auto g = unramified_generator(p, f);
            EXPECT_EQ(g.companion.rows(), static_cast<std::size_t>(f));
            EXPECT_EQ(g.reduction.degree(), f);
            EXPECT_TRUE(ff::is_irreducible_ff(g.reduction));
        }
    // x^2 + x + 1 over F_2: last row (-1, -1)
    auto g = unramified_generator(2, 2);
    EXPECT_EQ(g.companion, (IntMatrix{{0, 1}, {-1, -1}}));
}

TEST(Oracle, AgreesWithBlockConstancyOnSamples)
{
    auto s = SplittingType::unramified({1, 1, 2});
    EXPECT_TRUE(oracle_contains(canonicalize({1, 0, 0, 0}), s, 3));
    EXPECT_FALSE(oracle_contains(canonicalize({1, 1, 1, 0}), s, 3));
    EXPECT_TRUE(oracle_contains(canonicalize({0, 0, 0}), SplittingType::unramified({3}), 2));
    EXPECT_FALSE(oracle_contains(canonicalize({1, 0, 0}), SplittingType::unramified({3}), 2));
    EXPECT_THROW(oracle_contains(canonicalize({0, 0}), SplittingType(2, {{2, 1}}), 2), HypothesisError);
}

TEST(IntersectPatterns, LatticeLaws)
{
    std::vector<std::int64_t> a{0, 0, 0}, b{1, 0, 0}, c{1, 1, 0};
    ValuationPattern A(a), B(b), C(c);
    std::vector<ValuationPattern> ab{A, B}, ba{B, A}, aa{A, A};
    EXPECT_EQ(intersect_patterns(ab), intersect_patterns(ba));
    EXPECT_EQ(intersect_patterns(aa), A.bounds());
    std::vector<ValuationPattern> abc{A, B, C};
    auto AB = intersect_patterns(ab);
    BoundMatrix R = AB;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            R[i][j] = std::max(R[i][j], C(i, j));
    EXPECT_EQ(intersect_patterns(abc), R);
    EXPECT_THROW(intersect_patterns(std::span<ValuationPattern const>{}), DomainError);
}
