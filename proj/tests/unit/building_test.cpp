#include <gtest/gtest.h>

#include "selorder/building.hpp"
#include "selorder/error.hpp"

using namespace selorder;
using namespace selorder::building;

TEST(Canonicalize, SubtractsMinimumWithoutSorting)
{
    EXPECT_EQ(canonicalize({3, 1, 2}).coords(), (std::vector<std::int64_t>{2, 0, 1}));
    EXPECT_EQ(canonicalize({-2, -2, 5}).coords(), (std::vector<std::int64_t>{0, 0, 7}));
    EXPECT_THROW(canonicalize(std::initializer_list<std::int64_t>{}), DomainError);
}

TEST(VertexType, InvariantUnderShift)
{
    EXPECT_EQ(vertex_type(canonicalize({1, 1, 0, 0})), 2);
    EXPECT_EQ(vertex_type(canonicalize({4, 4, 3, 3})), 2);
    EXPECT_EQ(vertex_type(canonicalize({5, 0, 0})), 2);
    EXPECT_EQ(type_distance(canonicalize({0, 0, 0, 0}), canonicalize({1, 1, 1, 0})), 3);
    EXPECT_EQ(type_distance(canonicalize({1, 1, 1, 0}), canonicalize({0, 0, 0, 0})), 1);
}

TEST(SplittingType, Validation)
{
    EXPECT_THROW(SplittingType(4, {{1, 1}, {1, 2}}), DomainError);
    EXPECT_THROW(SplittingType(2, {{0, 2}}), DomainError);
    auto s = SplittingType(4, {{1, 2}, {2, 1}});
    EXPECT_FALSE(s.is_unramified());
    EXPECT_FALSE(s.has_degree_one_factor()); // (2,1) is ramified
    EXPECT_TRUE(SplittingType(4, {{1, 1}, {1, 3}}).has_degree_one_factor());
    EXPECT_EQ(s.sorted().factors().front(), (LocalFactor{2, 1}));
    EXPECT_TRUE(SplittingType::unramified({1, 1, 1}).splits_completely());
}

TEST(Containment, BlockConstancyIsPositional)
{
    auto s = SplittingType::unramified({1, 1, 2});
    EXPECT_TRUE(contains_ring_of_integers(canonicalize({0, 0, 0, 0}), s));
    EXPECT_TRUE(contains_ring_of_integers(canonicalize({1, 0, 0, 0}), s));
    EXPECT_TRUE(contains_ring_of_integers(canonicalize({1, 1, 0, 0}), s));
    EXPECT_FALSE(contains_ring_of_integers(canonicalize({1, 1, 1, 0}), s));
    // same multiset of coordinates, different block order
    auto t = SplittingType::unramified({2, 1, 1});
    EXPECT_TRUE(contains_ring_of_integers(canonicalize({1, 1, 1, 0}), t));
    EXPECT_THROW(contains_ring_of_integers(canonicalize({0, 0, 0}), s), DomainError);
}

TEST(Containment, RamifiedPrimeViolatesHypothesis)
{
    auto s = SplittingType(2, {{2, 1}});
    EXPECT_THROW(contains_ring_of_integers(canonicalize({0, 0}), s), HypothesisError);
    EXPECT_THROW(admissible_types(s), HypothesisError);
}

TEST(AdmissibleTypes, GcdSubgroup)
{
    EXPECT_EQ(admissible_types(SplittingType::unramified({1, 1, 2})), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(admissible_types(SplittingType::unramified({4})), (std::vector<int>{0}));
    EXPECT_EQ(admissible_types(SplittingType::unramified({2, 2})), (std::vector<int>{0, 2}));
    EXPECT_EQ(admissible_types(SplittingType::unramified({2, 4})), (std::vector<int>{0, 2, 4}));
    EXPECT_EQ(admissible_types(SplittingType::unramified({2, 1})), (std::vector<int>{0, 1, 2}));
}

TEST(ChamberVertices, PartialBlockSums)
{
    auto vs = chamber_vertices(SplittingType::unramified({1, 1, 2}));
    ASSERT_EQ(vs.size(), 3u);
    EXPECT_EQ(vs[0], canonicalize({0, 0, 0, 0}));
    EXPECT_EQ(vs[1], canonicalize({1, 0, 0, 0}));
    EXPECT_EQ(vs[2], canonicalize({1, 1, 0, 0}));
}

TEST(Enumeration, InertPrimeHasOneVertex)
{
    for (int n = 3; n <= 5; ++n)
        for (int bound = 1; bound <= 6; ++bound) {
            auto vs = enumerate_containing_vertices(SplittingType::unramified({n}), bound);
            ASSERT_EQ(vs.size(), 1u);
            EXPECT_EQ(vs[0], block_class(n, 0, 0));
        }
}

TEST(Enumeration, CountsBlockLevels)
{
    // g blocks with levels in [0, b) and minimum 0: b^g - (b-1)^g classes
    auto vs = enumerate_containing_vertices(SplittingType::unramified({1, 1, 2}), 3);
    EXPECT_EQ(vs.size(), 27u - 8u);
    for (auto const & v : vs)
        EXPECT_TRUE(contains_ring_of_integers(v, SplittingType::unramified({1, 1, 2})));
    // first block runs fastest
    EXPECT_EQ(vs[0], canonicalize({0, 0, 0, 0}));
    EXPECT_EQ(vs[1], canonicalize({1, 0, 0, 0}));
}

TEST(Compositions, CountIsPowerOfTwo)
{
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(compositions(n).size(), std::size_t{1} << (n - 1));
    EXPECT_TRUE(compositions(0).empty());
}

TEST(BlockClass, Shape)
{
    EXPECT_EQ(block_class(4, 2, 1), canonicalize({1, 1, 0, 0}));
    EXPECT_EQ(block_class(4, 1, 3), canonicalize({3, 0, 0, 0}));
    EXPECT_EQ(block_class(4, 4, 1), canonicalize({0, 0, 0, 0}));
    EXPECT_THROW(block_class(4, 5, 1), DomainError);
}
