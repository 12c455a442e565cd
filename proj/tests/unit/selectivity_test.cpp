#include <gtest/gtest.h>

#include "selorder/error.hpp"
#include "selorder/selectivity.hpp"

using namespace selorder;
using namespace selorder::sel;

namespace {

qf::TowerSpec worked_tower()
{
    return {{{33, 44}, {22, 4}, {1, 0}}, {5, 0, 1}};
}

qf::TowerSpec cyclotomic5()
{
    return {{{0, 0}, {1, 0}}, {1, 1, 1, 1, 1}};
}

std::vector<RamifiedPrime> above(qf::QuadField const & K, long p, int m)
{
    std::vector<RamifiedPrime> out;
    for (auto const & P : qf::prime_of_K(K, p))
        out.push_back({P, m});
    return out;
}

struct Worked : ::testing::Test {
    qf::QuadField K{-14};
    AlgebraData B{4, above(K, 137, 2)};
    ExtensionData ext{K, 4, worked_tower(), {}};
    qf::ClassGroup C{K};
    GenusGroup G = genus_group(B, C);
};

} // namespace

TEST(AlgebraData, Validation)
{
    qf::QuadField K(-14);
    EXPECT_THROW(AlgebraData(2, {}), DomainError);
    EXPECT_THROW(AlgebraData(4, above(K, 137, 3)), DomainError);
    auto twice = above(K, 137, 2);
    twice.push_back(twice.front());
    EXPECT_THROW(AlgebraData(4, twice), DomainError);
    // a single ramified prime violates reciprocity
    EXPECT_THROW(AlgebraData(4, {above(K, 23, 4).front()}), DomainError);
    auto mixed = above(K, 23, 4);
    mixed.push_back(above(K, 137, 2).front());
    EXPECT_NO_THROW(AlgebraData(4, mixed));
    AlgebraData B(4, above(K, 137, 2));
    EXPECT_EQ(B.dimension(), 16);
    EXPECT_FALSE(B.has_division_prime());
    EXPECT_TRUE(B.has_partial_ramification());
    EXPECT_EQ(B.local_capacity(B.ramification().front()), 2);
}

TEST_F(Worked, GenusGroupIsWholeClassGroup)
{
    EXPECT_EQ(G.order(), 4u);
    EXPECT_EQ(G.exponent(), 4u);
    EXPECT_EQ(G.killed, (std::vector<Elem>{0}));
}

TEST_F(Worked, FrobeniusOfPrimeAboveSeven)
{
    auto P7 = qf::prime_of_K(K, 7).front();
    EXPECT_EQ(G.group.order(frobenius(P7, G)), 2u);
    EXPECT_THROW(frobenius(B.ramification().front().prime, G), DomainError);
}

TEST_F(Worked, AbhnHoldsAt137)
{
    std::map<qf::PrimeOfK, building::SplittingType> local;
    for (auto const & r : B.ramification())
        local.emplace(r.prime, *ext.for_prime(r.prime));
    auto rep = check_abhn(B, local);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.entries.size(), 2u);
    local.erase(local.begin());
    EXPECT_THROW(check_abhn(B, local), ConfigError);
}

TEST_F(Worked, ScanFindsIndexTwo)
{
    auto S = scan_subgroups(K, ext, B, G);
    EXPECT_EQ(S.index(), 2u);
    EXPECT_EQ(S.H.size(), 2u);
    EXPECT_EQ(S.H_hat, S.H); // L is abelian over K
    EXPECT_EQ(S.rho.size(), 1u);
    EXPECT_EQ(S.sigma.size(), 0u);
    EXPECT_EQ(S.tau.size(), 1u);
    EXPECT_EQ(S.tau.front().witness.prime.name(), "P(263,1)");
    EXPECT_TRUE(S.stopped_early);
}

TEST_F(Worked, ParametrizationCoversGenusGroup)
{
    auto S = scan_subgroups(K, ext, B, G);
    auto reps = parametrize_genus(G, S);
    ASSERT_EQ(reps.size(), 4u);
    std::vector<bool> seen(4, false);
    std::size_t admitting = 0;
    for (auto const & E : reps) {
        seen[E.element] = true;
        bool const ok = admits_embedding(E, S, G);
        EXPECT_EQ(ok, E.a.front() == 0);
        admitting += ok;
    }
    EXPECT_EQ(admitting, 2u);
    for (bool b : seen)
        EXPECT_TRUE(b);
    // a-tuple is the outermost digit
    EXPECT_EQ(reps[0].a.front(), 0);
    EXPECT_EQ(reps[2].a.front(), 1);
}

TEST_F(Worked, DistanceIdele)
{
    auto S = scan_subgroups(K, ext, B, G);
    auto reps = parametrize_genus(G, S);
    for (auto const & D : reps) {
        auto d = distance_idele(D, D, G);
        EXPECT_TRUE(d.support.empty());
        EXPECT_EQ(d.image, G.group.identity());
    }
    auto d = distance_idele(reps[0], reps[3], G);
    EXPECT_EQ(d.image, reps[3].element);
    GenusElement other = reps[0];
    other.local.pop_back();
    EXPECT_THROW(distance_idele(reps[0], other, G), DomainError);
}

TEST_F(Worked, ScanOptionsValidated)
{
    EXPECT_THROW(scan_subgroups(K, ext, B, G, ScanOptions{5, 50, 1}), DomainError);
    EXPECT_THROW(scan_subgroups(K, ext, B, G, ScanOptions{100, 0, 1}), DomainError);
}

TEST_F(Worked, ReportMatchesExpectations)
{
    auto A = selectivity_report({K, B, ext, {}});
    EXPECT_EQ(A.status, Status::ok);
    EXPECT_EQ(A.L0_index, 2u);
    EXPECT_EQ(A.admitting_count(), 2u);
    EXPECT_FALSE(A.division_prime_shortcut);
    EXPECT_EQ(A.certificates.size(), 2u);
}

TEST_F(Worked, HilbertClassFieldIndex)
{
    EXPECT_EQ(hilbert_class_field_index(K, ext, C), 2u);
}

TEST(Selectivity, FullRamificationShortcut)
{
    qf::QuadField K(-14);
    AlgebraData B(4, above(K, 23, 4));
    ExtensionData ext(K, 4, cyclotomic5(), {});
    auto A = selectivity_report({K, B, ext, {}});
    EXPECT_EQ(A.status, Status::ok);
    EXPECT_TRUE(A.division_prime_shortcut);
    EXPECT_EQ(A.L0_index, 1u);
    EXPECT_EQ(A.admitting_count(), 4u);
}

TEST(Selectivity, AbhnFailureIsReported)
{
    qf::QuadField K(-14);
    AlgebraData B(4, above(K, 137, 4));
    std::map<qf::PrimeOfK, building::SplittingType> ov;
    for (auto const & P : qf::prime_of_K(K, 137))
        ov.emplace(P, building::SplittingType::unramified({2, 2}));
    ExtensionData ext(K, 4, worked_tower(), ov);
    auto A = selectivity_report({K, B, ext, {}});
    EXPECT_EQ(A.status, Status::abhn_fail);
    EXPECT_TRUE(A.representatives.empty());
}

TEST(Selectivity, MissingSplittingDataIsConfigError)
{
    qf::QuadField K(-14);
    AlgebraData B(4, above(K, 3, 2));
    std::map<qf::PrimeOfK, building::SplittingType> ov;
    ov.emplace(qf::prime_of_K(K, 3).front(), building::SplittingType::unramified({2, 2}));
    ExtensionData ext(K, 4, std::nullopt, ov);
    EXPECT_THROW(selectivity_report({K, B, ext, {}}), ConfigError);
}

TEST(Selectivity, NoScanDataIsInconclusive)
{
    qf::QuadField K(-14);
    AlgebraData B(4, above(K, 137, 2));
    std::map<qf::PrimeOfK, building::SplittingType> ov;
    for (auto const & P : qf::prime_of_K(K, 137))
        ov.emplace(P, building::SplittingType::unramified({2, 2}));
    ExtensionData ext(K, 4, std::nullopt, ov);
    auto G = genus_group(B, qf::class_group(K));
    try {
        scan_subgroups(K, ext, B, G, ScanOptions{100, 50, 1});
        FAIL() << "expected an inconclusive scan";
    } catch (InconclusiveScan const & e) {
        EXPECT_EQ(e.partial().H.size(), 1u);
        EXPECT_EQ(e.partial().last_prime, 97);
        EXPECT_EQ(e.partial().primes_examined, 0u);
    }
    auto A = selectivity_report({K, B, ext, ScanOptions{100, 50, 1}});
    EXPECT_EQ(A.status, Status::inconclusive);
    EXPECT_FALSE(A.inconclusive_reason.empty());
}

TEST(Selectivity, CubicHilbertClassField)
{
    // x^3 - x - 1 generates the Hilbert class field of Q(sqrt -23)
    qf::QuadField K(-23);
    AlgebraData B = AlgebraData::matrix_algebra(3);
    ExtensionData ext(K, 3, qf::TowerSpec{{{0, 0}, {1, 0}}, {-1, -1, 0, 1}}, {});
    auto A = selectivity_report({K, B, ext, {}});
    EXPECT_EQ(A.genus.order(), 3u);
    EXPECT_EQ(A.L0_index, 3u);
    ASSERT_EQ(A.representatives.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(A.representatives[i].a, (std::vector<int>{static_cast<int>(i)}));
        EXPECT_TRUE(A.representatives[i].b.empty());
        EXPECT_TRUE(A.representatives[i].c.empty());
    }
    EXPECT_EQ(A.admitting_count(), 1u);
}

TEST(Selectivity, TrivialGenusGroup)
{
    // h(-4) = 1
    qf::QuadField K(-1);
    ExtensionData ext(K, 4, qf::TowerSpec{{{0, 0}, {1, 0}}, {1, 1, 1, 1, 1}}, {});
    auto A = selectivity_report({K, AlgebraData::matrix_algebra(4), ext, {}});
    EXPECT_EQ(A.genus.order(), 1u);
    ASSERT_EQ(A.representatives.size(), 1u);
    EXPECT_TRUE(A.representatives[0].local.empty());
    EXPECT_TRUE(A.admits[0]);
}

TEST(Selectivity, KilledSubgroupUsesNthPowers)
{
    // C(-26) is cyclic of order 6; with n = 3 the genus group is C/C^3 of order 3
    qf::QuadField K(-26);
    auto C = qf::class_group(K);
    auto G = genus_group(AlgebraData::matrix_algebra(3), C);
    EXPECT_EQ(G.order(), 3u);
    EXPECT_EQ(G.killed.size(), 2u);
}

TEST(ExtensionData, OverridesWinAndDegreesAreChecked)
{
    qf::QuadField K(-14);
    auto P3 = qf::prime_of_K(K, 3).front();
    std::map<qf::PrimeOfK, building::SplittingType> ov;
    ov.emplace(P3, building::SplittingType::unramified({1, 1, 1, 1}));
    ExtensionData ext(K, 4, worked_tower(), ov);
    EXPECT_EQ(*ext.for_prime(P3), building::SplittingType::unramified({1, 1, 1, 1}));
    EXPECT_FALSE(ext.for_scan(qf::prime_of_K(K, 7).front()));
    EXPECT_FALSE(ext.for_prime(qf::prime_of_K(K, 5).front())); // ramified in L
    EXPECT_THROW(ExtensionData(K, 3, worked_tower(), {}), ConfigError);
}
