#ifndef SELORDER_SELECTIVITY_HPP
#define SELORDER_SELECTIVITY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "selorder/abelian_group.hpp"
#include "selorder/building.hpp"
#include "selorder/quadfield.hpp"

/*
 * Global side: which isomorphism classes of maximal orders in a central
 * simple algebra B of degree n over K admit an embedding of O_L.
 *
 * Isomorphism classes of maximal orders are in bijection with
 *     G_R = C_K / (C_K^n * < [v]^{kappa_v} : v ramified in B >),
 * the Galois group of an unramified abelian extension K(R)/K.  With
 * L_0 = K(R) cap L the classes admitting O_L are exactly the kernel of the
 * restriction G_R -> Gal(L_0/K), so the proportion is 1/[L_0:K].
 * Subgroups H = Gal(K(R)/L_0) and Hhat (same for the Galois closure) are
 * found by scanning Frobenius elements of small primes.
 */

namespace selorder::sel {

using Elem = FiniteAbelianGroup::Elem;
using qf::Integer;

struct RamifiedPrime {
    qf::PrimeOfK prime;
    int local_index = 1;
};

class AlgebraData
{
  public:
    /* n >= 3, every m_v > 1 dividing n, primes pairwise distinct */
    AlgebraData(int n, std::vector<RamifiedPrime> ramification);
    static AlgebraData matrix_algebra(int n);

    int degree() const { return n_; }
    int dimension() const { return n_ * n_; }
    std::vector<RamifiedPrime> const & ramification() const { return ram_; }
    std::optional<int> local_index(qf::PrimeOfK const & P) const;
    bool is_ramified(qf::PrimeOfK const & P) const { return local_index(P).has_value(); }
    /* kappa_v = n / m_v */
    int local_capacity(RamifiedPrime const & r) const { return n_ / r.local_index; }
    bool has_division_prime() const;
    bool has_partial_ramification() const;

  private:
    int n_ = 0;
    std::vector<RamifiedPrime> ram_;
};

/* Splitting data for primes of K: explicit overrides first, then the
 * tower when one is given. */
class ExtensionData
{
  public:
    ExtensionData(qf::QuadField K, int degree, std::optional<qf::TowerSpec> tower,
                  std::map<qf::PrimeOfK, building::SplittingType> overrides,
                  std::uint64_t seed = ff::default_seed);

    int degree() const { return n_; }
    std::optional<qf::TowerSpec> const & tower() const { return tower_; }
    std::map<qf::PrimeOfK, building::SplittingType> const & overrides() const { return overrides_; }
    bool is_bad(Integer const & p) const;

    /* override, else tower; nothing when neither can answer */
    std::optional<building::SplittingType> for_prime(qf::PrimeOfK const & P) const;
    /* as for_prime, but never consults the tower at bad primes */
    std::optional<building::SplittingType> for_scan(qf::PrimeOfK const & P) const;

  private:
    qf::QuadField K_;
    int n_;
    std::optional<qf::TowerSpec> tower_;
    std::optional<qf::BadPrimes> bad_;
    std::map<qf::PrimeOfK, building::SplittingType> overrides_;
    std::uint64_t seed_;
};

struct AbhnEntry {
    qf::PrimeOfK prime;
    int local_index;
    building::SplittingType splitting;
    bool ok;
};

struct AbhnReport {
    bool ok = true;
    std::vector<AbhnEntry> entries;
};

/* m_v | e f for every ramified v and every prime of L above it; missing
 * splitting data is a ConfigError */
AbhnReport check_abhn(AlgebraData const & B, std::map<qf::PrimeOfK, building::SplittingType> const & splitting);

struct GenusGroup {
    qf::ClassGroup classes;
    FiniteAbelianGroup group;
    /* class index -> element of G_R */
    std::vector<Elem> projection;
    /* element of G_R -> least class index mapping to it */
    std::vector<Elem> representative;
    /* the subgroup of C_K that is killed, as class indices */
    std::vector<Elem> killed;
    std::vector<FiniteAbelianGroup::CyclicFactor> generators;
    std::vector<qf::PrimeOfK> ramified;
    int n = 0;

    std::size_t order() const { return group.size(); }
    std::size_t exponent() const { return group.exponent(); }
};

GenusGroup genus_group(AlgebraData const & B, qf::ClassGroup const & C);

/* C_K itself, viewed as the group attached to an unramified algebra of
 * degree n with nothing killed; used for Hilbert class field comparisons */
GenusGroup full_class_group(qf::ClassGroup const & C, int n);

/* image of the ideal class of P; DomainError if P ramifies in B */
Elem frobenius(qf::PrimeOfK const & P, GenusGroup const & G);

struct ScanOptions {
    Integer bound = 5000;
    std::size_t window = 50;
    std::uint64_t seed = ff::default_seed;
};

struct Witness {
    qf::PrimeOfK prime;
    building::SplittingType splitting;
    Elem frobenius = 0;
};

struct ParamGenerator {
    Elem element = 0;
    /* order of the generator in G/H, H/Hhat or Hhat respectively */
    std::size_t order = 1;
    Witness witness;
};

struct SubgroupData {
    std::size_t group_order = 1;
    std::vector<Elem> H;
    std::vector<Elem> H_hat;
    /* primes that enlarged H (resp. Hhat) when first met */
    std::vector<Witness> h_witnesses;
    std::vector<Witness> h_hat_witnesses;
    /* least prime per G_R element: any good prime / with a degree-one
     * factor in L / splitting completely in L */
    std::map<Elem, Witness> any_witness;
    std::map<Elem, Witness> degree_one_witness;
    std::map<Elem, Witness> split_witness;
    Integer bound;
    std::size_t window = 0;
    Integer last_prime;
    std::size_t primes_examined = 0;
    bool stopped_early = false;
    /* rho: generators of G/H, sigma: of H/Hhat, tau: of Hhat */
    std::vector<ParamGenerator> rho, sigma, tau;

    std::size_t index() const { return group_order / H.size(); }
};

class InconclusiveScan : public std::runtime_error
{
  public:
    InconclusiveScan(std::string const & what, SubgroupData partial)
        : std::runtime_error(what)
        , partial_(std::move(partial))
    {
    }
    SubgroupData const & partial() const { return partial_; }

  private:
    SubgroupData partial_;
};

/* Scans rational primes up to the bound.  Stops early once `window`
 * consecutive degree-one primes of K with a degree-one factor in L left H
 * unchanged, `window` consecutive completely split ones left Hhat
 * unchanged, and every element of G_R, H and Hhat has a witness of the
 * matching kind.  Reaching the bound first is an InconclusiveScan. */
SubgroupData scan_subgroups(qf::QuadField const & K, ExtensionData const & ext, AlgebraData const & B,
                            GenusGroup const & G, ScanOptions const & opts = {});

struct LocalVertex {
    enum class Role { lambda, mu, nu };
    Role role;
    std::size_t index;
    qf::PrimeOfK prime;
    building::HomothetyClass vertex;

    bool operator==(LocalVertex const & o) const
    {
        return role == o.role && index == o.index && prime == o.prime && vertex == o.vertex;
    }
};

std::string to_string(LocalVertex::Role r);

/* The maximal order D^{a,b,c}: equal to R away from the parametrizing
 * primes, the listed vertex at each of them. */
struct GenusElement {
    std::vector<int> a, b, c;
    std::vector<LocalVertex> local;
    /* delta(D^{0,0,0}, D^{a,b,c}) in G_R */
    Elem element = 0;

    bool operator==(GenusElement const &) const = default;
};

/* one representative per element of G_R, a-tuple most significant */
std::vector<GenusElement> parametrize_genus(GenusGroup const & G, SubgroupData const & S);

struct DistanceIdele {
    std::vector<std::pair<qf::PrimeOfK, int>> support;
    Elem image = 0;
};

DistanceIdele distance_idele(GenusElement const & D1, GenusElement const & D2, GenusGroup const & G);

bool admits_embedding(GenusElement const & E, SubgroupData const & S, GenusGroup const & G);

/* [K~ cap L : K] from a scan against the full class group */
std::size_t hilbert_class_field_index(qf::QuadField const & K, ExtensionData const & ext, qf::ClassGroup const & C,
                                      ScanOptions const & opts = {});

struct SelectivityProblem {
    qf::QuadField K;
    AlgebraData B;
    ExtensionData ext;
    ScanOptions scan;
};

enum class Status { ok, abhn_fail, inconclusive };

std::string to_string(Status s);

struct LocalCertificate {
    qf::PrimeOfK prime;
    std::string role;
    building::SplittingType splitting;
    std::vector<int> admissible_types;
    std::vector<building::HomothetyClass> chamber_vertices;
};

struct PrimeClassInfo {
    qf::PrimeOfK prime;
    std::size_t class_order = 1;
    /* order of the Frobenius in G_R; absent for primes ramified in B */
    std::optional<std::size_t> frobenius_order;
};

struct Analysis {
    Status status = Status::ok;
    qf::ClassGroup classes;
    GenusGroup genus;
    AbhnReport abhn;
    bool division_prime_shortcut = false;
    std::optional<SubgroupData> scan;
    std::string inconclusive_reason;
    std::size_t L0_index = 1;
    std::vector<GenusElement> representatives;
    std::vector<bool> admits;
    std::vector<LocalCertificate> certificates;
    std::vector<PrimeClassInfo> prime_classes;
    std::vector<std::string> notes;

    std::size_t admitting_count() const;
};

Analysis selectivity_report(SelectivityProblem const & problem);

} // namespace selorder::sel

#endif /* SELORDER_SELECTIVITY_HPP */
