#ifndef SELORDER_BUILDING_HPP
#define SELORDER_BUILDING_HPP

#include <cstdint>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

/*
 * Vertices of one apartment of the affine building of SL_n over a
 * discretely valued local field.  A vertex is a homothety class of lattices
 * O e_1 pi^{a_1} + ... + O e_n pi^{a_n}, i.e. a vector in Z^n modulo the
 * all-ones vector.
 *
 * All positional arguments are in the adapted basis of the local extension:
 * the primes P_1, ..., P_g of L above p occupy consecutive blocks of sizes
 * f_1, ..., f_g.  Permuting the blocks changes which classes qualify.
 */

namespace selorder::building {

struct LocalFactor {
    int e = 1;  /* ramification index */
    int f = 1;  /* inertia degree */
    bool operator==(LocalFactor const &) const = default;
    auto operator<=>(LocalFactor const &) const = default;
};

class SplittingType
{
  public:
    SplittingType() = default;
    /* checks sum e_i f_i == n and all entries >= 1 */
    SplittingType(int n, std::vector<LocalFactor> factors);

    /* unramified type with the given inertia degrees, n = sum f_i */
    static SplittingType unramified(std::span<int const> inertia_degrees);
    static SplittingType unramified(std::initializer_list<int> inertia_degrees);

    int n() const { return n_; }
    std::size_t g() const { return factors_.size(); }
    std::vector<LocalFactor> const & factors() const { return factors_; }
    std::vector<int> inertia_degrees() const;
    bool is_unramified() const;
    bool splits_completely() const;
    bool has_degree_one_factor() const;

    /* factors sorted by (f, e); puts a degree-one prime first when present */
    SplittingType sorted() const;

    std::string to_string() const;
    bool operator==(SplittingType const &) const = default;

  private:
    int n_ = 0;
    std::vector<LocalFactor> factors_;
};

class HomothetyClass
{
  public:
    HomothetyClass() = default;

    int n() const { return static_cast<int>(a_.size()); }
    std::vector<std::int64_t> const & coords() const { return a_; }
    std::int64_t operator[](std::size_t i) const { return a_[i]; }

    std::string to_string() const;
    bool operator==(HomothetyClass const &) const = default;
    auto operator<=>(HomothetyClass const &) const = default;

    friend HomothetyClass canonicalize(std::span<std::int64_t const> raw);

  private:
    std::vector<std::int64_t> a_;
};

std::ostream & operator<<(std::ostream & os, HomothetyClass const & v);

/* subtracts the minimum; empty input is a DomainError */
HomothetyClass canonicalize(std::span<std::int64_t const> raw);
HomothetyClass canonicalize(std::initializer_list<std::int64_t> raw);

/* [l, ..., l (k times), 0, ..., 0] */
HomothetyClass block_class(int n, int k, std::int64_t level);

int vertex_type(HomothetyClass const & v);

/* (type(v2) - type(v1)) mod n */
int type_distance(HomothetyClass const & v1, HomothetyClass const & v2);

/* O_L sits in the maximal order of v iff v is constant on every block */
bool contains_ring_of_integers(HomothetyClass const & v, SplittingType const & s);

/* the subgroup of Z/nZ generated by gcd(f_1, ..., f_g), sorted */
std::vector<int> admissible_types(SplittingType const & s);

/* [0^n], [1^{f_1}, 0, ...], ..., [1^{f_1+...+f_{g-1}}, 0, ...] */
std::vector<HomothetyClass> chamber_vertices(SplittingType const & s);

/* All canonical block-constant classes with coordinates in [0, bound).
 * Block levels run as an odometer with the first block fastest. */
std::vector<HomothetyClass> enumerate_containing_vertices(SplittingType const & s, int bound);
std::vector<HomothetyClass> enumerate_containing_vertices(SplittingType const & s);

/* all ordered compositions of n into positive parts */
std::vector<std::vector<int>> compositions(int n);

} // namespace selorder::building

#endif /* SELORDER_BUILDING_HPP */
