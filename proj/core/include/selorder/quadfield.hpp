#ifndef SELORDER_QUADFIELD_HPP
#define SELORDER_QUADFIELD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "selorder/abelian_group.hpp"
#include "selorder/building.hpp"
#include "selorder/ffarith.hpp"

/*
 * Imaginary quadratic fields K = Q(sqrt m), their class groups through
 * reduced positive definite binary quadratic forms, the primes of K above
 * a rational prime, and the splitting of those primes in a two-level tower
 * L / L_0 / K.
 *
 * The form (a, b, c) stands for the ideal class of aZ + ((-b + sqrt d)/2)Z.
 */

namespace selorder::qf {

using ff::Integer;

class QuadField
{
  public:
    /* m < 0 squarefree */
    explicit QuadField(Integer m);

    Integer const & m() const { return m_; }
    /* m if m = 1 mod 4, else 4m */
    Integer const & discriminant() const { return d_; }

    bool operator==(QuadField const &) const = default;

  private:
    Integer m_;
    Integer d_;
};

bool is_fundamental_discriminant(Integer const & d);

struct BinQuadForm {
    Integer a, b, c;

    Integer discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    std::string to_string() const;

    bool operator==(BinQuadForm const & o) const { return a == o.a && b == o.b && c == o.c; }
    /* by a, then |b|, then positive b first */
    std::strong_ordering operator<=>(BinQuadForm const & o) const;
};

std::ostream & operator<<(std::ostream & os, BinQuadForm const & f);

BinQuadForm principal_form(Integer const & d);

/* checks the discriminant and a > 0 */
BinQuadForm reduce_form(BinQuadForm const & f, Integer const & d);
BinQuadForm reduce_form(BinQuadForm const & f);

/* Gauss composition followed by reduction */
BinQuadForm compose(BinQuadForm const & f1, BinQuadForm const & f2);
BinQuadForm inverse_form(BinQuadForm const & f);
BinQuadForm power_form(BinQuadForm const & f, std::int64_t k);

class ClassGroup
{
  public:
    using Elem = FiniteAbelianGroup::Elem;

    ClassGroup() = default;
    explicit ClassGroup(QuadField const & K);

    Integer const & discriminant() const { return d_; }
    std::size_t size() const { return forms_.size(); }
    /* reduced forms; index 0 is the principal form */
    std::vector<BinQuadForm> const & forms() const { return forms_; }
    BinQuadForm const & form(Elem i) const { return forms_[i]; }
    FiniteAbelianGroup const & group() const { return group_; }

    /* index of the class of any form of the right discriminant */
    Elem index_of(BinQuadForm const & f) const;
    std::size_t order_of(BinQuadForm const & f) const { return group_.order(index_of(f)); }
    std::vector<FiniteAbelianGroup::CyclicFactor> const & generators() const { return gens_; }
    std::size_t exponent() const { return group_.exponent(); }
    bool is_cyclic() const { return gens_.size() <= 1; }

  private:
    Integer d_;
    std::vector<BinQuadForm> forms_;
    std::map<BinQuadForm, Elem> index_;
    FiniteAbelianGroup group_;
    std::vector<FiniteAbelianGroup::CyclicFactor> gens_;
};

ClassGroup class_group(QuadField const & K);

enum class PrimeKind { split, inert, ramified };

std::string to_string(PrimeKind k);

struct PrimeOfK {
    Integer p;
    PrimeKind kind = PrimeKind::inert;
    /* 1 or 2 for the two conjugate split primes, 0 otherwise */
    int label = 0;
    /* b with b^2 = d mod 4p defining the prime as (p, (-b + sqrt d)/2);
     * 0 for inert primes */
    Integer b;
    /* reduced form of the ideal class */
    BinQuadForm form;

    int residue_degree() const { return kind == PrimeKind::inert ? 2 : 1; }
    Integer norm() const { return kind == PrimeKind::inert ? p * p : p; }
    std::string name() const;

    bool operator==(PrimeOfK const & o) const { return p == o.p && label == o.label; }
    std::strong_ordering operator<=>(PrimeOfK const & o) const;
};

/* Split primes: label 1 is the prime on which sqrt d reduces to the
 * smaller square root of d mod p (as returned by sqrt_ff), label 2 its
 * conjugate. */
std::vector<PrimeOfK> prime_of_K(QuadField const & K, Integer const & p);

/* u + v sqrt m */
struct KElement {
    Integer u;
    Integer v;
    bool operator==(KElement const & o) const { return u == o.u && v == o.v; }
};

/* L = L_0(gamma), L_0 = K(beta); beta a root of the monic level-1
 * polynomial over Z[sqrt m], gamma a root of the monic level-2 polynomial
 * over Z.  Coefficients are low to high; an empty level 2 means L = L_0. */
struct TowerSpec {
    std::vector<KElement> level1;
    std::vector<Integer> level2;

    int level1_degree() const { return static_cast<int>(level1.size()) - 1; }
    int level2_degree() const { return level2.empty() ? 1 : static_cast<int>(level2.size()) - 1; }
    int degree() const { return level1_degree() * level2_degree(); }

    /* monic, degrees in range, level 2 separable; level-1 separability
     * needs m and is checked by BadPrimes */
    void validate() const;

    bool operator==(TowerSpec const &) const = default;
};

/* Integer discriminant of a monic polynomial over Z. */
Integer polynomial_discriminant(std::vector<Integer> const & low_to_high);

/* Primes dividing 2 d, the norm of the level-1 discriminant or the level-2
 * discriminant.  Represented by their product; is_bad tests divisibility. */
class BadPrimes
{
  public:
    BadPrimes(QuadField const & K, TowerSpec const & tower);
    bool is_bad(Integer const & p) const;
    Integer const & product() const { return product_; }

  private:
    Integer product_;
};

/* Splitting of P in L, factors sorted by (f, e).  Throws BadPrimeError for
 * primes above 2 or ramified in K, RamifiedInLError when a reduction is
 * not square-free. */
building::SplittingType splitting_in_L(QuadField const & K, TowerSpec const & tower, PrimeOfK const & P,
                                       std::uint64_t seed = ff::default_seed);

/* image of sqrt m in the residue field of P */
ff::FFElement residue_sqrt_m(QuadField const & K, PrimeOfK const & P);

} // namespace selorder::qf

#endif /* SELORDER_QUADFIELD_HPP */
