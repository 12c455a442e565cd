#ifndef SELORDER_FFARITH_HPP
#define SELORDER_FFARITH_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <gmpxx.h>

/*
 * Exact arithmetic over F_p and F_{p^k}, dense univariate polynomials over
 * those fields, and their factorization.
 *
 * Extension fields are always F_p[x]/(h) where h is the least monic
 * irreducible of degree k in the canonical polynomial order (by degree,
 * then coefficients compared from the leading one downward).  Elements are
 * coordinate vectors (c_0, ..., c_{k-1}) with respect to 1, x, ..., x^{k-1},
 * every coordinate reduced into [0, p).
 */

namespace selorder::ff {

using Integer = mpz_class;

inline constexpr std::uint64_t default_seed = 0x5e1ec7edULL;

/* least non-negative residue */
Integer mod_floor(Integer const & a, Integer const & m);

int kronecker_symbol(Integer const & a, Integer const & n);

bool is_prime(Integer const & p);

class FFElement;
class FFPolynomial;

class FiniteField
{
  public:
    FiniteField() = default;

    /* the prime field F_p */
    explicit FiniteField(Integer const & p);

    /* F_p[x]/(modulus), modulus monic, low-to-high coefficients; its
     * irreducibility over F_p is checked. */
    FiniteField(Integer const & p, std::vector<Integer> modulus);

    /* F_{p^k} over the least monic irreducible of degree k. */
    static FiniteField extension(Integer const & p, int k);

    Integer const & characteristic() const { return data->p; }
    int degree() const { return data->k; }
    Integer order() const;
    std::vector<Integer> const & modulus() const { return data->modulus; }
    bool valid() const { return data != nullptr; }

    FFElement zero() const;
    FFElement one() const;
    FFElement element(Integer const & v) const;
    FFElement element(std::vector<Integer> coords) const;
    /* the class of x, a root of the modulus */
    FFElement generator() const;

    /* Enumerates F_q in coordinate order; index < order(). */
    FFElement element_at(Integer index) const;

    bool operator==(FiniteField const & o) const;

    friend std::ostream & operator<<(std::ostream & os, FiniteField const & F);

  private:
    struct Data {
        Integer p;
        int k = 1;
        std::vector<Integer> modulus;
    };
    std::shared_ptr<Data const> data;

    friend class FFElement;
};

class FFElement
{
  public:
    FFElement() = default;
    FFElement(FiniteField field, std::vector<Integer> coords);

    FiniteField const & field() const { return F; }
    std::vector<Integer> const & coords() const { return c; }

    bool is_zero() const;
    bool is_one() const;

    FFElement operator-() const;
    FFElement & operator+=(FFElement const & o);
    FFElement & operator-=(FFElement const & o);
    FFElement & operator*=(FFElement const & o);
    friend FFElement operator+(FFElement a, FFElement const & b) { return a += b; }
    friend FFElement operator-(FFElement a, FFElement const & b) { return a -= b; }
    friend FFElement operator*(FFElement a, FFElement const & b) { return a *= b; }

    /* throws DomainError on zero */
    FFElement inverse() const;
    FFElement pow(Integer e) const;

    /* The Frobenius inverse x -> x^{1/p}. */
    FFElement pth_root() const;

    bool operator==(FFElement const & o) const;
    /* lexicographic on (c_0, ..., c_{k-1}); fields must agree */
    std::strong_ordering operator<=>(FFElement const & o) const;

    friend std::ostream & operator<<(std::ostream & os, FFElement const & x);

  private:
    FiniteField F;
    std::vector<Integer> c;

    void check_same_field(FFElement const & o) const;
};

/* Dense polynomial over a finite field; coefficients low to high, no
 * trailing zeros. */
class FFPolynomial
{
  public:
    FFPolynomial() = default;
    explicit FFPolynomial(FiniteField field);
    FFPolynomial(FiniteField field, std::vector<FFElement> coeffs);

    static FFPolynomial from_integers(FiniteField const & field,
                                      std::span<Integer const> low_to_high);
    static FFPolynomial from_integers(FiniteField const & field,
                                      std::initializer_list<long> low_to_high);
    static FFPolynomial constant(FFElement c);
    static FFPolynomial x(FiniteField const & field);
    static FFPolynomial monomial(FFElement c, int deg);

    FiniteField const & field() const { return F; }
    std::vector<FFElement> const & coefficients() const { return co; }

    /* -1 for the zero polynomial */
    int degree() const { return static_cast<int>(co.size()) - 1; }
    bool is_zero() const { return co.empty(); }
    bool is_one() const;
    bool is_monic() const;
    FFElement coeff(int i) const;
    FFElement const & leading() const;

    FFPolynomial monic() const;
    FFPolynomial derivative() const;
    FFElement operator()(FFElement const & x) const;

    FFPolynomial operator-() const;
    FFPolynomial & operator+=(FFPolynomial const & o);
    FFPolynomial & operator-=(FFPolynomial const & o);
    FFPolynomial & operator*=(FFPolynomial const & o);
    FFPolynomial & operator*=(FFElement const & s);
    friend FFPolynomial operator+(FFPolynomial a, FFPolynomial const & b) { return a += b; }
    friend FFPolynomial operator-(FFPolynomial a, FFPolynomial const & b) { return a -= b; }
    friend FFPolynomial operator*(FFPolynomial a, FFPolynomial const & b) { return a *= b; }
    friend FFPolynomial operator*(FFPolynomial a, FFElement const & s) { return a *= s; }

    friend FFPolynomial operator/(FFPolynomial const & a, FFPolynomial const & b);
    friend FFPolynomial operator%(FFPolynomial const & a, FFPolynomial const & b);

    bool operator==(FFPolynomial const & o) const;

    friend std::ostream & operator<<(std::ostream & os, FFPolynomial const & f);

  private:
    FiniteField F;
    std::vector<FFElement> co;

    void trim();
};

/* quotient and remainder; divisor nonzero */
std::pair<FFPolynomial, FFPolynomial> divmod(FFPolynomial const & a, FFPolynomial const & b);

/* monic gcd (zero if both are zero) */
FFPolynomial gcd(FFPolynomial a, FFPolynomial b);

/* base^e mod m, e >= 0 */
FFPolynomial powmod(FFPolynomial const & base, Integer e, FFPolynomial const & m);

/* by degree, then coefficients from the leading one down */
std::strong_ordering canonical_compare(FFPolynomial const & a, FFPolynomial const & b);

struct Factor {
    FFPolynomial poly;
    int multiplicity;
    bool operator==(Factor const &) const = default;
};

/* Square-free, distinct-degree, then Cantor-Zassenhaus equal-degree
 * splitting.  Factors are monic and sorted by canonical_compare. */
std::vector<Factor> factor_ff(FFPolynomial const & f, std::uint64_t seed = default_seed);

bool is_irreducible_ff(FFPolynomial const & f);

/* The square root with the lexicographically smaller coordinate tuple, or
 * nothing when a is a non-square.  Odd characteristic only. */
std::optional<FFElement> sqrt_ff(FFElement const & a);

/* Least monic irreducible of degree k over F_p (integer coefficients in
 * [0, p), low to high). */
std::vector<Integer> least_irreducible(Integer const & p, int k);

/* Re-multiply a factorization; used by tests and by factor_ff's own
 * postcondition check in debug builds. */
FFPolynomial expand(std::vector<Factor> const & factors, FiniteField const & field);

} // namespace selorder::ff

#endif /* SELORDER_FFARITH_HPP */
