#ifndef SELORDER_ORDERS_HPP
#define SELORDER_ORDERS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "selorder/building.hpp"
#include "selorder/ffarith.hpp"

/*
 * Brute-force model of the local theory.  A maximal order of M_n(K_p) in
 * the standard apartment is Lambda(a) = { M : v_p(M_ij) >= a_i - a_j }, and
 * O_L (p unramified in L) is realised as block-diagonal companion-matrix
 * algebras.  Containment is a finite list of valuation inequalities on
 * exact integer matrices.
 */

namespace selorder::orders {

using ff::Integer;

class IntMatrix
{
  public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n);
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Integer & operator()(std::size_t i, std::size_t j) { return v_[i * c_ + j]; }
    Integer const & operator()(std::size_t i, std::size_t j) const { return v_[i * c_ + j]; }

    IntMatrix operator*(IntMatrix const & o) const;
    IntMatrix operator+(IntMatrix const & o) const;
    IntMatrix operator*(Integer const & s) const;
    IntMatrix pow(unsigned k) const;

    bool operator==(IntMatrix const & o) const { return r_ == o.r_ && c_ == o.c_ && v_ == o.v_; }

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Integer> v_;
};

std::ostream & operator<<(std::ostream & os, IntMatrix const & M);

/* exponent of p in x; zero has infinite valuation (nullopt) */
std::optional<long> valuation(Integer const & x, Integer const & p);

/* Entrywise lower bounds on valuations. */
using BoundMatrix = std::vector<std::vector<std::int64_t>>;

class ValuationPattern
{
  public:
    ValuationPattern() = default;
    /* V[i][j] = a_i - a_j */
    explicit ValuationPattern(std::span<std::int64_t const> defining);
    /* checks V[i][i] = 0 and V[i][j] + V[j][k] = V[i][k] */
    explicit ValuationPattern(BoundMatrix V);

    int n() const { return static_cast<int>(V_.size()); }
    BoundMatrix const & bounds() const { return V_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return V_[i][j]; }

    bool operator==(ValuationPattern const &) const = default;

  private:
    BoundMatrix V_;
};

ValuationPattern pattern_from_class(building::HomothetyClass const & v);

struct UnramifiedGenerator {
    IntMatrix companion;
    ff::FFPolynomial reduction;
};

/* Companion matrix (ones on the superdiagonal, last row -h_0..-h_{f-1}) of
 * the integer lift of the least irreducible h of degree f over F_p. */
UnramifiedGenerator unramified_generator(Integer const & p, int f);

/* block-diagonal images of C_i^j, block i, j = 0..f_i-1 */
std::vector<IntMatrix> local_module_basis(building::SplittingType const & s, Integer const & p);

bool pattern_contains(ValuationPattern const & V, IntMatrix const & M, Integer const & p);

bool oracle_contains(building::HomothetyClass const & v, building::SplittingType const & s, Integer const & p);

/* entrywise maximum; the result is a general order pattern */
BoundMatrix intersect_patterns(std::span<ValuationPattern const> patterns);

} // namespace selorder::orders

#endif /* SELORDER_ORDERS_HPP */
