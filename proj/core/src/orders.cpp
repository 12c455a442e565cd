#include "selorder/orders.hpp"

#include <algorithm>

#include "selorder/error.hpp"

namespace selorder::orders {

/* {{{ IntMatrix */

IntMatrix::IntMatrix(std::size_t n)
    : IntMatrix(n, n)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : r_(rows)
    , c_(cols)
    , v_(rows * cols, Integer(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : r_(rows.size())
    , c_(rows.size() ? rows.begin()->size() : 0)
{
    for (auto const & row : rows) {
        if (row.size() != c_)
            throw DomainError("ragged matrix literal");
        for (long x : row)
            v_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix M(n);
    for (std::size_t i = 0; i < n; ++i)
        M(i, i) = 1;
    return M;
}

IntMatrix IntMatrix::operator*(IntMatrix const & o) const
{
    if (c_ != o.r_)
        throw DomainError("matrix shapes do not match for multiplication");
    IntMatrix P(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            Integer const & x = (*this)(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                P(i, j) += x * o(k, j);
        }
    return P;
}

IntMatrix IntMatrix::operator+(IntMatrix const & o) const
{
    if (r_ != o.r_ || c_ != o.c_)
        throw DomainError("matrix shapes do not match for addition");
    IntMatrix S = *this;
    for (std::size_t i = 0; i < v_.size(); ++i)
        S.v_[i] += o.v_[i];
    return S;
}

IntMatrix IntMatrix::operator*(Integer const & s) const
{
    IntMatrix S = *this;
    for (auto & x : S.v_)
        x *= s;
    return S;
}

IntMatrix IntMatrix::pow(unsigned k) const
{
    if (r_ != c_)
        throw DomainError("power of a non-square matrix");
    IntMatrix R = identity(r_);
    for (unsigned i = 0; i < k; ++i)
        R = R * *this;
    return R;
}

std::ostream & operator<<(std::ostream & os, IntMatrix const & M)
{
    os << "[";
    for (std::size_t i = 0; i < M.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < M.cols(); ++j)
            os << (j ? "," : "") << M(i, j);
        os << "]";
    }
    return os << "]";
}

/* }}} */

std::optional<long> valuation(Integer const & x, Integer const & p)
{
    if (x == 0)
        return std::nullopt;
    Integer y = abs(x);
    long v = 0;
    while (y % p == 0) {
        y /= p;
        ++v;
    }
    return v;
}

ValuationPattern::ValuationPattern(std::span<std::int64_t const> a)
{
    std::size_t const n = a.size();
    V_.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            V_[i][j] = a[i] - a[j];
}

ValuationPattern::ValuationPattern(BoundMatrix V)
    : V_(std::move(V))
{
    std::size_t const n = V_.size();
    for (auto const & row : V_)
        if (row.size() != n)
            throw DomainError("valuation pattern must be square");
    for (std::size_t i = 0; i < n; ++i) {
        if (V_[i][i] != 0)
            throw DomainError("valuation pattern needs a zero diagonal");
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (V_[i][j] + V_[j][k] != V_[i][k])
                    throw DomainError("valuation pattern is not of the form a_i - a_j");
    }
}

ValuationPattern pattern_from_class(building::HomothetyClass const & v)
{
    return ValuationPattern(std::span<std::int64_t const>(v.coords()));
}

UnramifiedGenerator unramified_generator(Integer const & p, int f)
{
    if (f < 1)
        throw DomainError("inertia degree must be positive");
    auto const h = ff::least_irreducible(p, f);
    std::size_t const n = static_cast<std::size_t>(f);
    IntMatrix C(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        C(i, i + 1) = 1;
    for (std::size_t j = 0; j < n; ++j)
        C(n - 1, j) = -h[j];
    return {std::move(C), ff::FFPolynomial::from_integers(ff::FiniteField(p), h)};
}

std::vector<IntMatrix> local_module_basis(building::SplittingType const & s, Integer const & p)
{
    if (!s.is_unramified())
        throw HypothesisError("hypothesis violation: prime ramified in L (" + s.to_string() + ")");
    std::size_t const n = static_cast<std::size_t>(s.n());
    std::vector<IntMatrix> basis;
    std::size_t offset = 0;
    for (int f : s.inertia_degrees()) {
        auto const C = unramified_generator(p, f).companion;
        IntMatrix power = IntMatrix::identity(static_cast<std::size_t>(f));
        for (int j = 0; j < f; ++j) {
            IntMatrix B(n);
            for (std::size_t r = 0; r < static_cast<std::size_t>(f); ++r)
                for (std::size_t c = 0; c < static_cast<std::size_t>(f); ++c)
                    B(offset + r, offset + c) = power(r, c);
            basis.push_back(std::move(B));
            power = power * C;
        }
        offset += static_cast<std::size_t>(f);
    }
    return basis;
}

bool pattern_contains(ValuationPattern const & V, IntMatrix const & M, Integer const & p)
{
    std::size_t const n = static_cast<std::size_t>(V.n());
    if (M.rows() != n || M.cols() != n)
        throw DomainError("matrix and valuation pattern have different shapes");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto v = valuation(M(i, j), p);
            if (v && *v < V(i, j))
                return false;
        }
    return true;
}

bool oracle_contains(building::HomothetyClass const & v, building::SplittingType const & s, Integer const & p)
{
    if (v.n() != s.n())
        throw DomainError("vertex dimension differs from n");
    auto const V = pattern_from_class(v);
    for (auto const & B : local_module_basis(s, p))
        if (!pattern_contains(V, B, p))
            return false;
    return true;
}

BoundMatrix intersect_patterns(std::span<ValuationPattern const> patterns)
{
    if (patterns.empty())
        throw DomainError("intersection of an empty list of orders");
    BoundMatrix R = patterns.front().bounds();
    for (auto const & P : patterns.subspan(1)) {
        if (P.n() != static_cast<int>(R.size()))
            throw DomainError("valuation patterns of different dimension");
        for (std::size_t i = 0; i < R.size(); ++i)
            for (std::size_t j = 0; j < R.size(); ++j)
                R[i][j] = std::max(R[i][j], P(i, j));
    }
    return R;
}

} // namespace selorder::orders
