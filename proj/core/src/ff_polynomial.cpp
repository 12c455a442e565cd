#include "selorder/ffarith.hpp"

#include <utility>

#include "selorder/error.hpp"

namespace selorder::ff {

FFPolynomial::FFPolynomial(FiniteField field)
    : F(std::move(field))
{
}

FFPolynomial::FFPolynomial(FiniteField field, std::vector<FFElement> coeffs)
    : F(std::move(field))
    , co(std::move(coeffs))
{
    for (auto const & x : co)
        if (!(x.field() == F))
            throw DomainError("polynomial coefficient from a different field");
    trim();
}

FFPolynomial FFPolynomial::from_integers(FiniteField const & field,
                                         std::span<Integer const> low_to_high)
{
    std::vector<FFElement> c;
    c.reserve(low_to_high.size());
    for (auto const & v : low_to_high)
        c.push_back(field.element(v));
    return FFPolynomial(field, std::move(c));
}

FFPolynomial FFPolynomial::from_integers(FiniteField const & field,
                                         std::initializer_list<long> low_to_high)
{
    std::vector<Integer> v(low_to_high.begin(), low_to_high.end());
    return from_integers(field, v);
}

FFPolynomial FFPolynomial::constant(FFElement c)
{
    FiniteField F = c.field();
    return FFPolynomial(std::move(F), {std::move(c)});
}

FFPolynomial FFPolynomial::x(FiniteField const & field)
{
    return FFPolynomial(field, {field.zero(), field.one()});
}

FFPolynomial FFPolynomial::monomial(FFElement c, int deg)
{
    FiniteField F = c.field();
    std::vector<FFElement> v(static_cast<size_t>(deg) + 1, F.zero());
    v.back() = std::move(c);
    return FFPolynomial(std::move(F), std::move(v));
}

void FFPolynomial::trim()
{
    while (!co.empty() && co.back().is_zero())
        co.pop_back();
}

bool FFPolynomial::is_one() const
{
    return co.size() == 1 && co[0].is_one();
}

bool FFPolynomial::is_monic() const
{
    return !co.empty() && co.back().is_one();
}

FFElement FFPolynomial::coeff(int i) const
{
    if (i < 0 || i > degree())
        return F.zero();
    return co[static_cast<size_t>(i)];
}

FFElement const & FFPolynomial::leading() const
{
    if (co.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return co.back();
}

FFPolynomial FFPolynomial::monic() const
{
    if (co.empty() || co.back().is_one())
        return *this;
    return *this * co.back().inverse();
}

FFPolynomial FFPolynomial::derivative() const
{
    std::vector<FFElement> d;
    for (size_t i = 1; i < co.size(); ++i)
        d.push_back(co[i] * F.element(Integer(static_cast<unsigned long>(i))));
    return FFPolynomial(F, std::move(d));
}

FFElement FFPolynomial::operator()(FFElement const & x) const
{
    FFElement acc = F.zero();
    for (size_t i = co.size(); i-- > 0;) {
        acc *= x;
        acc += co[i];
    }
    return acc;
}

FFPolynomial FFPolynomial::operator-() const
{
    FFPolynomial r = *this;
    for (auto & x : r.co)
        x = -x;
    return r;
}

FFPolynomial & FFPolynomial::operator+=(FFPolynomial const & o)
{
    if (co.size() < o.co.size())
        co.resize(o.co.size(), F.zero());
    for (size_t i = 0; i < o.co.size(); ++i)
        co[i] += o.co[i];
    trim();
    return *this;
}

FFPolynomial & FFPolynomial::operator-=(FFPolynomial const & o)
{
    if (co.size() < o.co.size())
        co.resize(o.co.size(), F.zero());
    for (size_t i = 0; i < o.co.size(); ++i)
        co[i] -= o.co[i];
    trim();
    return *this;
}

FFPolynomial & FFPolynomial::operator*=(FFPolynomial const & o)
{
    if (co.empty() || o.co.empty()) {
        co.clear();
        return *this;
    }
    std::vector<FFElement> prod(co.size() + o.co.size() - 1, F.zero());
    for (size_t i = 0; i < co.size(); ++i) {
        if (co[i].is_zero())
            continue;
        for (size_t j = 0; j < o.co.size(); ++j)
            prod[i + j] += co[i] * o.co[j];
    }
    co = std::move(prod);
    trim();
    return *this;
}

FFPolynomial & FFPolynomial::operator*=(FFElement const & s)
{
    for (auto & x : co)
        x *= s;
    trim();
    return *this;
}

std::pair<FFPolynomial, FFPolynomial> divmod(FFPolynomial const & a, FFPolynomial const & b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    FiniteField const & F = a.field();
    int const db = b.degree();
    if (a.degree() < db)
        return {FFPolynomial(F), a};
    std::vector<FFElement> r = a.coefficients();
    std::vector<FFElement> q(static_cast<size_t>(a.degree() - db) + 1, F.zero());
    FFElement const inv_lead = b.leading().inverse();
    auto const & bc = b.coefficients();
    for (int i = a.degree(); i >= db; --i) {
        FFElement const & ri = r[static_cast<size_t>(i)];
        if (ri.is_zero())
            continue;
        FFElement t = ri * inv_lead;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(i - db + j)] -= t * bc[static_cast<size_t>(j)];
        q[static_cast<size_t>(i - db)] = std::move(t);
    }
    r.resize(static_cast<size_t>(db), F.zero());
    return {FFPolynomial(F, std::move(q)), FFPolynomial(F, std::move(r))};
}

FFPolynomial operator/(FFPolynomial const & a, FFPolynomial const & b)
{
    return divmod(a, b).first;
}

FFPolynomial operator%(FFPolynomial const & a, FFPolynomial const & b)
{
    return divmod(a, b).second;
}

bool FFPolynomial::operator==(FFPolynomial const & o) const
{
    if (co.empty() && o.co.empty())
        return true;
    return co == o.co;
}

FFPolynomial gcd(FFPolynomial a, FFPolynomial b)
{
    while (!b.is_zero()) {
        FFPolynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FFPolynomial powmod(FFPolynomial const & base, Integer e, FFPolynomial const & m)
{
    if (e < 0)
        throw DomainError("negative exponent in powmod");
    FFPolynomial result = FFPolynomial::constant(m.field().one()) % m;
    FFPolynomial b = base % m;
    size_t const bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = (result * b) % m;
    }
    return result;
}

std::strong_ordering canonical_compare(FFPolynomial const & a, FFPolynomial const & b)
{
    if (a.degree() != b.degree())
        return a.degree() <=> b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        auto r = a.coefficients()[static_cast<size_t>(i)] <=> b.coefficients()[static_cast<size_t>(i)];
        if (r != 0)
            return r;
    }
    return std::strong_ordering::equal;
}

std::ostream & operator<<(std::ostream & os, FFPolynomial const & f)
{
    if (f.is_zero())
        return os << "0";
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        auto const & c = f.coefficients()[static_cast<size_t>(i)];
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (!c.is_one() || i == 0)
            os << c;
        if (i >= 1)
            os << (c.is_one() ? "" : "*") << "x";
        if (i >= 2)
            os << "^" << i;
    }
    return os;
}

} // namespace selorder::ff
