#include "selorder/ffarith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "selorder/error.hpp"

namespace selorder::ff {

Integer mod_floor(Integer const & a, Integer const & m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

int kronecker_symbol(Integer const & a, Integer const & n)
{
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool is_prime(Integer const & p)
{
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

/* {{{ FiniteField */

FiniteField::FiniteField(Integer const & p)
{
    if (!is_prime(p))
        throw DomainError("finite field characteristic must be prime, got " + p.get_str());
    auto d = std::make_shared<Data>();
    d->p = p;
    d->k = 1;
    d->modulus = {Integer(0), Integer(1)};
    data = std::move(d);
}

FiniteField::FiniteField(Integer const & p, std::vector<Integer> modulus)
{
    if (!is_prime(p))
        throw DomainError("finite field characteristic must be prime, got " + p.get_str());
    if (modulus.size() < 2)
        throw DomainError("field modulus must have degree >= 1");
    for (auto & c : modulus)
        c = mod_floor(c, p);
    if (modulus.back() != 1)
        throw DomainError("field modulus must be monic");
    FiniteField base(p);
    if (!is_irreducible_ff(FFPolynomial::from_integers(base, modulus)))
        throw DomainError("field modulus is reducible over F_" + p.get_str());
    auto d = std::make_shared<Data>();
    d->p = p;
    d->k = static_cast<int>(modulus.size()) - 1;
    d->modulus = std::move(modulus);
    data = std::move(d);
}

FiniteField FiniteField::extension(Integer const & p, int k)
{
    if (k < 1)
        throw DomainError("extension degree must be positive");
    if (k == 1)
        return FiniteField(p);
    FiniteField F;
    auto d = std::make_shared<Data>();
    d->p = p;
    d->k = k;
    d->modulus = least_irreducible(p, k);
    F.data = std::move(d);
    return F;
}

Integer FiniteField::order() const
{
    Integer q;
    mpz_pow_ui(q.get_mpz_t(), data->p.get_mpz_t(), static_cast<unsigned long>(data->k));
    return q;
}

FFElement FiniteField::zero() const
{
    return FFElement(*this, std::vector<Integer>(data->k, Integer(0)));
}

FFElement FiniteField::one() const
{
    return element(Integer(1));
}

FFElement FiniteField::element(Integer const & v) const
{
    std::vector<Integer> c(data->k, Integer(0));
    c[0] = v;
    return FFElement(*this, std::move(c));
}

FFElement FiniteField::element(std::vector<Integer> coords) const
{
    return FFElement(*this, std::move(coords));
}

FFElement FiniteField::generator() const
{
    if (data->k == 1)
        return zero();
    std::vector<Integer> c(data->k, Integer(0));
    c[1] = 1;
    return FFElement(*this, std::move(c));
}

FFElement FiniteField::element_at(Integer index) const
{
    std::vector<Integer> c(data->k);
    for (int i = 0; i < data->k; ++i) {
        c[i] = mod_floor(index, data->p);
        index /= data->p;
    }
    return FFElement(*this, std::move(c));
}

bool FiniteField::operator==(FiniteField const & o) const
{
    if (data == o.data)
        return true;
    if (!data || !o.data)
        return false;
    return data->p == o.data->p && data->modulus == o.data->modulus;
}

std::ostream & operator<<(std::ostream & os, FiniteField const & F)
{
    os << "GF(" << F.characteristic();
    if (F.degree() > 1)
        os << "^" << F.degree();
    return os << ")";
}

/* }}} */

/* {{{ FFElement */

FFElement::FFElement(FiniteField field, std::vector<Integer> coords)
    : F(std::move(field))
    , c(std::move(coords))
{
    if (!F.valid())
        throw DomainError("element of an uninitialised field");
    if (static_cast<int>(c.size()) != F.degree())
        throw DomainError("coordinate count does not match the field degree");
    for (auto & x : c)
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), F.characteristic().get_mpz_t());
}

void FFElement::check_same_field(FFElement const & o) const
{
    if (!(F == o.F))
        throw DomainError("operands live in different finite fields");
}

bool FFElement::is_zero() const
{
    return std::all_of(c.begin(), c.end(), [](Integer const & x) { return x == 0; });
}

bool FFElement::is_one() const
{
    if (c.empty() || c[0] != 1)
        return false;
    return std::all_of(c.begin() + 1, c.end(), [](Integer const & x) { return x == 0; });
}

FFElement FFElement::operator-() const
{
    FFElement r = *this;
    auto const & p = F.characteristic();
    for (auto & x : r.c)
        if (x != 0)
            x = p - x;
    return r;
}

FFElement & FFElement::operator+=(FFElement const & o)
{
    check_same_field(o);
    auto const & p = F.characteristic();
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] += o.c[i];
        if (c[i] >= p)
            c[i] -= p;
    }
    return *this;
}

FFElement & FFElement::operator-=(FFElement const & o)
{
    check_same_field(o);
    auto const & p = F.characteristic();
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] -= o.c[i];
        if (c[i] < 0)
            c[i] += p;
    }
    return *this;
}

FFElement & FFElement::operator*=(FFElement const & o)
{
    check_same_field(o);
    auto const & p = F.characteristic();
    int const k = F.degree();
    if (k == 1) {
        c[0] *= o.c[0];
        mpz_mod(c[0].get_mpz_t(), c[0].get_mpz_t(), p.get_mpz_t());
        return *this;
    }
    std::vector<Integer> prod(2 * k - 1, Integer(0));
    for (int i = 0; i < k; ++i) {
        if (c[i] == 0)
            continue;
        for (int j = 0; j < k; ++j)
            prod[i + j] += c[i] * o.c[j];
    }
    auto const & mod = F.modulus();
    for (int i = 2 * k - 2; i >= k; --i) {
        if (prod[i] == 0)
            continue;
        mpz_mod(prod[i].get_mpz_t(), prod[i].get_mpz_t(), p.get_mpz_t());
        for (int j = 0; j < k; ++j)
            prod[i - k + j] -= prod[i] * mod[j];
    }
    for (int i = 0; i < k; ++i)
        mpz_mod(c[i].get_mpz_t(), prod[i].get_mpz_t(), p.get_mpz_t());
    return *this;
}

FFElement FFElement::pow(Integer e) const
{
    if (e < 0)
        return inverse().pow(-e);
    FFElement result = F.one();
    FFElement base = *this;
    size_t const bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result *= result;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result *= base;
    }
    return result;
}

FFElement FFElement::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero in a finite field");
    return pow(F.order() - 2);
}

FFElement FFElement::pth_root() const
{
    /* x^(p^(k-1)) inverts the Frobenius on F_{p^k} */
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), F.characteristic().get_mpz_t(),
               static_cast<unsigned long>(F.degree() - 1));
    return pow(e);
}

bool FFElement::operator==(FFElement const & o) const
{
    return F == o.F && c == o.c;
}

std::strong_ordering FFElement::operator<=>(FFElement const & o) const
{
    check_same_field(o);
    for (size_t i = 0; i < c.size(); ++i) {
        int r = cmp(c[i], o.c[i]);
        if (r != 0)
            return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream & operator<<(std::ostream & os, FFElement const & x)
{
    if (x.c.size() == 1)
        return os << x.c[0];
    os << "(";
    for (size_t i = 0; i < x.c.size(); ++i)
        os << (i ? "," : "") << x.c[i];
    return os << ")";
}

/* }}} */

std::optional<FFElement> sqrt_ff(FFElement const & a)
{
    auto const & F = a.field();
    if (F.characteristic() == 2)
        throw UnsupportedError("square roots in characteristic 2 are not supported");
    if (a.is_zero())
        return a;
    Integer const q = F.order();
    Integer const half = (q - 1) / 2;
    if (!a.pow(half).is_one())
        return std::nullopt;

    /* Tonelli-Shanks with q - 1 = 2^s t, t odd */
    Integer t = q - 1;
    unsigned long s = 0;
    while (mpz_even_p(t.get_mpz_t())) {
        t /= 2;
        ++s;
    }
    FFElement z;
    for (Integer i = 1;; ++i) {
        FFElement cand = F.element_at(i);
        if (!cand.pow(half).is_one()) {
            z = cand;
            break;
        }
    }
    FFElement c = z.pow(t);
    FFElement x = a.pow((t + 1) / 2);
    FFElement b = a.pow(t);
    unsigned long m = s;
    while (!b.is_one()) {
        unsigned long i = 0;
        FFElement bb = b;
        while (!bb.is_one()) {
            bb *= bb;
            ++i;
        }
        FFElement g = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j)
            g *= g;
        x *= g;
        c = g * g;
        b *= c;
        m = i;
    }
    FFElement y = -x;
    return (y < x) ? y : x;
}

} // namespace selorder::ff
