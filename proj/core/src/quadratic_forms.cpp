#include <cstdlib>
#include <sstream>

#include "selorder/error.hpp"
#include "selorder/quadfield.hpp"

namespace selorder::qf {

namespace {

bool is_squarefree(Integer n)
{
    n = abs(n);
    if (n == 0)
        return false;
    for (Integer q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0)
                return false;
        }
    }
    return true;
}

Integer floor_div(Integer const & a, Integer const & b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/* move b into (-a, a] */
void normalize(BinQuadForm & f)
{
    Integer const k = floor_div(f.a - f.b, 2 * f.a);
    if (k == 0)
        return;
    f.c += k * f.b + k * k * f.a;
    f.b += 2 * k * f.a;
}

} // namespace

QuadField::QuadField(Integer m)
    : m_(std::move(m))
{
    if (m_ >= 0)
        throw DomainError("imaginary quadratic field needs m < 0, got " + m_.get_str());
    if (!is_squarefree(m_))
        throw DomainError("m must be squarefree, got " + m_.get_str());
    d_ = ff::mod_floor(m_, 4) == 1 ? m_ : 4 * m_;
}

bool is_fundamental_discriminant(Integer const & d)
{
    if (d == 0 || d == 1)
        return false;
    Integer const r = ff::mod_floor(d, 4);
    if (r == 1)
        return is_squarefree(d);
    if (r != 0)
        return false;
    Integer const m = d / 4;
    Integer const rm = ff::mod_floor(m, 4);
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

bool BinQuadForm::is_reduced() const
{
    if (a <= 0 || abs(b) > a || a > c)
        return false;
    if ((abs(b) == a || a == c) && b < 0)
        return false;
    return true;
}

std::string BinQuadForm::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::strong_ordering BinQuadForm::operator<=>(BinQuadForm const & o) const
{
    if (int r = cmp(a, o.a))
        return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int r = cmp(abs(b), abs(o.b)))
        return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int r = cmp(o.b, b))
        return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int r = cmp(c, o.c))
        return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream & operator<<(std::ostream & os, BinQuadForm const & f)
{
    return os << "(" << f.a << "," << f.b << "," << f.c << ")";
}

BinQuadForm principal_form(Integer const & d)
{
    Integer const b = ff::mod_floor(d, 4) == 1 ? 1 : 0;
    return BinQuadForm{1, b, (b * b - d) / 4};
}

BinQuadForm reduce_form(BinQuadForm const & f, Integer const & d)
{
    if (f.discriminant() != d)
        throw DomainError("form " + f.to_string() + " does not have discriminant " + d.get_str());
    return reduce_form(f);
}

BinQuadForm reduce_form(BinQuadForm const & f)
{
    if (f.a <= 0 || f.discriminant() >= 0)
        throw DomainError("form " + f.to_string() + " is not positive definite");
    BinQuadForm g = f;
    for (;;) {
        normalize(g);
        if (g.a > g.c) {
            std::swap(g.a, g.c);
            g.b = -g.b;
            continue;
        }
        if (g.a == g.c && g.b < 0)
            g.b = -g.b;
        return g;
    }
}

BinQuadForm compose(BinQuadForm const & f1, BinQuadForm const & f2)
{
    Integer const D = f1.discriminant();
    if (D != f2.discriminant())
        throw DomainError("composition of forms with different discriminants");
    if (f1.a <= 0 || f2.a <= 0 || D >= 0)
        throw DomainError("composition needs positive definite forms");

    /* Dirichlet/Shanks composition as in Cohen, GTM 138, 5.4.7 */
    BinQuadForm const & g1 = f1.a > f2.a ? f2 : f1;
    BinQuadForm const & g2 = f1.a > f2.a ? f1 : f2;
    Integer const s = (g1.b + g2.b) / 2;
    Integer const n = g2.b - s;

    Integer y1, d;
    if (g2.a % g1.a == 0) {
        y1 = 0;
        d = g1.a;
    } else {
        Integer u, v;
        mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g2.a.get_mpz_t(), g1.a.get_mpz_t());
        y1 = u;
    }

    Integer x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        Integer u, v;
        mpz_gcdext(d1.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
        x2 = u;
        y2 = -v;
    }

    Integer const v1 = g1.a / d1;
    Integer const v2 = g2.a / d1;
    Integer const r = ff::mod_floor(y1 * y2 * n - x2 * g2.c, v1);
    BinQuadForm h;
    h.b = g2.b + 2 * v2 * r;
    h.a = v1 * v2;
    h.c = (g2.c * d1 + r * (g2.b + v2 * r)) / v1;
    if (h.discriminant() != D)
        throw InternalError("composition produced the wrong discriminant");
    return reduce_form(h);
}

BinQuadForm inverse_form(BinQuadForm const & f)
{
    return reduce_form(BinQuadForm{f.a, -f.b, f.c});
}

BinQuadForm power_form(BinQuadForm const & f, std::int64_t k)
{
    BinQuadForm base = k < 0 ? inverse_form(f) : reduce_form(f);
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    BinQuadForm result = principal_form(f.discriminant());
    while (e) {
        if (e & 1)
            result = compose(result, base);
        base = compose(base, base);
        e >>= 1;
    }
    return result;
}

} // namespace selorder::qf
