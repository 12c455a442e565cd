#include <algorithm>
#include <utility>

#include "selorder/error.hpp"
#include "selorder/ffarith.hpp"

namespace selorder::ff {

namespace {

std::vector<int> prime_divisors(int n)
{
    std::vector<int> r;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            r.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    }
    if (n > 1)
        r.push_back(n);
    return r;
}

/* all exponents of c are multiples of p */
FFPolynomial pth_root(FFPolynomial const & c, unsigned long p)
{
    auto const & F = c.field();
    std::vector<FFElement> r(static_cast<size_t>(c.degree()) / p + 1, F.zero());
    for (int i = 0; i <= c.degree(); i += static_cast<int>(p))
        r[static_cast<size_t>(i) / p] = c.coefficients()[static_cast<size_t>(i)].pth_root();
    return FFPolynomial(F, std::move(r));
}

std::vector<Factor> square_free(FFPolynomial const & f)
{
    std::vector<Factor> out;
    FFPolynomial c = gcd(f, f.derivative());
    FFPolynomial w = f / c;
    int i = 1;
    while (!w.is_one()) {
        FFPolynomial y = gcd(w, c);
        FFPolynomial fac = w / y;
        if (!fac.is_one())
            out.push_back({fac.monic(), i});
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) {
        unsigned long const p = f.field().characteristic().get_ui();
        for (auto & [g, m] : square_free(pth_root(c.monic(), p)))
            out.push_back({std::move(g), m * static_cast<int>(p)});
    }
    return out;
}

std::vector<std::pair<FFPolynomial, int>> distinct_degree(FFPolynomial f)
{
    std::vector<std::pair<FFPolynomial, int>> out;
    Integer const q = f.field().order();
    FFPolynomial const x = FFPolynomial::x(f.field());
    FFPolynomial h = x;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = powmod(h, q, f);
        FFPolynomial g = gcd(f, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) {
        int const d = f.degree();
        out.emplace_back(f.monic(), d);
    }
    return out;
}

FFPolynomial random_poly(FiniteField const & F, int below_degree, gmp_randclass & rng)
{
    std::vector<FFElement> c;
    c.reserve(static_cast<size_t>(below_degree));
    Integer const & p = F.characteristic();
    for (int i = 0; i < below_degree; ++i) {
        std::vector<Integer> coords(static_cast<size_t>(F.degree()));
        for (auto & x : coords)
            x = rng.get_z_range(p);
        c.push_back(F.element(std::move(coords)));
    }
    return FFPolynomial(F, std::move(c));
}

void equal_degree(FFPolynomial const & f, int d, gmp_randclass & rng, std::vector<FFPolynomial> & out)
{
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    auto const & F = f.field();
    Integer const q = F.order();
    bool const even = F.characteristic() == 2;
    Integer qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
    for (;;) {
        FFPolynomial a = random_poly(F, f.degree(), rng);
        if (a.degree() < 1)
            continue;
        FFPolynomial g = gcd(a, f);
        if (g.degree() <= 0) {
            FFPolynomial b(F);
            if (even) {
                /* trace from F_{q^d} down to F_2 */
                unsigned long const steps = static_cast<unsigned long>(F.degree()) * static_cast<unsigned long>(d);
                FFPolynomial t = a % f;
                b = t;
                for (unsigned long i = 1; i < steps; ++i) {
                    t = (t * t) % f;
                    b += t;
                }
            } else {
                b = powmod(a, (qd - 1) / 2, f) - FFPolynomial::constant(F.one());
            }
            g = gcd(b, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

void check_nonzero(FFPolynomial const & f)
{
    if (f.is_zero())
        throw DomainError("cannot factor the zero polynomial");
}

} // namespace

std::vector<Factor> factor_ff(FFPolynomial const & f, std::uint64_t seed)
{
    check_nonzero(f);
    std::vector<Factor> out;
    if (f.degree() == 0)
        return out;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(Integer(std::to_string(seed)));
    for (auto const & [sq, mult] : square_free(f.monic())) {
        for (auto const & [g, d] : distinct_degree(sq)) {
            std::vector<FFPolynomial> irr;
            equal_degree(g, d, rng, irr);
            for (auto & h : irr)
                out.push_back({h.monic(), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](Factor const & a, Factor const & b) {
        auto r = canonical_compare(a.poly, b.poly);
        if (r != 0)
            return r < 0;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

bool is_irreducible_ff(FFPolynomial const & f)
{
    check_nonzero(f);
    if (f.degree() < 1)
        throw DomainError("irreducibility of a constant polynomial is undefined");
    int const n = f.degree();
    if (n == 1)
        return true;
    FFPolynomial const g = f.monic();
    Integer const q = g.field().order();
    FFPolynomial const x = FFPolynomial::x(g.field());

    /* Rabin: x^{q^n} = x mod g and gcd(x^{q^{n/r}} - x, g) = 1 for primes r | n */
    std::vector<FFPolynomial> frob(static_cast<size_t>(n) + 1, FFPolynomial(g.field()));
    frob[0] = x;
    for (int i = 1; i <= n; ++i)
        frob[static_cast<size_t>(i)] = powmod(frob[static_cast<size_t>(i - 1)], q, g);
    if (!(frob[static_cast<size_t>(n)] == x % g))
        return false;
    for (int r : prime_divisors(n)) {
        if (!gcd(g, frob[static_cast<size_t>(n / r)] - x).is_one())
            return false;
    }
    return true;
}

std::vector<Integer> least_irreducible(Integer const & p, int k)
{
    if (k < 1)
        throw DomainError("irreducible polynomial degree must be positive");
    FiniteField const F(p);
    std::vector<Integer> c(static_cast<size_t>(k) + 1, Integer(0));
    c[static_cast<size_t>(k)] = 1;
    if (k == 1)
        return c;
    /* odometer over (c_{k-1}, ..., c_0), c_0 running fastest */
    for (;;) {
        if (c[0] != 0 && is_irreducible_ff(FFPolynomial::from_integers(F, c)))
            return c;
        int i = 0;
        for (; i < k; ++i) {
            if (++c[static_cast<size_t>(i)] < p)
                break;
            c[static_cast<size_t>(i)] = 0;
        }
        if (i == k)
            throw InternalError("no irreducible polynomial found");
    }
}

FFPolynomial expand(std::vector<Factor> const & factors, FiniteField const & field)
{
    FFPolynomial r = FFPolynomial::constant(field.one());
    for (auto const & [g, m] : factors)
        for (int i = 0; i < m; ++i)
            r *= g;
    return r;
}

} // namespace selorder::ff
