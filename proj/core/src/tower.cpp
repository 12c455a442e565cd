#include <algorithm>

#include "selorder/error.hpp"
#include "selorder/quadfield.hpp"

namespace selorder::qf {

namespace {

/* fraction-free Gaussian elimination */
Integer bareiss_determinant(std::vector<std::vector<Integer>> M)
{
    size_t const n = M.size();
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && M[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]);
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

Integer resultant(std::vector<Integer> const & f, std::vector<Integer> const & g)
{
    /* Sylvester matrix; f, g low to high */
    size_t const m = f.size() - 1;
    size_t const n = g.size() - 1;
    size_t const N = m + n;
    std::vector<std::vector<Integer>> S(N, std::vector<Integer>(N, Integer(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j)
            S[i][i + j] = f[m - j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j)
            S[n + i][i + j] = g[n - j];
    return bareiss_determinant(std::move(S));
}

KElement k_mul(KElement const & x, KElement const & y, Integer const & m)
{
    return {x.u * y.u + m * x.v * y.v, x.u * y.v + x.v * y.u};
}

Integer k_norm(KElement const & x, Integer const & m)
{
    return x.u * x.u - m * x.v * x.v;
}

Integer level1_discriminant_norm(TowerSpec const & t, Integer const & m)
{
    if (t.level1_degree() == 1)
        return 1;
    /* x^2 + B x + C:  B^2 - 4C */
    KElement const & C = t.level1[0];
    KElement const & B = t.level1[1];
    KElement disc = k_mul(B, B, m);
    disc.u -= 4 * C.u;
    disc.v -= 4 * C.v;
    return k_norm(disc, m);
}

void require_square_free(std::vector<ff::Factor> const & fac, PrimeOfK const & P, char const * level)
{
    for (auto const & x : fac)
        if (x.multiplicity > 1)
            throw RamifiedInLError("ramified-in-L: " + std::string(level) + " polynomial is not square-free modulo "
                                   + P.name());
}

} // namespace

Integer polynomial_discriminant(std::vector<Integer> const & f)
{
    if (f.size() < 2)
        throw DomainError("discriminant of a constant polynomial");
    size_t const n = f.size() - 1;
    if (n == 1)
        return 1;
    std::vector<Integer> df;
    for (size_t i = 1; i <= n; ++i)
        df.push_back(f[i] * static_cast<unsigned long>(i));
    Integer r = resultant(f, df);
    if ((n * (n - 1) / 2) % 2 == 1)
        r = -r;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.back().get_mpz_t());
    return r;
}

void TowerSpec::validate() const
{
    int const d1 = level1_degree();
    if (d1 < 1 || d1 > 2)
        throw DomainError("level-1 polynomial must have degree 1 or 2");
    if (!(level1.back() == KElement{1, 0}))
        throw DomainError("level-1 polynomial must be monic");
    if (!level2.empty()) {
        if (level2.size() < 2)
            throw DomainError("level-2 polynomial must have degree >= 1");
        if (level2.back() != 1)
            throw DomainError("level-2 polynomial must be monic");
        if (polynomial_discriminant(level2) == 0)
            throw DomainError("level-2 polynomial is inseparable");
    }
}

BadPrimes::BadPrimes(QuadField const & K, TowerSpec const & tower)
{
    tower.validate();
    Integer const n1 = level1_discriminant_norm(tower, K.m());
    if (n1 == 0)
        throw DomainError("level-1 polynomial is inseparable");
    Integer n2 = 1;
    if (!tower.level2.empty()) {
        n2 = polynomial_discriminant(tower.level2);
        if (n2 == 0)
            throw DomainError("level-2 polynomial is inseparable");
    }
    product_ = abs(2 * K.discriminant() * n1 * n2);
}

bool BadPrimes::is_bad(Integer const & p) const
{
    return product_ % p == 0;
}

ff::FFElement residue_sqrt_m(QuadField const & K, PrimeOfK const & P)
{
    if (P.kind == PrimeKind::ramified)
        throw BadPrimeError("prime " + P.name() + " ramifies in K");
    if (P.p == 2)
        throw BadPrimeError("primes above 2 are excluded from residue computations");
    if (P.kind == PrimeKind::split) {
        ff::FiniteField const F(P.p);
        /* sqrt d = b on the residue field of (p, (-b + sqrt d)/2) */
        Integer s = ff::mod_floor(P.b, P.p);
        if (K.discriminant() != K.m())
            s = ff::mod_floor(s * ((P.p + 1) / 2), P.p);
        return F.element(s);
    }
    auto const F = ff::FiniteField::extension(P.p, 2);
    auto r = ff::sqrt_ff(F.element(K.m()));
    if (!r)
        throw InternalError("m has no square root in F_{p^2}");
    return *r;
}

building::SplittingType splitting_in_L(QuadField const & K, TowerSpec const & tower, PrimeOfK const & P,
                                       std::uint64_t seed)
{
    tower.validate();
    ff::FFElement const s = residue_sqrt_m(K, P);
    ff::FiniteField const & F = s.field();

    std::vector<ff::FFElement> c1;
    for (auto const & [u, v] : tower.level1)
        c1.push_back(F.element(u) + F.element(v) * s);
    auto const f1 = ff::factor_ff(ff::FFPolynomial(F, std::move(c1)), seed);
    require_square_free(f1, P, "level-1");

    std::vector<building::LocalFactor> out;
    for (auto const & [g, mult] : f1) {
        int const k1 = g.degree();
        if (tower.level2.empty()) {
            out.push_back({1, k1});
            continue;
        }
        auto const E = ff::FiniteField::extension(P.p, k1 * P.residue_degree());
        auto const f2 = ff::factor_ff(ff::FFPolynomial::from_integers(E, tower.level2), seed);
        require_square_free(f2, P, "level-2");
        for (auto const & h : f2)
            out.push_back({1, k1 * h.poly.degree()});
    }
    return building::SplittingType(tower.degree(), std::move(out)).sorted();
}

} // namespace selorder::qf
