#include <algorithm>

#include "selorder/error.hpp"
#include "selorder/quadfield.hpp"

namespace selorder::qf {

ClassGroup::ClassGroup(QuadField const & K)
    : d_(K.discriminant())
{
    if (!is_fundamental_discriminant(d_) || d_ >= 0)
        throw DomainError("class group needs a negative fundamental discriminant, got " + d_.get_str());

    Integer const absd = abs(d_);
    for (Integer a = 1; 3 * a * a <= absd; ++a) {
        for (Integer b = -a + 1; b <= a; ++b) {
            Integer const num = b * b - d_;
            if (num % (4 * a) != 0)
                continue;
            BinQuadForm f{a, b, num / (4 * a)};
            Integer g;
            mpz_gcd(g.get_mpz_t(), f.a.get_mpz_t(), f.b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.c.get_mpz_t());
            if (g == 1 && f.is_reduced())
                forms_.push_back(f);
        }
    }
    std::sort(forms_.begin(), forms_.end());
    if (forms_.empty() || !(forms_.front() == principal_form(d_)))
        throw InternalError("principal form missing from the class group enumeration");
    for (Elem i = 0; i < forms_.size(); ++i)
        index_[forms_[i]] = i;

    std::size_t const h = forms_.size();
    std::vector<std::vector<Elem>> table(h, std::vector<Elem>(h));
    for (Elem i = 0; i < h; ++i)
        for (Elem j = i; j < h; ++j)
            table[i][j] = table[j][i] = index_.at(compose(forms_[i], forms_[j]));
    group_ = FiniteAbelianGroup(std::move(table), 0);
    gens_ = *group_.cyclic_decomposition();
}

ClassGroup::Elem ClassGroup::index_of(BinQuadForm const & f) const
{
    auto it = index_.find(reduce_form(f, d_));
    if (it == index_.end())
        throw DomainError("form " + f.to_string() + " is not primitive of discriminant " + d_.get_str());
    return it->second;
}

ClassGroup class_group(QuadField const & K)
{
    return ClassGroup(K);
}

std::string to_string(PrimeKind k)
{
    switch (k) {
    case PrimeKind::split:
        return "split";
    case PrimeKind::inert:
        return "inert";
    case PrimeKind::ramified:
        return "ramified";
    }
    return "?";
}

std::string PrimeOfK::name() const
{
    if (kind == PrimeKind::split)
        return "P(" + p.get_str() + "," + std::to_string(label) + ")";
    return "P(" + p.get_str() + ")";
}

std::strong_ordering PrimeOfK::operator<=>(PrimeOfK const & o) const
{
    if (int r = cmp(p, o.p))
        return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return label <=> o.label;
}

std::vector<PrimeOfK> prime_of_K(QuadField const & K, Integer const & p)
{
    if (!ff::is_prime(p))
        throw DomainError(p.get_str() + " is not prime");
    Integer const & d = K.discriminant();
    int const kr = ff::kronecker_symbol(d, p);
    auto make = [&](PrimeKind kind, int label, Integer const & b) {
        PrimeOfK P;
        P.p = p;
        P.kind = kind;
        P.label = label;
        P.b = b;
        if (kind == PrimeKind::inert)
            P.form = principal_form(d);
        else
            P.form = reduce_form(BinQuadForm{p, b, (b * b - d) / (4 * p)}, d);
        return P;
    };

    if (kr == -1)
        return {make(PrimeKind::inert, 0, 0)};

    if (kr == 0) {
        for (Integer b = 0; b < 2 * p; ++b) {
            if (ff::mod_floor(b - d, 2) == 0 && ff::mod_floor(b * b - d, 4 * p) == 0)
                return {make(PrimeKind::ramified, 0, b)};
        }
        throw InternalError("no square root of d mod 4p for a ramified prime");
    }

    Integer b1;
    if (p == 2) {
        b1 = 1;
    } else {
        ff::FiniteField const Fp(p);
        auto r = ff::sqrt_ff(Fp.element(d));
        if (!r)
            throw InternalError("d is not a square modulo a split prime");
        b1 = r->coords()[0];
        if (ff::mod_floor(b1 - d, 2) != 0)
            b1 += p;
    }
    return {make(PrimeKind::split, 1, b1), make(PrimeKind::split, 2, -b1)};
}

} // namespace selorder::qf
