#include <algorithm>
#include <numeric>
#include <set>

#include "selorder/error.hpp"
#include "selorder/selectivity.hpp"

namespace selorder::sel {

AlgebraData::AlgebraData(int n, std::vector<RamifiedPrime> ramification)
    : n_(n)
    , ram_(std::move(ramification))
{
    if (n < 3)
        throw DomainError("algebra degree must be at least 3, got " + std::to_string(n));
    std::set<qf::PrimeOfK> seen;
    for (auto const & r : ram_) {
        if (r.local_index <= 1 || n % r.local_index != 0)
            throw DomainError("local index " + std::to_string(r.local_index) + " at " + r.prime.name() +
                              " must be > 1 and divide " + std::to_string(n));
        if (!seen.insert(r.prime).second)
            throw DomainError("prime " + r.prime.name() + " listed twice");
    }
    std::sort(ram_.begin(), ram_.end(), [](auto const & x, auto const & y) { return x.prime < y.prime; });

    /* invariants k_v/m_v summing to 0 exist iff for every prime l the
     * largest power of l among the m_v occurs at least twice */
    for (int l = 2; l <= n; ++l) {
        bool is_prime = true;
        for (int q = 2; q * q <= l; ++q)
            if (l % q == 0)
                is_prime = false;
        if (!is_prime)
            continue;
        int top = 0, count = 0;
        for (auto const & r : ram_) {
            int e = 0;
            for (int m = r.local_index; m % l == 0; m /= l)
                ++e;
            if (e > top) {
                top = e;
                count = 1;
            } else if (e == top && e > 0) {
                ++count;
            }
        }
        if (top > 0 && count < 2)
            throw DomainError("no central simple algebra has these local indices: the " + std::to_string(l) +
                              "-part of the largest one occurs only once");
    }
}

AlgebraData AlgebraData::matrix_algebra(int n)
{
    return AlgebraData(n, {});
}

std::optional<int> AlgebraData::local_index(qf::PrimeOfK const & P) const
{
    for (auto const & r : ram_)
        if (r.prime == P)
            return r.local_index;
    return std::nullopt;
}

bool AlgebraData::has_division_prime() const
{
    return std::any_of(ram_.begin(), ram_.end(), [this](auto const & r) { return r.local_index == n_; });
}

bool AlgebraData::has_partial_ramification() const
{
    return std::any_of(ram_.begin(), ram_.end(), [this](auto const & r) { return r.local_index < n_; });
}

ExtensionData::ExtensionData(qf::QuadField K, int degree, std::optional<qf::TowerSpec> tower,
                             std::map<qf::PrimeOfK, building::SplittingType> overrides, std::uint64_t seed)
    : K_(std::move(K))
    , n_(degree)
    , tower_(std::move(tower))
    , overrides_(std::move(overrides))
    , seed_(seed)
{
    if (tower_) {
        tower_->validate();
        if (tower_->degree() != n_)
            throw ConfigError("tower has degree " + std::to_string(tower_->degree()) + ", expected " +
                              std::to_string(n_));
        bad_.emplace(K_, *tower_);
    }
    for (auto const & [P, s] : overrides_)
        if (s.n() != n_)
            throw ConfigError("splitting override at " + P.name() + " has degree " + std::to_string(s.n()));
}

bool ExtensionData::is_bad(Integer const & p) const
{
    return bad_ && bad_->is_bad(p);
}

std::optional<building::SplittingType> ExtensionData::for_prime(qf::PrimeOfK const & P) const
{
    if (auto it = overrides_.find(P); it != overrides_.end())
        return it->second;
    if (!tower_)
        return std::nullopt;
    try {
        return qf::splitting_in_L(K_, *tower_, P, seed_);
    } catch (BadPrimeError const &) {
        return std::nullopt;
    } catch (RamifiedInLError const &) {
        return std::nullopt;
    }
}

std::optional<building::SplittingType> ExtensionData::for_scan(qf::PrimeOfK const & P) const
{
    if (auto it = overrides_.find(P); it != overrides_.end())
        return it->second;
    if (!tower_ || is_bad(P.p))
        return std::nullopt;
    return qf::splitting_in_L(K_, *tower_, P, seed_);
}

AbhnReport check_abhn(AlgebraData const & B, std::map<qf::PrimeOfK, building::SplittingType> const & splitting)
{
    AbhnReport rep;
    for (auto const & r : B.ramification()) {
        auto it = splitting.find(r.prime);
        if (it == splitting.end())
            throw ConfigError("no splitting data for " + r.prime.name() + ", which ramifies in the algebra");
        bool ok = true;
        for (auto const & lf : it->second.factors())
            if ((lf.e * lf.f) % r.local_index != 0)
                ok = false;
        rep.entries.push_back({r.prime, r.local_index, it->second, ok});
        rep.ok = rep.ok && ok;
    }
    return rep;
}

namespace {

GenusGroup make_genus(qf::ClassGroup const & C, std::vector<FiniteAbelianGroup::Elem> const & killed_gens,
                      std::vector<qf::PrimeOfK> ramified, int n)
{
    auto const & CG = C.group();
    GenusGroup G;
    G.classes = C;
    G.killed = CG.subgroup_generated(killed_gens);
    auto q = CG.quotient(G.killed);
    G.group = std::move(q.group);
    G.projection = std::move(q.projection);
    G.representative = std::move(q.representative);
    G.generators = *G.group.cyclic_decomposition();
    G.ramified = std::move(ramified);
    G.n = n;
    return G;
}

} // namespace

GenusGroup genus_group(AlgebraData const & B, qf::ClassGroup const & C)
{
    std::vector<FiniteAbelianGroup::Elem> gens;
    auto const & CG = C.group();
    for (FiniteAbelianGroup::Elem x = 0; x < CG.size(); ++x)
        gens.push_back(CG.power(x, B.degree()));
    std::vector<qf::PrimeOfK> ram;
    for (auto const & r : B.ramification()) {
        gens.push_back(CG.power(C.index_of(r.prime.form), B.local_capacity(r)));
        ram.push_back(r.prime);
    }
    return make_genus(C, gens, std::move(ram), B.degree());
}

GenusGroup full_class_group(qf::ClassGroup const & C, int n)
{
    return make_genus(C, {}, {}, n);
}

Elem frobenius(qf::PrimeOfK const & P, GenusGroup const & G)
{
    if (std::find(G.ramified.begin(), G.ramified.end(), P) != G.ramified.end())
        throw DomainError("Frobenius undefined at " + P.name() + ", which ramifies in the algebra");
    return G.projection.at(G.classes.index_of(P.form));
}

} // namespace selorder::sel
