#include <algorithm>

#include "selorder/error.hpp"
#include "selorder/selectivity.hpp"

namespace selorder::sel {

std::string to_string(LocalVertex::Role r)
{
    switch (r) {
    case LocalVertex::Role::lambda:
        return "lambda";
    case LocalVertex::Role::mu:
        return "mu";
    case LocalVertex::Role::nu:
        return "nu";
    }
    return "?";
}

namespace {

void check_generators(GenusGroup const & G, std::vector<ParamGenerator> const & gens, char const * what)
{
    for (auto const & g : gens)
        if (frobenius(g.witness.prime, G) != g.element || g.witness.frobenius != g.element)
            throw InternalError(std::string(what) + " witness " + g.witness.prime.name() +
                                " does not have the recorded Frobenius");
}

} // namespace

std::vector<GenusElement> parametrize_genus(GenusGroup const & G, SubgroupData const & S)
{
    check_generators(G, S.rho, "rho");
    check_generators(G, S.sigma, "sigma");
    check_generators(G, S.tau, "tau");
    for (auto const & g : S.sigma)
        if (!g.witness.splitting.has_degree_one_factor())
            throw InternalError("sigma witness " + g.witness.prime.name() + " has no degree-one prime above it");
    for (auto const & g : S.tau)
        if (!g.witness.splitting.splits_completely())
            throw InternalError("tau witness " + g.witness.prime.name() + " does not split completely");

    int const n = G.n;
    std::vector<std::size_t> radix;
    std::vector<ParamGenerator const *> gen;
    for (auto const * v : {&S.rho, &S.sigma, &S.tau})
        for (auto const & g : *v) {
            radix.push_back(g.order);
            gen.push_back(&g);
        }
    std::size_t const nr = S.rho.size(), ns = S.sigma.size();

    std::vector<GenusElement> out;
    std::vector<std::size_t> digit(radix.size(), 0);
    bool done = false;
    while (!done) {
        GenusElement E;
        E.element = G.group.identity();
        for (std::size_t i = 0; i < digit.size(); ++i) {
            int const d = static_cast<int>(digit[i]);
            E.element = G.group.op(E.element, G.group.power(gen[i]->element, d));
            LocalVertex v;
            v.prime = gen[i]->witness.prime;
            if (i < nr) {
                v.role = LocalVertex::Role::lambda;
                v.index = i;
                v.vertex = building::block_class(n, d, 1);
                E.a.push_back(d);
            } else if (i < nr + ns) {
                v.role = LocalVertex::Role::mu;
                v.index = i - nr;
                v.vertex = building::block_class(n, 1, d);
                E.b.push_back(d);
            } else {
                v.role = LocalVertex::Role::nu;
                v.index = i - nr - ns;
                v.vertex = building::block_class(n, d, 1);
                E.c.push_back(d);
            }
            E.local.push_back(std::move(v));
        }
        out.push_back(std::move(E));

        std::size_t k = digit.size();
        for (;;) {
            if (k == 0) {
                done = true;
                break;
            }
            --k;
            if (++digit[k] < radix[k])
                break;
            digit[k] = 0;
        }
    }
    if (out.size() != G.order())
        throw InternalError("parametrization produced " + std::to_string(out.size()) + " orders for a group of order " +
                            std::to_string(G.order()));
    return out;
}

DistanceIdele distance_idele(GenusElement const & D1, GenusElement const & D2, GenusGroup const & G)
{
    if (D1.local.size() != D2.local.size())
        throw DomainError("orders are described at different sets of primes");
    DistanceIdele out;
    out.image = G.group.identity();
    for (std::size_t i = 0; i < D1.local.size(); ++i) {
        auto const & v1 = D1.local[i];
        auto const & v2 = D2.local[i];
        if (!(v1.prime == v2.prime) || v1.role != v2.role || v1.index != v2.index)
            throw DomainError("orders are described at different sets of primes");
        if (v1.vertex == v2.vertex)
            continue;
        int const td = building::type_distance(v1.vertex, v2.vertex);
        out.support.emplace_back(v1.prime, td);
        out.image = G.group.op(out.image, G.group.power(frobenius(v1.prime, G), td));
    }
    return out;
}

bool admits_embedding(GenusElement const & E, SubgroupData const & S, GenusGroup const & G)
{
    GenusElement base = E;
    for (auto & v : base.local)
        v.vertex = building::block_class(G.n, 0, 0);
    auto const delta = distance_idele(base, E, G);
    return std::binary_search(S.H.begin(), S.H.end(), delta.image);
}

} // namespace selorder::sel
