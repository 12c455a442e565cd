#include <algorithm>
#include <set>

#include "selorder/error.hpp"
#include "selorder/selectivity.hpp"

namespace selorder::sel {

std::string to_string(Status s)
{
    switch (s) {
    case Status::ok:
        return "ok";
    case Status::abhn_fail:
        return "abhn_fail";
    case Status::inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::size_t Analysis::admitting_count() const
{
    std::size_t k = 0;
    for (bool b : admits)
        k += b;
    return k;
}

namespace {

void collect_prime_classes(qf::QuadField const & K, Analysis & A)
{
    std::set<qf::PrimeOfK> primes;
    Integer const absd = abs(K.discriminant());
    for (Integer p = 2; p <= absd; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t()))
        if (absd % p == 0)
            for (auto const & P : qf::prime_of_K(K, p))
                primes.insert(P);
    for (auto const & P : A.genus.ramified)
        primes.insert(P);
    if (A.scan)
        for (auto const * v : {&A.scan->rho, &A.scan->sigma, &A.scan->tau})
            for (auto const & g : *v)
                primes.insert(g.witness.prime);

    for (auto const & P : primes) {
        PrimeClassInfo info;
        info.prime = P;
        info.class_order = A.classes.order_of(P.form);
        if (std::find(A.genus.ramified.begin(), A.genus.ramified.end(), P) == A.genus.ramified.end())
            info.frobenius_order = A.genus.group.order(frobenius(P, A.genus));
        A.prime_classes.push_back(std::move(info));
    }
}

void collect_certificates(Analysis & A)
{
    auto add = [&](std::vector<ParamGenerator> const & gens, char const * role) {
        for (auto const & g : gens)
            A.certificates.push_back({g.witness.prime, role, g.witness.splitting,
                                      building::admissible_types(g.witness.splitting),
                                      building::chamber_vertices(g.witness.splitting)});
    };
    add(A.scan->rho, "lambda");
    add(A.scan->sigma, "mu");
    add(A.scan->tau, "nu");
}

} // namespace

Analysis selectivity_report(SelectivityProblem const & problem)
{
    auto const & B = problem.B;
    if (problem.ext.degree() != B.degree())
        throw ConfigError("extension degree " + std::to_string(problem.ext.degree()) +
                          " differs from the algebra degree " + std::to_string(B.degree()));

    Analysis A;
    A.classes = qf::class_group(problem.K);
    A.genus = genus_group(B, A.classes);

    std::map<qf::PrimeOfK, building::SplittingType> local;
    for (auto const & r : B.ramification()) {
        auto s = problem.ext.for_prime(r.prime);
        if (!s)
            throw ConfigError("no splitting data for " + r.prime.name() +
                              ": give an override, the tower cannot be reduced there");
        local.emplace(r.prime, *s);
    }
    A.abhn = check_abhn(B, local);
    if (B.has_partial_ramification())
        A.notes.push_back("partially ramified primes enter G_R through [v]^(n/m_v)");
    if (!A.abhn.ok) {
        A.status = Status::abhn_fail;
        A.notes.push_back("L does not embed in B");
        collect_prime_classes(problem.K, A);
        return A;
    }

    A.division_prime_shortcut = B.has_division_prime();
    if (A.division_prime_shortcut)
        A.notes.push_back("no selectivity: division prime present");

    try {
        A.scan = scan_subgroups(problem.K, problem.ext, B, A.genus, problem.scan);
    } catch (InconclusiveScan const & e) {
        A.inconclusive_reason = e.what();
        if (!A.division_prime_shortcut) {
            A.status = Status::inconclusive;
            collect_prime_classes(problem.K, A);
            return A;
        }
        A.notes.push_back(std::string("scan inconclusive, ratio from the division prime alone: ") + e.what());
    }

    if (A.scan) {
        A.L0_index = A.scan->index();
        if (A.division_prime_shortcut && A.L0_index != 1)
            throw InternalError("division prime present but the scan found [L_0:K] = " + std::to_string(A.L0_index));
        A.representatives = parametrize_genus(A.genus, *A.scan);
        for (auto const & E : A.representatives)
            A.admits.push_back(admits_embedding(E, *A.scan, A.genus));
        if (A.admitting_count() * A.L0_index != A.genus.order())
            throw InternalError("admitting classes times [L_0:K] differs from |G_R|");
        collect_certificates(A);
    } else {
        A.L0_index = 1;
    }
    collect_prime_classes(problem.K, A);
    return A;
}

} // namespace selorder::sel
