#include <algorithm>

#include "selorder/error.hpp"
#include "selorder/selectivity.hpp"

namespace selorder::sel {

namespace {

/* a subgroup of G as a group in its own right, on indices into elems */
struct SubgroupView {
    std::vector<Elem> elems;
    FiniteAbelianGroup group;

    SubgroupView(FiniteAbelianGroup const & G, std::vector<Elem> sorted_elems)
        : elems(std::move(sorted_elems))
    {
        std::size_t const k = elems.size();
        std::vector<std::vector<Elem>> table(k, std::vector<Elem>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                table[i][j] = local(G.op(elems[i], elems[j]));
        group = FiniteAbelianGroup(std::move(table), local(G.identity()));
    }

    Elem local(Elem x) const
    {
        auto it = std::lower_bound(elems.begin(), elems.end(), x);
        if (it == elems.end() || *it != x)
            throw InternalError("element outside the subgroup");
        return static_cast<Elem>(it - elems.begin());
    }

    std::vector<Elem> local(std::vector<Elem> const & xs) const
    {
        std::vector<Elem> out;
        for (auto x : xs)
            out.push_back(local(x));
        return out;
    }
};

/* Generators of view / sub with witnesses of the given kind.  Each coset
 * generator is lifted to the member whose witness prime is least. */
std::optional<std::vector<ParamGenerator>> witnessed_basis(SubgroupView const & view,
                                                           std::vector<Elem> const & sub,
                                                           std::map<Elem, Witness> const & witnesses)
{
    auto q = view.group.quotient(view.local(sub));
    auto best = [&](Elem coset) -> Witness const * {
        Witness const * w = nullptr;
        for (Elem i = 0; i < view.elems.size(); ++i) {
            if (q.projection[i] != coset)
                continue;
            auto it = witnesses.find(view.elems[i]);
            if (it != witnesses.end() && (!w || it->second.prime < w->prime))
                w = &it->second;
        }
        return w;
    };
    auto dec = q.group.cyclic_decomposition([&](Elem c) { return best(c) != nullptr; });
    if (!dec)
        return std::nullopt;
    std::vector<ParamGenerator> out;
    for (auto const & cf : *dec) {
        Witness const * w = best(cf.generator);
        out.push_back({w->frobenius, cf.order, *w});
    }
    return out;
}

void note_witness(std::map<Elem, Witness> & m, Witness const & w)
{
    m.emplace(w.frobenius, w);
}

bool covers(std::vector<Elem> const & elems, std::map<Elem, Witness> const & m)
{
    return std::all_of(elems.begin(), elems.end(), [&](Elem x) { return m.count(x) != 0; });
}

} // namespace

SubgroupData scan_subgroups(qf::QuadField const & K, ExtensionData const & ext, AlgebraData const & B,
                            GenusGroup const & G, ScanOptions const & opts)
{
    if (opts.bound < 10)
        throw DomainError("scan bound must be at least 10, got " + opts.bound.get_str());
    if (opts.window == 0)
        throw DomainError("scan window must be positive");

    auto const & GR = G.group;
    std::vector<Elem> all(GR.size());
    for (Elem x = 0; x < all.size(); ++x)
        all[x] = x;

    SubgroupData S;
    S.group_order = GR.size();
    S.H = {GR.identity()};
    S.H_hat = {GR.identity()};
    S.bound = opts.bound;
    S.window = opts.window;

    /* inert primes of K are principal and say nothing; only degree-one
     * primes count towards the window */
    std::size_t stable_h = 0, stable_hat = 0;
    Integer p = 2;
    while (p <= opts.bound) {
        for (auto const & P : qf::prime_of_K(K, p)) {
            if (B.is_ramified(P))
                continue;
            auto st = ext.for_scan(P);
            if (!st || !st->is_unramified())
                continue;
            ++S.primes_examined;
            bool const informative = P.residue_degree() == 1;
            Witness w{P, *st, frobenius(P, G)};
            note_witness(S.any_witness, w);
            if (st->has_degree_one_factor()) {
                note_witness(S.degree_one_witness, w);
                if (informative)
                    ++stable_h;
                if (!std::binary_search(S.H.begin(), S.H.end(), w.frobenius)) {
                    std::vector<Elem> gens = S.H;
                    gens.push_back(w.frobenius);
                    S.H = GR.subgroup_generated(gens);
                    S.h_witnesses.push_back(w);
                    stable_h = 0;
                }
            }
            if (st->splits_completely()) {
                note_witness(S.split_witness, w);
                if (informative)
                    ++stable_hat;
                if (!std::binary_search(S.H_hat.begin(), S.H_hat.end(), w.frobenius)) {
                    std::vector<Elem> gens = S.H_hat;
                    gens.push_back(w.frobenius);
                    S.H_hat = GR.subgroup_generated(gens);
                    S.h_hat_witnesses.push_back(w);
                    stable_hat = 0;
                }
            }
        }
        S.last_prime = p;
        if (stable_h >= opts.window && stable_hat >= opts.window && covers(all, S.any_witness) &&
            covers(S.H, S.degree_one_witness) && covers(S.H_hat, S.split_witness)) {
            S.stopped_early = true;
            break;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }

    if (!S.stopped_early)
        throw InconclusiveScan("H and Hhat did not stabilize below " + opts.bound.get_str(), S);

    auto rho = witnessed_basis(SubgroupView(GR, all), S.H, S.any_witness);
    if (!rho)
        throw InconclusiveScan("no witnessed basis of G_R/H below " + opts.bound.get_str(), S);
    S.rho = std::move(*rho);
    auto sigma = witnessed_basis(SubgroupView(GR, S.H), S.H_hat, S.degree_one_witness);
    if (!sigma)
        throw InconclusiveScan("no witnessed basis of H/Hhat below " + opts.bound.get_str(), S);
    S.sigma = std::move(*sigma);
    auto tau = witnessed_basis(SubgroupView(GR, S.H_hat), {GR.identity()}, S.split_witness);
    if (!tau)
        throw InconclusiveScan("no witnessed basis of Hhat below " + opts.bound.get_str(), S);
    S.tau = std::move(*tau);
    return S;
}

std::size_t hilbert_class_field_index(qf::QuadField const & K, ExtensionData const & ext, qf::ClassGroup const & C,
                                      ScanOptions const & opts)
{
    auto const B = AlgebraData::matrix_algebra(ext.degree());
    auto const G = full_class_group(C, ext.degree());
    return scan_subgroups(K, ext, B, G, opts).index();
}

} // namespace selorder::sel
