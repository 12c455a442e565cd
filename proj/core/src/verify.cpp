#include <algorithm>
#include <numeric>
#include <sstream>

#include "selorder/orders.hpp"
#include "selorder/verify.hpp"

namespace selorder::verify {

namespace {

void fail(SuiteResult & r, std::string const & msg)
{
    ++r.failures;
    if (!r.counterexample)
        r.counterexample = msg;
}

std::string composition_string(std::vector<int> const & f)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i)
        os << (i ? "," : "") << f[i];
    return os.str();
}

/* all vectors in [0, bound)^n with minimum 0 */
std::vector<building::HomothetyClass> canonical_classes(int n, int bound)
{
    std::vector<building::HomothetyClass> out;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
    for (;;) {
        if (*std::min_element(a.begin(), a.end()) == 0)
            out.push_back(building::canonicalize(a));
        std::size_t i = 0;
        while (i < a.size() && ++a[i] == bound)
            a[i++] = 0;
        if (i == a.size())
            break;
    }
    return out;
}

std::vector<int> subgroup_of(int n, int g)
{
    std::vector<int> out;
    int const step = std::gcd(g, n);
    for (int t = 0; t < n; t += step)
        out.push_back(t);
    return out;
}

} // namespace

SuiteResult local_equivalence(Options const & opt)
{
    SuiteResult r;
    r.name = "local_equivalence";
    for (int n = 1; n <= opt.n_max; ++n) {
        auto const classes = canonical_classes(n, opt.coord_bound);
        for (auto const & f : building::compositions(n)) {
            auto const s = building::SplittingType::unramified(f);
            for (auto const & v : classes)
                for (long p : opt.primes) {
                    bool theorem = building::contains_ring_of_integers(v, s);
                    if (opt.mutate && r.cases == 0)
                        theorem = !theorem;
                    bool const oracle = orders::oracle_contains(v, s, p);
                    ++r.cases;
                    if (theorem != oracle)
                        fail(r, "n=" + std::to_string(n) + " f=(" + composition_string(f) + ") v=" + v.to_string() +
                                    " p=" + std::to_string(p) + ": criterion " + (theorem ? "true" : "false") +
                                    ", oracle " + (oracle ? "true" : "false"));
                }
        }
    }
    return r;
}

SuiteResult inert_uniqueness(Options const & opt)
{
    SuiteResult r;
    r.name = "inert_uniqueness";
    for (int n = 3; n <= std::max(3, opt.n_max); ++n) {
        auto const s = building::SplittingType::unramified({n});
        auto const origin = building::block_class(n, 0, 0);
        for (int bound = 1; bound <= 6; ++bound) {
            auto const vs = building::enumerate_containing_vertices(s, bound);
            ++r.cases;
            if (vs.size() != 1 || !(vs.front() == origin))
                fail(r, "n=" + std::to_string(n) + " bound=" + std::to_string(bound) + ": " +
                            std::to_string(vs.size()) + " vertices");
        }
    }
    return r;
}

SuiteResult admissible_type_identity(Options const & opt)
{
    SuiteResult r;
    r.name = "admissible_types";
    for (int n = 1; n <= opt.n_max + 1; ++n)
        for (auto const & f : building::compositions(n)) {
            auto const s = building::SplittingType::unramified(f);
            std::vector<int> seen;
            for (auto const & v : building::enumerate_containing_vertices(s, n))
                seen.push_back(building::vertex_type(v));
            std::sort(seen.begin(), seen.end());
            seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
            int const g = std::accumulate(f.begin(), f.end(), 0, [](int x, int y) { return std::gcd(x, y); });
            ++r.cases;
            auto const types = building::admissible_types(s);
            if (types != seen || types != subgroup_of(n, g))
                fail(r, "n=" + std::to_string(n) + " f=(" + composition_string(f) + ")");
        }
    return r;
}

SuiteResult chamber_intersection(Options const & opt)
{
    SuiteResult r;
    r.name = "chamber_intersection";
    for (int n = 1; n <= opt.n_max; ++n)
        for (auto const & f : building::compositions(n)) {
            auto const s = building::SplittingType::unramified(f);
            std::vector<orders::ValuationPattern> pats;
            for (auto const & v : building::chamber_vertices(s))
                pats.push_back(orders::pattern_from_class(v));
            auto const R = orders::intersect_patterns(pats);
            for (long p : opt.primes) {
                ++r.cases;
                bool ok = true;
                for (auto const & M : orders::local_module_basis(s, p))
                    for (std::size_t i = 0; i < R.size(); ++i)
                        for (std::size_t j = 0; j < R.size(); ++j) {
                            auto const val = orders::valuation(M(i, j), p);
                            if (val && *val < R[i][j])
                                ok = false;
                        }
                if (!ok)
                    fail(r, "n=" + std::to_string(n) + " f=(" + composition_string(f) + ") p=" + std::to_string(p));
            }
        }
    return r;
}

SuiteResult class_group_laws(std::vector<long> const & m_values)
{
    SuiteResult r;
    r.name = "class_group_laws";
    for (long m : m_values) {
        qf::ClassGroup const C{qf::QuadField(m)};
        auto const & G = C.group();
        ++r.cases;
        std::string const tag = "d=" + C.discriminant().get_str();
        if (!G.check_associativity())
            fail(r, tag + ": composition not associative");
        for (FiniteAbelianGroup::Elem x = 0; x < G.size(); ++x) {
            if (G.op(x, G.identity()) != x)
                fail(r, tag + ": identity fails at " + C.form(x).to_string());
            if (G.op(x, G.inverse(x)) != G.identity())
                fail(r, tag + ": inverse fails at " + C.form(x).to_string());
            if (!(qf::compose(C.form(x), qf::principal_form(C.discriminant())) == C.form(x)))
                fail(r, tag + ": principal form is not neutral at " + C.form(x).to_string());
            if (C.index_of(qf::inverse_form(C.form(x))) != G.inverse(x))
                fail(r, tag + ": inverse form disagrees at " + C.form(x).to_string());
        }
    }
    return r;
}

SuiteResult analysis_invariants(sel::Analysis const & A)
{
    SuiteResult r;
    r.name = "analysis_invariants";
    if (A.status != sel::Status::ok || !A.scan)
        return r;
    auto const & G = A.genus;
    auto const & reps = A.representatives;
    ++r.cases;
    if (A.admitting_count() * A.L0_index != G.order())
        fail(r, "admitting count times [L_0:K] differs from |G_R|");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        ++r.cases;
        bool const a_zero = std::all_of(reps[i].a.begin(), reps[i].a.end(), [](int x) { return x == 0; });
        if (A.admits[i] != a_zero)
            fail(r, "verdict does not follow the a-tuple at representative " + std::to_string(i));
        if (sel::distance_idele(reps[i], reps[i], G).image != G.group.identity())
            fail(r, "delta(D, D) nontrivial at representative " + std::to_string(i));
        for (std::size_t j = 0; j < reps.size(); ++j) {
            /* delta(D_i, D_j) = e_j - e_i */
            auto const d = sel::distance_idele(reps[i], reps[j], G).image;
            if (d != G.group.op(reps[j].element, G.group.inverse(reps[i].element)))
                fail(r, "delta not a homomorphism at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return r;
}

std::vector<long> default_class_group_fields()
{
    return {-1, -23, -14, -21, -26};
}

std::vector<SuiteResult> run_all(Options const & opt)
{
    return {local_equivalence(opt), inert_uniqueness(opt), admissible_type_identity(opt), chamber_intersection(opt),
            class_group_laws(default_class_group_fields())};
}

} // namespace selorder::verify
