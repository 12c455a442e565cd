#include <sstream>

#include "selorder/cli/json_io.hpp"
#include "selorder/cli/report.hpp"
#include "selorder/error.hpp"

namespace selorder::cli {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClassGroupInfo, discriminant, h, forms, orders, generators, generator_orders)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GenusGroupInfo, order, exponent, invariants, killed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AbhnInfo, prime, local_index, splitting, ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ScanInfo, bound, window, last_prime, primes_examined, stopped_early, H_order,
                                   H_hat_order, H_witnesses, H_hat_witnesses)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TupleInfo, a, b, c)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RepresentativeInfo, tuple, admits, witness_primes, vertices, genus_class)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CertificateInfo, prime, role, splitting, admissible_types, chamber_vertices)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PrimeClassInfo, prime, class_order, frobenius_order)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Report, status, m, degree, class_group, genus_group, abhn, division_prime_shortcut,
                                   scan, L0_index, ratio, representatives, local_certificates, prime_classes, notes,
                                   inconclusive_reason)

namespace {

FormTriple triple(qf::BinQuadForm const & f)
{
    return {f.a, f.b, f.c};
}

std::vector<FactorPair> factors(building::SplittingType const & s)
{
    std::vector<FactorPair> out;
    for (auto const & lf : s.factors())
        out.push_back({lf.e, lf.f});
    return out;
}

std::vector<std::string> names(std::vector<sel::Witness> const & ws)
{
    std::vector<std::string> out;
    for (auto const & w : ws)
        out.push_back(w.prime.name());
    return out;
}

} // namespace

Report make_report(Config const & cfg, sel::Analysis const & A)
{
    Report r;
    r.status = sel::to_string(A.status);
    r.m = cfg.m;
    r.degree = cfg.degree;

    auto const & C = A.classes;
    r.class_group.discriminant = C.discriminant();
    r.class_group.h = C.size();
    for (std::size_t i = 0; i < C.size(); ++i) {
        r.class_group.forms.push_back(triple(C.form(i)));
        r.class_group.orders.push_back(C.group().order(i));
    }
    for (auto const & g : C.generators()) {
        r.class_group.generators.push_back(triple(C.form(g.generator)));
        r.class_group.generator_orders.push_back(g.order);
    }

    auto const & G = A.genus;
    r.genus_group.order = G.order();
    r.genus_group.exponent = G.exponent();
    for (auto const & g : G.generators)
        r.genus_group.invariants.push_back(g.order);
    for (auto k : G.killed)
        r.genus_group.killed.push_back(triple(C.form(k)));

    for (auto const & e : A.abhn.entries)
        r.abhn.push_back({e.prime.name(), e.local_index, factors(e.splitting), e.ok});
    r.division_prime_shortcut = A.division_prime_shortcut;

    if (A.scan) {
        auto const & S = *A.scan;
        r.scan = ScanInfo{S.bound,           S.window,          S.last_prime,
                          S.primes_examined, S.stopped_early,   S.H.size(),
                          S.H_hat.size(),    names(S.h_witnesses), names(S.h_hat_witnesses)};
    }
    if (!A.inconclusive_reason.empty())
        r.inconclusive_reason = A.inconclusive_reason;

    if (A.status == sel::Status::ok) {
        r.L0_index = A.L0_index;
        r.ratio = "1/" + std::to_string(A.L0_index);
    } else if (A.status == sel::Status::abhn_fail) {
        r.ratio = "0/1";
    }

    for (std::size_t i = 0; i < A.representatives.size(); ++i) {
        auto const & E = A.representatives[i];
        RepresentativeInfo ri;
        ri.tuple = {E.a, E.b, E.c};
        ri.admits = A.admits[i];
        for (auto const & v : E.local) {
            ri.witness_primes.push_back(v.prime.name());
            ri.vertices.push_back(v.vertex.coords());
        }
        ri.genus_class = triple(C.form(G.representative[E.element]));
        r.representatives.push_back(std::move(ri));
    }
    for (auto const & c : A.certificates) {
        CertificateInfo ci{c.prime.name(), c.role, factors(c.splitting), c.admissible_types, {}};
        for (auto const & v : c.chamber_vertices)
            ci.chamber_vertices.push_back(v.coords());
        r.local_certificates.push_back(std::move(ci));
    }
    for (auto const & p : A.prime_classes)
        r.prime_classes.push_back({p.prime.name(), p.class_order, p.frobenius_order});
    r.notes = A.notes;
    return r;
}

nlohmann::json to_json(Report const & r)
{
    nlohmann::json j;
    nlohmann::to_json(j, r);
    return j;
}

Report report_from_json(nlohmann::json const & j)
{
    Report r;
    nlohmann::from_json(j, r);
    return r;
}

std::string serialize(Report const & r)
{
    return to_json(r).dump(2) + "\n";
}

Report parse_report(std::string const & text)
{
    return report_from_json(nlohmann::json::parse(text));
}

namespace {

std::string join(std::vector<std::string> const & xs, char const * sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + xs[i];
    return out;
}

template <typename T>
std::string list(std::vector<T> const & xs)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    os << "]";
    return os.str();
}

std::string form(FormTriple const & f)
{
    return "(" + f[0].get_str() + "," + f[1].get_str() + "," + f[2].get_str() + ")";
}

std::string splitting(std::vector<FactorPair> const & s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::string("(") + std::to_string(s[i][0]) + "," + std::to_string(s[i][1]) + ")";
    return out + "]";
}

} // namespace

void render_text(std::ostream & os, Report const & r)
{
    os << "K = Q(sqrt(" << r.m << ")), d = " << r.class_group.discriminant << ", n = " << r.degree << "\n";
    os << "class group: h = " << r.class_group.h;
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < r.class_group.generators.size(); ++i)
        gens.push_back(form(r.class_group.generators[i]) + " of order " +
                       std::to_string(r.class_group.generator_orders[i]));
    os << (gens.empty() ? std::string(", trivial") : ", generated by " + join(gens, ", ")) << "\n";
    for (std::size_t i = 0; i < r.class_group.forms.size(); ++i)
        os << "  " << form(r.class_group.forms[i]) << "  order " << r.class_group.orders[i] << "\n";
    os << "G_R: order " << r.genus_group.order << ", exponent " << r.genus_group.exponent << ", invariants "
       << list(r.genus_group.invariants) << "\n";
    for (auto const & a : r.abhn)
        os << "ramified " << a.prime << ": m = " << a.local_index << ", splitting in L " << splitting(a.splitting)
           << (a.ok ? "" : "  VIOLATES m | e f") << "\n";
    if (r.division_prime_shortcut)
        os << "division prime present: ratio 1 without scanning\n";
    if (r.scan)
        os << "scan: primes up to " << r.scan->last_prime << " (bound " << r.scan->bound << ", window "
           << r.scan->window << "), " << r.scan->primes_examined << " primes of K, |H| = " << r.scan->H_order
           << ", |Hhat| = " << r.scan->H_hat_order << (r.scan->stopped_early ? ", stabilized" : "") << "\n";
    os << "status: " << r.status << "\n";
    if (r.inconclusive_reason)
        os << "inconclusive: " << *r.inconclusive_reason << "\n";
    if (r.L0_index)
        os << "[L_0:K] = " << *r.L0_index << "\n";
    if (r.ratio)
        os << "ratio = " << *r.ratio << "\n";
    if (!r.representatives.empty()) {
        os << "representatives:\n";
        for (auto const & rep : r.representatives) {
            os << "  a=" << list(rep.tuple.a) << " b=" << list(rep.tuple.b) << " c=" << list(rep.tuple.c)
               << "  class " << form(rep.genus_class) << "  " << (rep.admits ? "admits O_L" : "no embedding")
               << "\n";
            for (std::size_t i = 0; i < rep.witness_primes.size(); ++i)
                os << "      " << rep.witness_primes[i] << " " << list(rep.vertices[i]) << "\n";
        }
    }
    if (!r.local_certificates.empty()) {
        os << "local certificates:\n";
        for (auto const & c : r.local_certificates) {
            std::vector<std::string> ch;
            for (auto const & v : c.chamber_vertices)
                ch.push_back(list(v));
            os << "  " << c.role << " at " << c.prime << ": splitting " << splitting(c.splitting) << ", types "
               << list(c.admissible_types) << ", chamber " << join(ch, " ") << "\n";
        }
    }
    if (!r.prime_classes.empty()) {
        os << "prime classes:\n";
        for (auto const & p : r.prime_classes) {
            os << "  " << p.prime << ": order " << p.class_order << " in C_K";
            if (p.frobenius_order)
                os << ", Frobenius of order " << *p.frobenius_order << " in G_R";
            else
                os << ", ramified in B";
            os << "\n";
        }
    }
    for (auto const & n : r.notes)
        os << "note: " << n << "\n";
}

int exit_code(std::string const & status)
{
    if (status == "ok")
        return 0;
    if (status == "abhn_fail")
        return 3;
    if (status == "inconclusive")
        return 4;
    throw InternalError("unknown status " + status);
}

} // namespace selorder::cli
