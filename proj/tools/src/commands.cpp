#include <fstream>
#include <sstream>

#include "selorder/cli/commands.hpp"
#include "selorder/cli/json_io.hpp"
#include "selorder/cli/report.hpp"
#include "selorder/error.hpp"
#include "selorder/verify.hpp"

namespace selorder::cli {

using nlohmann::json;

namespace {

void write_json(GlobalOptions const & g, std::string const & text)
{
    if (!g.json)
        return;
    std::ofstream f(*g.json, std::ios::binary);
    if (!f)
        throw ConfigError("cannot write " + g.json->string());
    f << text;
    if (!f)
        throw ConfigError("error writing " + g.json->string());
}

std::vector<int> parse_composition(std::string const & s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (std::exception const &) {
            throw ConfigError("bad composition entry \"" + part + "\"");
        }
        if (used != part.size() || v <= 0)
            throw ConfigError("bad composition entry \"" + part + "\"");
        out.push_back(v);
    }
    if (out.empty())
        throw ConfigError("empty composition");
    return out;
}

Config apply_globals(Config c, GlobalOptions const & g)
{
    if (g.seed)
        c.seed = *g.seed;
    if (g.bound) {
        if (c.bound.set_str(*g.bound, 10) != 0)
            throw ConfigError("--bound: not an integer: " + *g.bound);
    }
    if (g.window)
        c.window = *g.window;
    return c;
}

json vertex_list(std::vector<building::HomothetyClass> const & vs)
{
    json a = json::array();
    for (auto const & v : vs)
        a.push_back(v.coords());
    return a;
}

} // namespace

int cmd_local(int n, std::string const & composition, GlobalOptions const & g, std::ostream & out, std::ostream & err)
{
    building::SplittingType s;
    std::vector<int> f;
    try {
        f = parse_composition(composition);
        int sum = 0;
        for (int x : f)
            sum += x;
        if (sum != n)
            throw ConfigError("composition " + composition + " does not sum to n = " + std::to_string(n));
        s = building::SplittingType::unramified(f);
    } catch (std::exception const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    auto const types = building::admissible_types(s);
    auto const chamber = building::chamber_vertices(s);
    auto const all = building::enumerate_containing_vertices(s, n);

    out << "n = " << n << ", inertia degrees " << composition << "\n";
    out << "admissible types:";
    for (int t : types)
        out << " " << t;
    out << "\nchamber vertices:";
    for (auto const & v : chamber)
        out << " " << v;
    out << "\nvertices containing O_L with coordinates below " << n << ": " << all.size() << "\n";
    for (auto const & v : all)
        out << "  " << v << "  type " << building::vertex_type(v) << "\n";

    json j;
    j["n"] = n;
    j["inertia_degrees"] = f;
    j["admissible_types"] = types;
    j["chamber_vertices"] = vertex_list(chamber);
    j["enumeration"] = vertex_list(all);
    try {
        write_json(g, j.dump(2) + "\n");
    } catch (std::exception const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

int cmd_classgroup(std::string const & m, GlobalOptions const & g, std::ostream & out, std::ostream & err)
{
    try {
        qf::Integer mm;
        if (mm.set_str(m, 10) != 0)
            throw ConfigError("m must be an integer, got " + m);
        qf::QuadField const K(mm);
        qf::ClassGroup const C(K);
        out << "K = Q(sqrt(" << mm << ")), d = " << C.discriminant() << ", h = " << C.size() << "\n";
        json forms = json::array();
        for (std::size_t i = 0; i < C.size(); ++i) {
            out << "  " << C.form(i) << "  order " << C.group().order(i) << "\n";
            forms.push_back({{"form", FormTriple{C.form(i).a, C.form(i).b, C.form(i).c}},
                             {"order", C.group().order(i)}});
        }
        json gens = json::array();
        out << "generators:";
        for (auto const & gen : C.generators()) {
            auto const & f = C.form(gen.generator);
            out << " " << f << " (order " << gen.order << ")";
            gens.push_back({{"form", FormTriple{f.a, f.b, f.c}}, {"order", gen.order}});
        }
        out << (C.generators().empty() ? " none" : "") << "\n";
        out << (C.is_cyclic() ? "cyclic" : "not cyclic") << "\n";

        json j;
        j["m"] = mm;
        j["discriminant"] = C.discriminant();
        j["h"] = C.size();
        j["forms"] = forms;
        j["generators"] = gens;
        j["cyclic"] = C.is_cyclic();
        write_json(g, j.dump(2) + "\n");
    } catch (std::exception const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

int cmd_selectivity(std::filesystem::path const & config, GlobalOptions const & g, std::ostream & out,
                    std::ostream & err)
{
    Report r;
    try {
        Config const c = apply_globals(load_config(config), g);
        auto const A = sel::selectivity_report(c.problem());
        r = make_report(c, A);
        render_text(out, r);
        write_json(g, serialize(r));
    } catch (ConfigError const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (DomainError const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (HypothesisError const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_code(r.status);
}

int cmd_verify(std::optional<std::filesystem::path> const & config, int n_max, bool mutate, GlobalOptions const & g,
               std::ostream & out, std::ostream & err)
{
    verify::Options opt;
    opt.n_max = n_max;
    opt.mutate = mutate;
    std::vector<verify::SuiteResult> results;
    try {
        if (n_max < 1 || n_max > 8)
            throw ConfigError("--n-max must lie in 1..8");
        results = verify::run_all(opt);
        if (config) {
            Config const c = apply_globals(load_config(*config), g);
            auto const A = sel::selectivity_report(c.problem());
            results.push_back(verify::analysis_invariants(A));
        }
    } catch (std::exception const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    bool ok = true;
    json j = json::array();
    for (auto const & r : results) {
        out << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
        if (r.counterexample)
            out << "  counterexample: " << *r.counterexample << "\n";
        ok = ok && r.passed();
        j.push_back({{"suite", r.name},
                     {"cases", r.cases},
                     {"failures", r.failures},
                     {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}});
    }
    out << (ok ? "all suites passed" : "verification FAILED") << "\n";
    try {
        write_json(g, j.dump(2) + "\n");
    } catch (std::exception const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return ok ? exit_ok : exit_verify_failed;
}

} // namespace selorder::cli
