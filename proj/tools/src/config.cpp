#include <fstream>
#include <set>
#include <sstream>

#include "selorder/cli/config.hpp"
#include "selorder/cli/json_io.hpp"
#include "selorder/error.hpp"

namespace selorder::cli {

using nlohmann::json;

namespace {

void only_keys(json const & j, std::string const & where, std::set<std::string> const & allowed)
{
    if (!j.is_object())
        throw ConfigError(where + ": expected an object");
    for (auto const & [k, v] : j.items())
        if (!allowed.count(k))
            throw ConfigError(where + ": unknown key \"" + k + "\"");
}

json const & need(json const & j, std::string const & where, std::string const & key)
{
    if (!j.contains(key))
        throw ConfigError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

Integer integer(json const & j, std::string const & where)
{
    try {
        return j.get<Integer>();
    } catch (std::exception const & e) {
        throw ConfigError(where + ": " + e.what());
    }
}

long small(json const & j, std::string const & where, long lo, long hi)
{
    Integer const x = integer(j, where);
    if (x < lo || x > hi)
        throw ConfigError(where + ": " + x.get_str() + " out of range");
    return x.get_si();
}

PrimeSelector selector(json const & j, std::string const & where)
{
    PrimeSelector s;
    s.rational_prime = integer(need(j, where, "rational_prime"), where + ".rational_prime");
    if (!ff::is_prime(s.rational_prime))
        throw ConfigError(where + ": " + s.rational_prime.get_str() + " is not prime");
    json const & w = need(j, where, "which");
    if (w.is_number_integer()) {
        long const v = w.get<long>();
        if (v != 1 && v != 2)
            throw ConfigError(where + ".which: expected 1, 2, \"all\", \"ramified\" or \"inert\"");
        s.which = std::to_string(v);
    } else if (w.is_string()) {
        s.which = w.get<std::string>();
        if (s.which != "all" && s.which != "ramified" && s.which != "inert")
            throw ConfigError(where + ".which: unknown selector \"" + s.which + "\"");
    } else {
        throw ConfigError(where + ".which: wrong type");
    }
    return s;
}

qf::TowerSpec tower(json const & j)
{
    only_keys(j, "extension.tower", {"level1", "level2"});
    qf::TowerSpec t;
    json const & l1 = need(j, "extension.tower", "level1");
    if (!l1.is_array())
        throw ConfigError("extension.tower.level1: expected an array of [u, v] pairs");
    for (auto const & c : l1) {
        if (!c.is_array() || c.size() != 2)
            throw ConfigError("extension.tower.level1: expected [u, v] pairs");
        t.level1.push_back({integer(c[0], "extension.tower.level1"), integer(c[1], "extension.tower.level1")});
    }
    if (j.contains("level2")) {
        if (!j["level2"].is_array())
            throw ConfigError("extension.tower.level2: expected an array");
        for (auto const & c : j["level2"])
            t.level2.push_back(integer(c, "extension.tower.level2"));
    }
    try {
        t.validate();
    } catch (std::exception const & e) {
        throw ConfigError(std::string("extension.tower: ") + e.what());
    }
    return t;
}

} // namespace

std::vector<qf::PrimeOfK> PrimeSelector::resolve(qf::QuadField const & K) const
{
    auto const all = qf::prime_of_K(K, rational_prime);
    std::vector<qf::PrimeOfK> out;
    std::string const tag = rational_prime.get_str() + " with selector " + which;
    for (auto const & P : all) {
        if (which == "all" || (which == "ramified" && P.kind == qf::PrimeKind::ramified) ||
            (which == "inert" && P.kind == qf::PrimeKind::inert) ||
            (P.kind == qf::PrimeKind::split && which == std::to_string(P.label)))
            out.push_back(P);
    }
    if (out.empty())
        throw ConfigError("no prime of K above " + tag);
    return out;
}

Config parse_config(std::string const & text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (json::parse_error const & e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    only_keys(j, "config", {"base_field", "algebra", "extension", "scan", "seed"});

    Config c;
    json const & bf = need(j, "config", "base_field");
    only_keys(bf, "base_field", {"m"});
    c.m = integer(need(bf, "base_field", "m"), "base_field.m");

    json const & alg = need(j, "config", "algebra");
    only_keys(alg, "algebra", {"degree", "ramification"});
    c.degree = static_cast<int>(small(need(alg, "algebra", "degree"), "algebra.degree", 3, 64));
    if (alg.contains("ramification")) {
        if (!alg["ramification"].is_array())
            throw ConfigError("algebra.ramification: expected an array");
        for (auto const & r : alg["ramification"]) {
            only_keys(r, "algebra.ramification", {"rational_prime", "which", "local_index"});
            c.ramification.push_back({selector(r, "algebra.ramification"),
                                      static_cast<int>(small(need(r, "algebra.ramification", "local_index"),
                                                             "algebra.ramification.local_index", 1, 64))});
        }
    }

    json const & ext = need(j, "config", "extension");
    only_keys(ext, "extension", {"tower", "splitting_override"});
    if (ext.contains("tower"))
        c.tower = tower(ext["tower"]);
    if (ext.contains("splitting_override")) {
        if (!ext["splitting_override"].is_array())
            throw ConfigError("extension.splitting_override: expected an array");
        for (auto const & o : ext["splitting_override"]) {
            only_keys(o, "extension.splitting_override", {"rational_prime", "which", "factors"});
            OverrideEntry e{selector(o, "extension.splitting_override"), {}};
            json const & fs = need(o, "extension.splitting_override", "factors");
            if (!fs.is_array() || fs.empty())
                throw ConfigError("extension.splitting_override.factors: expected a nonempty array of [e, f]");
            for (auto const & f : fs) {
                if (!f.is_array() || f.size() != 2)
                    throw ConfigError("extension.splitting_override.factors: expected [e, f] pairs");
                e.factors.push_back({static_cast<int>(small(f[0], "factors.e", 1, 64)),
                                     static_cast<int>(small(f[1], "factors.f", 1, 64))});
            }
            c.splitting_override.push_back(std::move(e));
        }
    }
    if (!c.tower && c.splitting_override.empty())
        throw ConfigError("extension: need a tower, splitting overrides, or both");

    if (j.contains("scan")) {
        json const & s = j["scan"];
        only_keys(s, "scan", {"bound", "window"});
        if (s.contains("bound"))
            c.bound = integer(s["bound"], "scan.bound");
        if (s.contains("window"))
            c.window = static_cast<std::size_t>(small(s["window"], "scan.window", 1, 1L << 30));
    }
    if (j.contains("seed"))
        c.seed = static_cast<std::uint64_t>(small(j["seed"], "seed", 0, (1L << 53) - 1));
    return c;
}

Config load_config(std::filesystem::path const & path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

sel::SelectivityProblem Config::problem() const
{
    auto wrap = [](auto && f) {
        try {
            return f();
        } catch (DomainError const & e) {
            throw ConfigError(e.what());
        }
    };
    qf::QuadField const K = wrap([&] { return qf::QuadField(m); });

    std::vector<sel::RamifiedPrime> ram;
    for (auto const & r : ramification)
        for (auto const & P : r.prime.resolve(K))
            ram.push_back({P, r.local_index});
    sel::AlgebraData B = wrap([&] { return sel::AlgebraData(degree, ram); });

    std::map<qf::PrimeOfK, building::SplittingType> overrides;
    for (auto const & o : splitting_override)
        for (auto const & P : o.prime.resolve(K)) {
            auto s = wrap([&] { return building::SplittingType(degree, o.factors); });
            if (!overrides.emplace(P, s.sorted()).second)
                throw ConfigError("splitting override for " + P.name() + " given twice");
        }

    sel::ExtensionData ext(K, degree, tower, std::move(overrides), seed);
    sel::ScanOptions opts{bound, window, seed};
    return {K, std::move(B), std::move(ext), opts};
}

} // namespace selorder::cli
