/* One line per acceptance criterion; exit status 1 if any fails. */

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "selorder/cli/config.hpp"
#include "selorder/cli/report.hpp"
#include "selorder/verify.hpp"

using namespace selorder;
namespace fs = std::filesystem;

namespace {

/* wall-clock limits in seconds */
constexpr double worked_example_limit = 10.0;
constexpr double local_oracle_limit = 60.0;
constexpr double class_group_limit = 5.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, std::string const & what)
    {
        if (!cond) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int k, char const * title, std::function<void(Outcome &)> const & body)
{
    Outcome o;
    try {
        body(o);
    } catch (std::exception const & e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << k << ". " << title << ":" << o.detail.str() << std::endl;
}

cli::PrimeClassInfo const * find_prime(cli::Report const & r, std::string const & name)
{
    for (auto const & p : r.prime_classes)
        if (p.prime == name)
            return &p;
    return nullptr;
}

} // namespace

int main(int argc, char ** argv)
{
    fs::path const configs = argc > 1 ? fs::path(argv[1]) : fs::path("configs");
    auto const worked_cfg = cli::load_config(configs / "example_paper.config");

    std::string first_json;

    criterion(1, "worked example end to end", [&](Outcome & o) {
        auto t0 = Clock::now();
        auto A = sel::selectivity_report(worked_cfg.problem());
        auto r = cli::make_report(worked_cfg, A);
        double const t = seconds_since(t0);
        first_json = cli::serialize(r);

        std::size_t admitting = 0;
        for (auto const & rep : r.representatives)
            admitting += rep.admits;
        auto const * p7 = find_prime(r, "P(7)");
        auto const * a = find_prime(r, "P(137,1)");
        auto const * b = find_prime(r, "P(137,2)");

        o.require(r.status == "ok", "status ok");
        o.require(r.class_group.h == 4, "h = 4");
        o.require(r.class_group.generator_orders == std::vector<std::size_t>{4}, "C_K cyclic of order 4");
        o.require(a && b && a->class_order == 1 && b->class_order == 1, "primes above 137 principal");
        o.require(r.genus_group.order == 4, "|G_R| = 4");
        o.require(r.L0_index == std::size_t{2}, "[L_0:K] = 2");
        o.require(r.ratio == std::string("1/2"), "ratio 1/2");
        o.require(r.representatives.size() == 4, "4 representatives");
        o.require(admitting == 2, "2 admit O_L");
        o.require(p7 && p7->frobenius_order == std::size_t{2}, "Frobenius at P(7) of order 2");
        o.require(t < worked_example_limit, "time limit");
        o.detail << " h=" << r.class_group.h << " |G_R|=" << r.genus_group.order << " [L_0:K]="
                 << r.L0_index.value_or(0) << " ratio=" << r.ratio.value_or("-") << " admitting=" << admitting << "/"
                 << r.representatives.size() << " ord(Frob P(7))=" << (p7 && p7->frobenius_order ? *p7->frobenius_order : 0)
                 << " time=" << t << "s";
    });

    verify::Options local_opts;
    local_opts.n_max = 5;
    local_opts.primes = {2, 3, 5};
    local_opts.coord_bound = 3;

    criterion(2, "block-constancy criterion vs matrix oracle, n <= 5, p in {2,3,5}", [&](Outcome & o) {
        auto t0 = Clock::now();
        auto r = verify::local_equivalence(local_opts);
        double const t = seconds_since(t0);
        o.require(r.failures == 0, r.counterexample.value_or("discrepancy"));
        o.require(r.cases > 0, "cases ran");
        o.require(t < local_oracle_limit, "time limit");
        o.detail << " cases=" << r.cases << " discrepancies=" << r.failures << " time=" << t << "s";
    });

    criterion(3, "unique vertex at inert primes, n in {3,4,5}, bounds 1..6", [&](Outcome & o) {
        auto r = verify::inert_uniqueness(local_opts);
        o.require(r.failures == 0, r.counterexample.value_or("extra vertex"));
        o.require(r.cases == 18, "18 cases");
        o.detail << " cases=" << r.cases;
    });

    criterion(4, "admissible types = enumerated types = <gcd f_i>, n <= 6", [&](Outcome & o) {
        auto r = verify::admissible_type_identity(local_opts);
        o.require(r.failures == 0, r.counterexample.value_or("mismatch"));
        o.require(r.cases == 63, "all 63 compositions");
        o.detail << " compositions=" << r.cases;
    });

    criterion(5, "division prime shortcut agrees with the scan", [&](Outcome & o) {
        auto cfg = cli::load_config(configs / "full_ramification.config");
        auto A = sel::selectivity_report(cfg.problem());
        auto r = cli::make_report(cfg, A);
        o.require(r.status == "ok", "status ok");
        o.require(A.division_prime_shortcut, "shortcut flag");
        o.require(r.ratio == std::string("1/1"), "ratio 1");
        o.require(A.scan.has_value(), "scan ran");
        o.require(A.scan && A.scan->index() == 1, "scan [L_0:K] = 1");
        o.detail << " shortcut=" << A.division_prime_shortcut << " ratio=" << r.ratio.value_or("-")
                 << " scan index=" << (A.scan ? A.scan->index() : 0);
    });

    criterion(6, "ratio for M_4(K) equals 1/[K~ cap L : K]", [&](Outcome & o) {
        auto cfg = cli::load_config(configs / "matrix_algebra.config");
        auto pr = cfg.problem();
        auto A = sel::selectivity_report(pr);
        auto const hcf = sel::hilbert_class_field_index(pr.K, pr.ext, A.classes, pr.scan);
        o.require(A.status == sel::Status::ok, "status ok");
        o.require(pr.B.ramification().empty(), "B unramified");
        o.require(hcf == 2, "[K~ cap L : K] = 2");
        o.require(A.L0_index == hcf, "ratio = 1/[K~ cap L : K]");
        o.detail << " ratio=1/" << A.L0_index << " [K~ cap L : K]=" << hcf;
    });

    criterion(7, "class group laws for d in {-4,-23,-56,-84,-104}", [&](Outcome & o) {
        auto t0 = Clock::now();
        auto r = verify::class_group_laws(verify::default_class_group_fields());
        std::size_t const h4 = qf::class_group(qf::QuadField(-1)).size();
        std::size_t const h23 = qf::class_group(qf::QuadField(-23)).size();
        std::size_t const h56 = qf::class_group(qf::QuadField(-14)).size();
        double const t = seconds_since(t0);
        o.require(r.failures == 0, r.counterexample.value_or("law violated"));
        o.require(h56 == 4 && h23 == 3 && h4 == 1, "class numbers");
        o.require(t < class_group_limit, "time limit");
        o.detail << " fields=" << r.cases << " h(-56)=" << h56 << " h(-23)=" << h23 << " h(-4)=" << h4
                 << " time=" << t << "s";
    });

    criterion(8, "distance idele algebra on the worked parametrization", [&](Outcome & o) {
        auto A = sel::selectivity_report(worked_cfg.problem());
        auto r = verify::analysis_invariants(A);
        o.require(A.status == sel::Status::ok, "status ok");
        o.require(r.failures == 0, r.counterexample.value_or("invariant broken"));
        o.require(A.admitting_count() * A.L0_index == A.genus.order(), "|admitting| [L_0:K] = |G_R|");
        o.detail << " checks=" << r.cases << " |admitting|*[L_0:K]=" << A.admitting_count() * A.L0_index
                 << " |G_R|=" << A.genus.order();
    });

    criterion(9, "byte-identical JSON for identical config and seed", [&](Outcome & o) {
        auto A = sel::selectivity_report(worked_cfg.problem());
        auto second = cli::serialize(cli::make_report(worked_cfg, A));
        o.require(!first_json.empty(), "first run produced JSON");
        o.require(second == first_json, "identical bytes");
        o.detail << " bytes=" << second.size();
    });

    std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all passed")
              << std::endl;
    return failures ? 1 : 0;
}
