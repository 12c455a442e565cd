#ifndef SELORDER_CLI_REPORT_HPP
#define SELORDER_CLI_REPORT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selorder/cli/config.hpp"

namespace selorder::cli {

/* (a, b, c) */
using FormTriple = std::array<Integer, 3>;
/* (e, f) */
using FactorPair = std::array<int, 2>;

struct ClassGroupInfo {
    Integer discriminant;
    std::size_t h = 0;
    std::vector<FormTriple> forms;
    std::vector<std::size_t> orders;
    std::vector<FormTriple> generators;
    std::vector<std::size_t> generator_orders;
    bool operator==(ClassGroupInfo const &) const = default;
};

struct GenusGroupInfo {
    std::size_t order = 0;
    std::size_t exponent = 0;
    std::vector<std::size_t> invariants;
    /* forms of C_K mapping to the identity */
    std::vector<FormTriple> killed;
    bool operator==(GenusGroupInfo const &) const = default;
};

struct AbhnInfo {
    std::string prime;
    int local_index = 1;
    std::vector<FactorPair> splitting;
    bool ok = true;
    bool operator==(AbhnInfo const &) const = default;
};

struct ScanInfo {
    Integer bound;
    std::size_t window = 0;
    Integer last_prime;
    std::size_t primes_examined = 0;
    bool stopped_early = false;
    std::size_t H_order = 0;
    std::size_t H_hat_order = 0;
    std::vector<std::string> H_witnesses;
    std::vector<std::string> H_hat_witnesses;
    bool operator==(ScanInfo const &) const = default;
};

struct TupleInfo {
    std::vector<int> a, b, c;
    bool operator==(TupleInfo const &) const = default;
};

struct RepresentativeInfo {
    TupleInfo tuple;
    bool admits = false;
    std::vector<std::string> witness_primes;
    std::vector<std::vector<std::int64_t>> vertices;
    /* the form of C_K representing delta(D^0, D) */
    FormTriple genus_class;
    bool operator==(RepresentativeInfo const &) const = default;
};

struct CertificateInfo {
    std::string prime;
    std::string role;
    std::vector<FactorPair> splitting;
    std::vector<int> admissible_types;
    std::vector<std::vector<std::int64_t>> chamber_vertices;
    bool operator==(CertificateInfo const &) const = default;
};

struct PrimeClassInfo {
    std::string prime;
    std::size_t class_order = 1;
    std::optional<std::size_t> frobenius_order;
    bool operator==(PrimeClassInfo const &) const = default;
};

struct Report {
    std::string status;
    Integer m;
    int degree = 0;
    ClassGroupInfo class_group;
    GenusGroupInfo genus_group;
    std::vector<AbhnInfo> abhn;
    bool division_prime_shortcut = false;
    std::optional<ScanInfo> scan;
    std::optional<std::size_t> L0_index;
    /* "p/q" in lowest terms */
    std::optional<std::string> ratio;
    std::vector<RepresentativeInfo> representatives;
    std::vector<CertificateInfo> local_certificates;
    std::vector<PrimeClassInfo> prime_classes;
    std::vector<std::string> notes;
    std::optional<std::string> inconclusive_reason;

    bool operator==(Report const &) const = default;
};

Report make_report(Config const & cfg, sel::Analysis const & A);

nlohmann::json to_json(Report const & r);
Report report_from_json(nlohmann::json const & j);

/* sorted keys, two-space indent, trailing newline */
std::string serialize(Report const & r);
Report parse_report(std::string const & text);

void render_text(std::ostream & os, Report const & r);

int exit_code(std::string const & status);

} // namespace selorder::cli

#endif /* SELORDER_CLI_REPORT_HPP */
