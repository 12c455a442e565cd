#ifndef SELORDER_CLI_CONFIG_HPP
#define SELORDER_CLI_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "selorder/selectivity.hpp"

namespace selorder::cli {

using Integer = qf::Integer;

/* which primes above a rational prime: 1, 2, "all", "ramified", "inert" */
struct PrimeSelector {
    Integer rational_prime;
    std::string which;

    std::vector<qf::PrimeOfK> resolve(qf::QuadField const & K) const;
};

struct RamificationEntry {
    PrimeSelector prime;
    int local_index = 1;
};

struct OverrideEntry {
    PrimeSelector prime;
    std::vector<building::LocalFactor> factors;
};

struct Config {
    Integer m;
    int degree = 0;
    std::vector<RamificationEntry> ramification;
    std::optional<qf::TowerSpec> tower;
    std::vector<OverrideEntry> splitting_override;
    Integer bound = 5000;
    std::size_t window = 50;
    std::uint64_t seed = ff::default_seed;

    /* resolves prime selectors; ConfigError on anything inconsistent */
    sel::SelectivityProblem problem() const;
};

/* strict: unknown keys and wrong types are ConfigErrors */
Config parse_config(std::string const & text);
Config load_config(std::filesystem::path const & path);

} // namespace selorder::cli

#endif /* SELORDER_CLI_CONFIG_HPP */
