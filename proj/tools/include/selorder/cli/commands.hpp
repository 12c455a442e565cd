#ifndef SELORDER_CLI_COMMANDS_HPP
#define SELORDER_CLI_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace selorder::cli {

enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2, exit_abhn = 3, exit_inconclusive = 4 };

struct GlobalOptions {
    std::optional<std::filesystem::path> json;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> bound;
    std::optional<std::size_t> window;
};

int cmd_local(int n, std::string const & composition, GlobalOptions const & g, std::ostream & out, std::ostream & err);
int cmd_classgroup(std::string const & m, GlobalOptions const & g, std::ostream & out, std::ostream & err);
int cmd_selectivity(std::filesystem::path const & config, GlobalOptions const & g, std::ostream & out,
                    std::ostream & err);
int cmd_verify(std::optional<std::filesystem::path> const & config, int n_max, bool mutate, GlobalOptions const & g,
               std::ostream & out, std::ostream & err);

} // namespace selorder::cli

#endif /* SELORDER_CLI_COMMANDS_HPP */
