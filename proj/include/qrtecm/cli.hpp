#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qrtecm::cli {

/// Dispatches argv (without the program name) to the factor / bench /
/// sequence / prng / convert subcommands. Data goes to `out`, diagnostics to
/// `err`. Returns the process exit code: 0 success or factor found, 2 no
/// factor, 1 usage fault.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Checks one --json output line of a subcommand against the shipped schema
/// (required keys and their JSON types). Returns false and fills `why` on a
/// violation.
bool validate_line(std::string_view subcommand, const nlohmann::json& line,
                   std::string* why = nullptr);

}  // namespace qrtecm::cli
