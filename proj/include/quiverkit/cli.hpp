#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace quiverkit {

/// Options shared by every subcommand.  prime = 0 selects the rationals.
struct RunConfig {
    std::uint64_t prime = 0;
    std::size_t cycle_cap = 10000;
    std::size_t path_length_cap = 512;
    bool json = false;
};

/// Command dispatcher behind main.  Results go to out, diagnostics to err.
/// Exit codes: 0 ok, 2 parse or usage error, 3 resource cap hit,
/// 4 precondition violation, 1 failed self-audit.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace quiverkit
