#ifndef SURVEIL_CLI_HPP
#define SURVEIL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace surveil {

/// Entry point behind the surveil executable. args excludes the program
/// name. Returns the process exit status: 0 on success, 2 for an invalid
/// config, 3 when verification finds a gap beyond tolerance.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace surveil

#endif
