#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace explab {

// Runs the explab command line. args excludes the program name. Returns the
// process exit code: 0 on success, 1 when a verification campaign has a
// failing instance, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace explab
