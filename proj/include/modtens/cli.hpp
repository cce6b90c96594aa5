#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modtens {

/// Entry point behind the `modtens` binary, driveable in-process by tests.
/// Subcommands: validate, apply, roundtrip. Identical invocations on
/// identical files produce byte-identical reports; exit code 0 iff every
/// report section passes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace modtens
