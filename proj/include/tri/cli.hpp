#pragma once

#include <iosfwd>

namespace tri {

// Parses and runs one command-line invocation. Data goes to `out`, usage
// and error messages to `err`; `in` feeds subcommands that read a gluing
// table from standard input. Returns 0 on success, 1 on a domain error,
// 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace tri
