#pragma once

// Command implementations behind the `fqtree` executable. Each writes its
// document to `out`, diagnostics to `err`, and returns the process exit code.

#include <iosfwd>
#include <string>

#include "fqtree/sweep.hpp"

namespace fqtree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertification = 1;
inline constexpr int kExitDefect = 2;
inline constexpr int kExitUsage = 64;

int cmd_construct(int n, const std::string& s, const std::string& format,
                  std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oracle(int n, const std::string& s, int k, std::ostream& out,
               std::ostream& err);
int cmd_topo(int n, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fqtree::cli
