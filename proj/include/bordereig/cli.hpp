#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bordereig/interp.hpp"
#include "bordereig/spectral.hpp"

namespace bordereig::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kInputError = 2 };

enum class OutputFormat { json, text };

struct RunConfig {
  SolverConfig solver;
  double tol_poised = kDefaultTolPoised;
  OutputFormat format = OutputFormat::json;
  std::size_t size_cap = kDefaultSizeCap;
};

/// Process streams; a file argument "-" reads from `in`.
struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int cmd_check(const std::string& system_file, const RunConfig& cfg, Streams io);
int cmd_solve(const std::string& system_file, const RunConfig& cfg, Streams io);
int cmd_from_points(const std::string& index_set_spec, const std::string& points_file,
                    const RunConfig& cfg, Streams io);
int cmd_verify(const std::string& system_file, const std::string& roots_file,
               const RunConfig& cfg, Streams io);
int cmd_matrices(const std::string& system_file, const RunConfig& cfg, Streams io);

/// Full command line (without the program name). Flags override
/// BORDER_EIG_* environment variables, which override the defaults.
/// Returns 0, 1 or 2 only.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace bordereig::cli
