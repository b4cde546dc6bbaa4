#include "bordereig/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "bordereig/error.hpp"
#include "bordereig/json_io.hpp"
#include "bordereig/matrices.hpp"

namespace bordereig::cli {

namespace {

using json_io::Json;

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io", message) {}
};

std::string read_input(const std::string& file, std::istream& in) {
  if (file == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream f(file, std::ios::binary);
  if (!f) throw IoError("cannot open '" + file + "'");
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void emit(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

void report_error(std::ostream& err, const std::string& kind, const std::string& message,
                  const std::string& path = {}) {
  Json e{{"kind", kind}, {"message", message}};
  if (!path.empty()) e["path"] = path;
  err << Json{{"error", std::move(e)}}.dump() << '\n';
}

bool is_input_error(const Error& e) {
  static const char* const kinds[] = {"parse",           "io",
                                      "invalid_argument", "size_limit",
                                      "duplicate_index", "closure_violation",
                                      "unknown_relation"};
  return std::find(std::begin(kinds), std::end(kinds), e.kind()) != std::end(kinds);
}

// Runs a command body and maps escaping exceptions onto the exit-code contract.
template <typename Body>
int guarded(Streams io, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    report_error(io.err, e.kind(), e.what(), e.path());
    return kInputError;
  } catch (const UnisolvenceError& e) {
    report_error(io.err, e.kind(), e.what());
    emit(io.out, Json{{"poisedness", json_io::poisedness_to_json(e.report())}});
    return kFailure;
  } catch (const Error& e) {
    report_error(io.err, e.kind(), e.what());
    return is_input_error(e) ? kInputError : kFailure;
  } catch (const std::exception& e) {
    report_error(io.err, "internal", e.what());
    return kFailure;
  }
}

std::ostream& fmt(std::ostream& os) { return os << std::setprecision(17); }

std::string scalar_text(Scalar s) {
  std::ostringstream os;
  fmt(os) << s.real();
  if (s.imag() != 0.0) os << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag()) << "i";
  return os.str();
}

std::string point_text(const Point& z) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (i) out += ", ";
    out += scalar_text(z[i]);
  }
  return out + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_criterion_text(std::ostream& os, const CriterionReport& r) {
  fmt(os) << "commuting: " << yes_no(r.verdict.commuting)
          << " (max defect " << r.commutation.max_defect << ", tol "
          << r.commutation.tolerance_used << ")\n";
  for (std::size_t i = 0; i < r.semisimplicity.size(); ++i) {
    const auto& s = r.semisimplicity[i];
    os << "matrix " << i + 1 << " semisimple: " << yes_no(s.semisimple) << " (" << s.clusters.size()
       << " eigenvalue clusters)\n";
    for (const auto& c : s.clusters) {
      if (c.algebraic != c.geometric || c.algebraic > 1) {
        os << "  lambda " << scalar_text(c.representative) << ": algebraic " << c.algebraic
           << ", geometric " << c.geometric << '\n';
      }
    }
  }
  os << "all_semisimple: " << yes_no(r.verdict.all_semisimple) << '\n'
     << "maximal: " << yes_no(r.verdict.maximal) << '\n';
}

}  // namespace

int cmd_check(const std::string& system_file, const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const BorderSystem sys = json_io::parse_system(read_input(system_file, io.in), cfg.size_cap);
    const MultMatrixFamily family = build_family(sys);
    const CriterionReport report = criterion(family, cfg.solver);
    if (cfg.format == OutputFormat::json) {
      Json j = json_io::criterion_to_json(report);
      j["basis_size"] = sys.basis().size();
      j["unit_row_count"] = family.unit_row_count;
      j["coeff_row_count"] = family.coeff_row_count;
      emit(io.out, j);
    } else {
      io.out << "#I = " << sys.basis().size() << '\n';
      print_criterion_text(io.out, report);
    }
    return report.verdict.maximal ? kSuccess : kFailure;
  });
}

int cmd_solve(const std::string& system_file, const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const BorderSystem sys = json_io::parse_system(read_input(system_file, io.in), cfg.size_cap);
    const SolutionSet sol = solve(sys, cfg.solver);
    if (cfg.format == OutputFormat::json) {
      emit(io.out, json_io::solution_to_json(sol));
    } else {
      io.out << "strategy: " << sol.strategy.tag() << '\n';
      print_criterion_text(io.out, sol.criterion);
      io.out << "distinct roots: " << sol.distinct_count << " of #I = " << sol.basis_size << '\n';
      for (const auto& r : sol.roots) {
        fmt(io.out) << "  " << point_text(r.z) << "  residual " << r.residual
                    << (r.real ? "  real" : "  complex") << (r.accepted ? "" : "  REJECTED") << '\n';
      }
      for (const auto& w : sol.warnings) io.out << "warning: " << w << '\n';
    }
    return sol.verdict.maximal && sol.all_accepted() ? kSuccess : kFailure;
  });
}

int cmd_from_points(const std::string& index_set_spec, const std::string& points_file,
                    const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const bool inline_spec = !index_set_spec.empty() && index_set_spec.front() == '{';
    const Json spec =
        json_io::parse_document(inline_spec ? index_set_spec : read_input(index_set_spec, io.in));
    const LowerSet lower = json_io::index_set_from_json(spec, "", cfg.size_cap);
    const NodeSet nodes = json_io::parse_points(read_input(points_file, io.in));
    const PoisednessReport report = poisedness(lower, nodes, cfg.tol_poised);
    if (!report.poised) throw UnisolvenceError(report);
    const BorderSystem sys = system_from_nodes(lower, nodes, cfg.tol_poised, cfg.size_cap);
    if (cfg.format == OutputFormat::json) {
      Json j = json_io::system_to_json(sys);
      j["poisedness"] = json_io::poisedness_to_json(report);
      emit(io.out, j);
    } else {
      fmt(io.out) << "poised: true (condition " << report.condition << ")\n";
      const auto& coeffs = sys.coefficients();
      for (std::size_t k = 0; k < sys.border().size(); ++k) {
        io.out << "x^" << sys.border()[k].to_string() << " =";
        for (Eigen::Index c = 0; c < coeffs.cols(); ++c) {
          const Scalar a = coeffs(static_cast<Eigen::Index>(k), c);
          if (a != Scalar(0.0)) {
            io.out << " + (" << scalar_text(a) << ") x^"
                   << sys.basis()[static_cast<std::size_t>(c)].to_string();
          }
        }
        io.out << '\n';
      }
    }
    return kSuccess;
  });
}

int cmd_verify(const std::string& system_file, const std::string& roots_file,
               const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const BorderSystem sys = json_io::parse_system(read_input(system_file, io.in), cfg.size_cap);
    const std::vector<Point> roots =
        json_io::roots_from_json(json_io::parse_document(read_input(roots_file, io.in)), sys.dimension());
    bool all_pass = true;
    Json rows = Json::array();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const double r = residual(sys, roots[k]);
      const bool pass = r <= cfg.solver.tol_accept;
      all_pass = all_pass && pass;
      rows.push_back(Json{{"index", k}, {"z", json_io::point_to_json(roots[k])}, {"residual", r}, {"pass", pass}});
    }
    if (cfg.format == OutputFormat::json) {
      emit(io.out, Json{{"rows", std::move(rows)}, {"tol_accept", cfg.solver.tol_accept}, {"all_pass", all_pass}});
    } else {
      for (const auto& row : rows) {
        fmt(io.out) << row["index"].get<std::size_t>() << "  residual "
                    << row["residual"].get<double>() << (row["pass"].get<bool>() ? "  pass" : "  FAIL")
                    << '\n';
      }
      io.out << "all_pass: " << yes_no(all_pass) << '\n';
    }
    return all_pass ? kSuccess : kFailure;
  });
}

int cmd_matrices(const std::string& system_file, const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const BorderSystem sys = json_io::parse_system(read_input(system_file, io.in), cfg.size_cap);
    const MultMatrixFamily family = build_family(sys);
    if (cfg.format == OutputFormat::json) {
      emit(io.out, json_io::family_to_json(family));
    } else {
      for (std::size_t i = 0; i < family.matrices.size(); ++i) {
        io.out << "A_" << i + 1 << " (" << family.unit_row_count[i] << " unit rows, "
               << family.coeff_row_count[i] << " coefficient rows)\n";
        const auto& a = family.matrices[i];
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
          io.out << " ";
          for (Eigen::Index c = 0; c < a.cols(); ++c) io.out << ' ' << scalar_text(a(r, c));
          io.out << '\n';
        }
      }
    }
    return kSuccess;
  });
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Border-form polynomial systems via multiplication-matrix eigenvalues", "border-eig"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  auto* group = app.add_option_group("tolerances");
  group->add_option("--tol-commute", cfg.solver.tol_commute, "commutation defect threshold")
      ->envname("BORDER_EIG_TOL_COMMUTE")->check(CLI::PositiveNumber);
  group->add_option("--tol-cluster", cfg.solver.tol_cluster, "eigenvalue clustering gap (relative)")
      ->envname("BORDER_EIG_TOL_CLUSTER")->check(CLI::PositiveNumber);
  group->add_option("--tol-rank", cfg.solver.tol_rank, "numerical rank threshold (relative)")
      ->envname("BORDER_EIG_TOL_RANK")->check(CLI::PositiveNumber);
  group->add_option("--tol-dedup", cfg.solver.tol_dedup, "root merge distance (relative)")
      ->envname("BORDER_EIG_TOL_DEDUP")->check(CLI::PositiveNumber);
  group->add_option("--tol-accept", cfg.solver.tol_accept, "root acceptance residual")
      ->envname("BORDER_EIG_TOL_ACCEPT")->check(CLI::PositiveNumber);
  group->add_option("--tol-eig", cfg.solver.tol_eig, "eigenpair residual bound (relative)")
      ->envname("BORDER_EIG_TOL_EIG")->check(CLI::PositiveNumber);
  group->add_option("--tol-poised", cfg.tol_poised, "poisedness threshold sigma_min/sigma_max")
      ->envname("BORDER_EIG_TOL_POISED")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.solver.seed, "seed for random matrix combinations")
      ->envname("BORDER_EIG_SEED");
  app.add_option("--refine", cfg.solver.refine_iters, "Gauss-Newton refinement steps per root")
      ->envname("BORDER_EIG_REFINE")->check(CLI::NonNegativeNumber);
  app.add_option("--max-retries", cfg.solver.max_retries, "random combination draws")
      ->envname("BORDER_EIG_MAX_RETRIES")->check(CLI::PositiveNumber);
  app.add_option("--size-cap", cfg.size_cap, "maximum #I and #J")
      ->envname("BORDER_EIG_SIZE_CAP")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")
      ->envname("BORDER_EIG_FORMAT")->check(CLI::IsMember({"json", "text"}));

  std::string system_file;
  std::string roots_file;
  std::string points_file;
  std::string index_set_spec;

  auto* check = app.add_subcommand("check", "decide the commuting + semisimple criterion");
  check->add_option("system", system_file, "system JSON ('-' for stdin)")->required();
  auto* solve_cmd = app.add_subcommand("solve", "solve a border system");
  solve_cmd->add_option("system", system_file, "system JSON ('-' for stdin)")->required();
  auto* from_points = app.add_subcommand("from-points", "build the system vanishing on nodes");
  from_points->add_option("--index-set", index_set_spec, "index set JSON (inline or file)")->required();
  from_points->add_option("points", points_file, "points JSON ('-' for stdin)")->required();
  auto* verify = app.add_subcommand("verify", "plug claimed roots into a system");
  verify->add_option("system", system_file, "system JSON")->required();
  verify->add_option("roots", roots_file, "roots or points JSON")->required();
  auto* matrices = app.add_subcommand("matrices", "dump the multiplication matrices");
  matrices->add_option("system", system_file, "system JSON ('-' for stdin)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    report_error(io.err, "usage", e.what());
    return kInputError;
  }
  cfg.format = format == "text" ? OutputFormat::text : OutputFormat::json;

  if (check->parsed()) return cmd_check(system_file, cfg, io);
  if (solve_cmd->parsed()) return cmd_solve(system_file, cfg, io);
  if (from_points->parsed()) return cmd_from_points(index_set_spec, points_file, cfg, io);
  if (verify->parsed()) return cmd_verify(system_file, roots_file, cfg, io);
  return cmd_matrices(system_file, cfg, io);
}

}  // namespace bordereig::cli
