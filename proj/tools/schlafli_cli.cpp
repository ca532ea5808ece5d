// Command-line front end: solve, jacobian, verify, volume, dual.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain error (invalid or
// degenerate tetrahedron, wrong geometry, identity residuals out of tolerance).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "schlafli/io.hpp"

namespace {

using nlohmann::json;
using namespace schlafli;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

class DomainFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + path + "'");
  out << text;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SCHLAFLI_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("SCHLAFLI_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 42;
}

SamplingDomain parse_range(const std::string& text, SamplingDomain domain) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("--range expects lo:hi, got '" + text + "'");
  try {
    domain.lo = std::stod(text.substr(0, colon));
    domain.hi = std::stod(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("--range expects two numbers lo:hi, got '" + text + "'");
  }
  return domain;
}

// A tetrahedron that fails validation is reported as JSON diagnostics before
// exiting with the domain-error code.
TetraLengths load_valid(const std::string& path) {
  const TetraLengths x = parse_tetra(read_input(path));
  const ValidityReport report = is_valid(x.x, x.geometry);
  if (!report.valid) {
    std::cout << dump({{"input", to_json(x)}, {"validity", to_json(report)}});
    throw DomainFailure("invalid tetrahedron: " + report.reason);
  }
  return x;
}

struct SolveOptions {
  std::string input = "-";
  std::string output;
};

void run_solve(const SolveOptions& opt) {
  const TetraLengths x = load_valid(opt.input);
  const TetraAngles a = curvature_map(x);
  json doc = to_json(x);
  doc["angles"] = edge_values_to_json(a.a);
  doc["validity"] = to_json(is_valid(x.x, x.geometry));
  write_output(opt.output, dump(doc));
}

struct JacobianOptions {
  std::string input = "-";
  std::string output;
  std::string mode = "direct";
  std::string format = "json";
  bool fd_check = false;
  double fd_step = 1e-5;
  bool p = false;
  bool r = false;
};

void run_jacobian(const JacobianOptions& opt) {
  const AssemblyMode mode = parse_assembly_mode(opt.mode);
  const TetraLengths x = load_valid(opt.input);
  if (opt.r && !is_curved(x.geometry)) throw DomainFailure("R-matrix requires curved geometry");

  const TetraSolution sol = solve_tetra(x);
  const JacobianMatrix jac = jacobian_analytic(sol, mode);
  json doc = to_json(x);
  doc["mode"] = std::string(to_string(mode));
  doc["jacobian"] = matrix_to_json(jac.values);
  std::string csv = "# jacobian\n" + matrix_to_csv(jac.values);

  if (opt.p) {
    const PMatrix p = p_matrix(jac, sol.angles);
    doc["p_matrix"] = matrix_to_json(p.values);
    csv += "\n# p_matrix\n" + matrix_to_csv(p.values);
  }
  if (opt.r) {
    const RMatrix r = r_matrix(x);
    doc["r_matrix"] = matrix_to_json(r.values);
    doc["r_matrix"]["condition"] = r.condition;
    csv += "\n# r_matrix\n" + matrix_to_csv(r.values);
  }
  if (opt.fd_check) {
    const JacobianMatrix fd = jacobian_fd(x, opt.fd_step);
    const double err = max_relative_error(jac.values, fd.values);
    doc["fd_check"] = {{"step", opt.fd_step}, {"max_relative_error", err}};
    csv += "\n# fd_check step=" + json(opt.fd_step).dump() + " max_relative_error=" + json(err).dump() + "\n";
  }
  write_output(opt.output, opt.format == "csv" ? csv : dump(doc));
}

struct VerifyOptions {
  std::string geometry = "spherical";
  std::size_t samples = 1000;
  std::optional<std::uint64_t> seed;
  std::string range = "0.3:1.2";
  double min_angle = 0.05;
  std::optional<double> tol;
  std::optional<double> tol_angle;
  std::optional<double> tol_length;
  std::optional<double> tol_inverse;
  unsigned workers = 1;
  std::string output;
  std::string format = "json";
};

int run_verify(const VerifyOptions& opt) {
  SweepConfig config;
  config.geometry = parse_geometry(opt.geometry);
  config.samples = opt.samples;
  config.seed = opt.seed ? *opt.seed : default_seed();
  config.domain = parse_range(opt.range, config.domain);
  config.domain.min_angle = opt.min_angle;
  config.workers = opt.workers;
  if (opt.tol) {
    config.tolerances.angle_identities = *opt.tol;
    config.tolerances.length_identities = *opt.tol;
    config.tolerances.inverse = *opt.tol;
  }
  if (opt.tol_angle) config.tolerances.angle_identities = *opt.tol_angle;
  if (opt.tol_length) config.tolerances.length_identities = *opt.tol_length;
  if (opt.tol_inverse) config.tolerances.inverse = *opt.tol_inverse;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  const SweepReport report = run_sweep(config);
  if (opt.format == "table") {
    write_output(opt.output, render_table(report));
  } else {
    write_output(opt.output, dump(to_json(report)));
    std::cerr << render_table(report);
  }
  return report.pass ? 0 : kExitDomain;
}

struct VolumeOptions {
  std::string input = "-";
  std::string output;
  int steps = 4096;
  bool check_gradient = false;
  double gradient_step = 1e-4;
};

int run_volume(const VolumeOptions& opt) {
  const TetraLengths x = load_valid(opt.input);
  if (!is_curved(x.geometry)) {
    throw DomainFailure("Schlaefli volume requires curved geometry; Euclidean volume is " +
                        json(euclidean_volume_cm(x)).dump() + " (Cayley-Menger)");
  }
  const VolumeResult v = volume_schlaefli(x, opt.steps);
  json doc = to_json(x);
  doc.update(to_json(v));
  bool pass = true;
  if (opt.check_gradient) {
    const GradientConvergence check = volume_gradient_convergence(x, opt.gradient_step);
    doc["gradient_check"] = to_json(check);
    pass = check.pass;
  }
  write_output(opt.output, dump(doc));
  return pass ? 0 : kExitDomain;
}

struct DualOptions {
  std::string input = "-";
  std::string output;
};

void run_dual(const DualOptions& opt) {
  const TetraLengths x = load_valid(opt.input);
  if (x.geometry != Geometry::Spherical) {
    throw DomainFailure("dual tetrahedron requires spherical geometry, got " + std::string(to_string(x.geometry)));
  }
  const auto [dx, da] = dual(x, curvature_map(x));
  json doc = to_json(dx);
  doc["angles"] = edge_values_to_json(da.a);
  write_output(opt.output, dump(doc));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral angles, curvature-map Jacobians and Schlaefli volumes of tetrahedra"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "dihedral angles of a tetrahedron");
  solve_cmd->add_option("input", solve.input, "tetrahedron JSON file ('-' for stdin)");
  solve_cmd->add_option("-o,--output", solve.output, "output path (default stdout)");

  JacobianOptions jac;
  auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian of the curvature map and its normalizations");
  jac_cmd->add_option("input", jac.input, "tetrahedron JSON file ('-' for stdin)");
  jac_cmd->add_option("-o,--output", jac.output, "output path (default stdout)");
  jac_cmd->add_option("--mode", jac.mode, "assembly mode")->check(CLI::IsMember({"direct", "minimal"}));
  jac_cmd->add_option("--format", jac.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  jac_cmd->add_flag("--fd-check", jac.fd_check, "compare with central finite differences");
  jac_cmd->add_option("--fd-step", jac.fd_step, "finite-difference step")->check(CLI::PositiveNumber);
  jac_cmd->add_flag("--p-matrix", jac.p, "also emit the angle-normalized matrix P");
  jac_cmd->add_flag("--r-matrix", jac.r, "also emit the length-normalized inverse R (curved only)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "random sweep over the Jacobian identities");
  verify_cmd->add_option("--geometry", verify.geometry, "spherical, euclidean or hyperbolic");
  verify_cmd->add_option("--samples", verify.samples, "number of random tetrahedra");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed (default $SCHLAFLI_SEED, else 42)");
  verify_cmd->add_option("--range", verify.range, "length range lo:hi");
  verify_cmd->add_option("--min-angle", verify.min_angle, "reject samples with a face or dihedral angle this close to 0 or pi");
  verify_cmd->add_option("--tol", verify.tol, "set every tolerance");
  verify_cmd->add_option("--tol-angle", verify.tol_angle, "tolerance for the P-matrix identities");
  verify_cmd->add_option("--tol-length", verify.tol_length, "tolerance for the R-matrix identities");
  verify_cmd->add_option("--tol-inverse", verify.tol_inverse, "tolerance for |J J^-1 - I|");
  verify_cmd->add_option("--workers", verify.workers, "worker threads (0 = hardware)");
  verify_cmd->add_option("-o,--output", verify.output, "output path (default stdout)");
  verify_cmd->add_option("--format", verify.format, "json (table on stderr) or table")
      ->check(CLI::IsMember({"json", "table"}));

  VolumeOptions volume;
  auto* volume_cmd = app.add_subcommand("volume", "volume by integrating the Schlaefli form");
  volume_cmd->add_option("input", volume.input, "tetrahedron JSON file ('-' for stdin)");
  volume_cmd->add_option("-o,--output", volume.output, "output path (default stdout)");
  volume_cmd->add_option("--steps", volume.steps, "quadrature panels (even)")->check(CLI::PositiveNumber);
  volume_cmd->add_flag("--check-gradient", volume.check_gradient, "finite-difference check of dV/da = lambda x / 2");
  volume_cmd->add_option("--gradient-step", volume.gradient_step, "length perturbation for the gradient check")
      ->check(CLI::PositiveNumber);

  DualOptions dual_opt;
  auto* dual_cmd = app.add_subcommand("dual", "polar dual of a spherical tetrahedron");
  dual_cmd->add_option("input", dual_opt.input, "tetrahedron JSON file ('-' for stdin)");
  dual_cmd->add_option("-o,--output", dual_opt.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) run_solve(solve);
    if (*jac_cmd) run_jacobian(jac);
    if (*verify_cmd) return run_verify(verify);
    if (*volume_cmd) return run_volume(volume);
    if (*dual_cmd) run_dual(dual_opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
