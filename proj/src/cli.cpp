#include "gpssvs/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpssvs/errors.hpp"
#include "gpssvs/io.hpp"
#include "gpssvs/observables.hpp"
#include "gpssvs/verify.hpp"
#include "gpssvs/wigner.hpp"

namespace gpssvs::cli {

namespace {

struct RunConfig {
  std::string f = "harmonic";
  double pt_lambda = 1.5;
  double pt_kappa = 1.5;
  std::string custom_file;
  std::optional<double> r;
  double theta = 0.0;
  unsigned m = 0;
  std::string parity = "even";
  std::vector<std::string> sweeps;
  std::string grid = "-3:3:121";
  double tol = 1e-12;
  std::size_t nmax = 100000;
  std::size_t oracle_dim = 80;
  std::string out;
  std::string format = "csv";
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_range(const std::string& text, const std::string& what) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string piece; std::getline(ss, piece, ':');) parts.push_back(piece);
  if (parts.size() != 3) throw UsageError(what + " must look like start:stop:count, got '" + text + "'");
  try {
    std::size_t used = 0;
    const double lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("");
    const double hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("");
    const long count = std::stol(parts[2], &used);
    if (used != parts[2].size() || count < 1) throw std::invalid_argument("");
    std::vector<double> v(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i)
      v[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError(what + ": cannot parse '" + text + "'");
  }
}

AxisRange parse_axis(const std::string& text) {
  const auto v = parse_range(text, "--grid");
  if (v.size() < 2) throw UsageError("--grid needs at least 2 nodes per axis");
  return {v.front(), v.back(), v.size()};
}

Parity parse_parity(const std::string& p) { return p == "odd" ? Parity::odd : Parity::even; }

Nonlinearity make_nonlinearity(const RunConfig& c) {
  if (c.f == "harmonic") return Nonlinearity::harmonic();
  if (c.f == "poschl-teller") return Nonlinearity::poschl_teller(c.pt_lambda, c.pt_kappa);
  if (c.custom_file.empty()) throw UsageError("--f custom needs --custom-file");
  return Nonlinearity::custom(io::read_custom_table(c.custom_file));
}

SeriesOptions series_options(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  if (c.nmax < 1) throw UsageError("--nmax must be at least 1");
  return {c.tol, c.nmax};
}

double require_r(const RunConfig& c) {
  if (!c.r) throw UsageError("--r is required");
  return *c.r;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open '" + c.out + "' for writing");
  f << text;
  if (!f.flush()) throw std::ios_base::failure("failed writing '" + c.out + "'");
}

int cmd_state(const RunConfig& c) {
  if (!c.sweeps.empty()) throw UsageError("state does not take --sweep");
  if (c.format == "matrix") throw UsageError("--format matrix applies to wigner only");
  const auto st = pssvs(make_nonlinearity(c),
                        SqueezeSpec(require_r(c), c.theta, c.m, parse_parity(c.parity)),
                        series_options(c));
  std::ostringstream os;
  if (c.format == "json")
    io::write_state_json(os, st);
  else
    io::write_state_csv(os, st);
  emit(c, os.str());
  return 0;
}

int cmd_observables(const RunConfig& c, const std::vector<Quantity>& quantities) {
  if (c.format == "matrix") throw UsageError("--format matrix applies to wigner only");
  const Nonlinearity nl = make_nonlinearity(c);
  const SeriesOptions opts = series_options(c);
  SweepAxes axes;
  axes.parity = {parse_parity(c.parity)};
  bool swept_r = false, swept_theta = false, swept_m = false;
  for (const std::string& s : c.sweeps) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--sweep must look like axis=start:stop:count");
    const std::string axis = s.substr(0, eq);
    const auto values = parse_range(s.substr(eq + 1), "--sweep " + axis);
    if (axis == "r" && !swept_r) {
      axes.r = values;
      swept_r = true;
    } else if (axis == "theta" && !swept_theta) {
      axes.theta = values;
      swept_theta = true;
    } else if (axis == "m" && !swept_m) {
      for (double v : values) {
        if (v < 0.0 || v != std::floor(v)) throw UsageError("--sweep m needs integer values");
        axes.m.push_back(static_cast<unsigned>(v));
      }
      swept_m = true;
    } else {
      throw UsageError("--sweep axis must be one of r, theta, m (each at most once), got '" + axis + "'");
    }
  }
  if (!swept_r) axes.r = {require_r(c)};
  if (!swept_theta) axes.theta = {c.theta};
  if (!swept_m) axes.m = {c.m};

  const bool single = c.sweeps.empty();
  if (single) {
    // A lone point reports failures through the exit code instead of a status column.
    const auto st = pssvs(nl, SqueezeSpec(axes.r[0], axes.theta[0], axes.m[0], axes.parity[0]), opts);
    if (quantities.front() == Quantity::var_x)
      (void)quadrature_report(st);
    else
      (void)number_stats(st);
  }
  const auto rows = sweep(nl, axes, quantities, opts);
  std::ostringstream os;
  if (c.format == "json")
    io::write_sweep_json(os, nl, rows);
  else
    io::write_sweep_csv(os, rows);
  emit(c, os.str());
  return 0;
}

int cmd_wigner(const RunConfig& c) {
  if (!c.sweeps.empty()) throw UsageError("wigner does not take --sweep");
  const auto comma = c.grid.find(',');
  const AxisRange x = parse_axis(c.grid.substr(0, comma));
  const AxisRange p = comma == std::string::npos ? x : parse_axis(c.grid.substr(comma + 1));
  const auto st = pssvs(make_nonlinearity(c),
                        SqueezeSpec(require_r(c), c.theta, c.m, parse_parity(c.parity)),
                        series_options(c));
  const WignerGrid g = wigner_grid(st, x, p);
  std::ostringstream os;
  if (c.format == "json")
    io::write_wigner_json(os, g);
  else if (c.format == "matrix")
    io::write_wigner_matrix(os, g);
  else
    io::write_wigner_csv(os, g);
  emit(c, os.str());
  if (!c.out.empty() && c.format != "json") {
    std::ostringstream meta;
    io::write_wigner_sidecar(meta, g);
    RunConfig side = c;
    side.out = c.out + ".json";
    emit(side, meta.str());
  }
  return 0;
}

int cmd_verify(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  VerifyOptions opts{c.tol, c.oracle_dim, c.nmax};
  const auto checks = run_verification(opts);
  std::ostringstream os;
  write_verification_json(os, opts, checks);
  emit(c, os.str());
  std::size_t failed = 0;
  for (const CheckResult& k : checks)
    if (!k.pass) {
      ++failed;
      std::cerr << "FAIL " << k.name << " [" << k.domain << "]";
      if (!k.error.empty())
        std::cerr << ": " << k.error;
      else
        std::cerr << ": residual " << io::format_double(k.residual) << " vs " << k.relation << ' '
                  << io::format_double(k.tolerance);
      std::cerr << '\n';
    }
  std::cerr << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  return failed == 0 ? 0 : 4;
}

void add_model_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--f", c.f, "Deformation: harmonic, poschl-teller or custom")
      ->check(CLI::IsMember({"harmonic", "poschl-teller", "custom"}));
  sub->add_option("--pt-lambda", c.pt_lambda, "Poschl-Teller lambda (>= 0.5)");
  sub->add_option("--pt-kappa", c.pt_kappa, "Poschl-Teller kappa (>= 0.5)");
  sub->add_option("--custom-file", c.custom_file, "Table of f(1), f(2), ... for --f custom");
  sub->add_option("--r", c.r, "Squeezing magnitude");
  sub->add_option("--theta", c.theta, "Squeezing phase");
  sub->add_option("--m", c.m, "Photon-pair subtraction index");
  sub->add_option("--parity", c.parity, "even subtracts 2m photons, odd 2m+1")
      ->check(CLI::IsMember({"even", "odd"}));
  sub->add_option("--tol", c.tol, "Series tail tolerance");
  sub->add_option("--nmax", c.nmax, "Cap on retained series terms");
  sub->add_option("--out", c.out, "Output path (stdout when omitted)");
  sub->add_option("--format", c.format, "csv, json or matrix (wigner only)")
      ->check(CLI::IsMember({"csv", "json", "matrix"}));
}

}  // namespace

int run(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Generalized photon-subtracted squeezed vacuum states"};
  app.name("gpssvs");
  app.require_subcommand(1);

  auto* state = app.add_subcommand("state", "Fock coefficients of one state");
  add_model_flags(state, cfg);

  auto* quad = app.add_subcommand("quadratures", "var_x, var_p and the Robertson bound");
  add_model_flags(quad, cfg);
  quad->add_option("--sweep", cfg.sweeps, "axis=start:stop:count, axis in r, theta, m");

  auto* num = app.add_subcommand("number-squeezing", "N_s and the Mandel parameter");
  add_model_flags(num, cfg);
  num->add_option("--sweep", cfg.sweeps, "axis=start:stop:count, axis in r, theta, m");

  auto* wig = app.add_subcommand("wigner", "Wigner function on a phase-space grid");
  add_model_flags(wig, cfg);
  wig->add_option("--grid", cfg.grid, "xmin:xmax:n[,pmin:pmax:n]");

  auto* ver = app.add_subcommand("verify", "Cross-check every closed form against the oracles");
  ver->add_option("--tol", cfg.tol, "Residual floor; also loosens the series tolerance");
  ver->add_option("--oracle-dim", cfg.oracle_dim, "Fock dimension of the dense oracle");
  ver->add_option("--nmax", cfg.nmax, "Cap on retained series terms");
  ver->add_option("--out", cfg.out, "Report path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (state->parsed()) return cmd_state(cfg);
    if (quad->parsed())
      return cmd_observables(cfg, {Quantity::var_x, Quantity::var_p, Quantity::robertson_rhs});
    if (num->parsed()) return cmd_observables(cfg, {Quantity::n_squeeze, Quantity::mandel_q});
    if (wig->parsed()) return cmd_wigner(cfg);
    return cmd_verify(cfg);
  } catch (const AnnihilatedStateError& e) {
    std::cerr << "annihilated state: " << e.what() << '\n';
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return 3;
  } catch (const TruncationError& e) {
    std::cerr << "truncation: " << e.what() << '\n';
    return 3;
  } catch (const DimensionError& e) {
    std::cerr << "truncation: " << e.what() << '\n';
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace gpssvs::cli
