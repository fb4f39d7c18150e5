// sl-iosp: command-line driver for the inverse optimization spectral problem
// with constant prior potential.  Exit codes: 0 success, 1 verification
// failure, 2 invalid input, 3 numerical nonconvergence.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sliosp/error_function.hpp"
#include "sliosp/errors.hpp"
#include "sliosp/forward.hpp"
#include "sliosp/kernels.hpp"
#include "sliosp/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNoConvergence = 3;

struct SpecFlags {
  double q0 = 0.0;
  double lambda_star = 0.0;
  int m = 1;
  double p = 2.0;

  sliosp::ProblemSpec spec() const {
    return sliosp::validate(sliosp::ProblemSpec{q0, lambda_star, m, p});
  }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  cmd->add_option("--q0", flags.q0, "constant prior potential")->required();
  cmd->add_option("--lambda-star", flags.lambda_star,
                  "target m-th Dirichlet eigenvalue")->required();
  cmd->add_option("--m", flags.m, "eigenvalue index (>= 1)")->required();
  cmd->add_option("--p", flags.p, "Lp exponent, finite, > 1")->required();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// --config <path> points at a flat key=value file mirroring the long flag
// names; keys already given on the command line are skipped, so explicit
// flags win on conflict.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  std::vector<std::string> expanded = args;
  if (path.empty()) return expanded;
  std::ifstream file(path);
  if (!file) {
    throw sliosp::Error(sliosp::ErrorKind::DomainError,
                        "cannot read config file: " + path);
  }
  std::string line;
  while (std::getline(file, line)) {
    const std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#') continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw sliosp::Error(sliosp::ErrorKind::DomainError,
                          "config line is not key=value: " + entry);
    }
    const std::string flag = "--" + trim(entry.substr(0, eq));
    const bool given = std::any_of(
        args.begin(), args.end(), [&flag](const std::string& a) {
          return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    if (given) continue;
    expanded.push_back(flag);
    expanded.push_back(trim(entry.substr(eq + 1)));
  }
  return expanded;
}

std::vector<double> linear_grid(double x_min, double x_max, int steps) {
  if (steps < 1) {
    throw sliosp::Error(sliosp::ErrorKind::DomainError, "steps must be >= 1");
  }
  std::vector<double> xs(steps);
  if (steps == 1) {
    xs[0] = x_min;
    return xs;
  }
  for (int i = 0; i < steps; ++i) {
    xs[i] = x_min + i * (x_max - x_min) / (steps - 1);
  }
  return xs;
}

struct SweepRow {
  double gap = 0.0;
  std::optional<double> error;
};

// independent point evaluations mapped over a worker pool; results are
// collected in input order so the output is byte-identical for any job count
std::vector<SweepRow> run_sweep(const std::vector<double>& xs, int m, double p,
                                int jobs) {
  std::vector<SweepRow> rows(xs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= xs.size()) return;
      rows[i].gap = xs[i];
      try {
        rows[i].error = sliosp::z_m(xs[i], m, p);
      } catch (const sliosp::Error&) {
        rows[i].error = std::nullopt;
      }
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs - 1);
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

std::ostream& open_sink(const std::optional<std::string>& path,
                        std::ofstream& file) {
  if (!path) return std::cout;
  file.open(*path);
  if (!file) {
    throw sliosp::Error(sliosp::ErrorKind::DomainError,
                        "cannot open output file: " + *path);
  }
  return file;
}

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inverse optimization spectral problem solver "
               "(Dirichlet Sturm-Liouville, constant prior)"};
  app.require_subcommand(1);

  SpecFlags flags;
  std::string config_path;
  int grid_n = 8192;
  std::string method = "auto";
  std::optional<std::string> output_path;
  bool report_flag = false;
  double eig_tol = 1e-4;
  double norm_tol = 1e-5;
  double x_min = 0.0, x_max = 0.0;
  int steps = 25;
  int sweep_m = 1;
  double sweep_p = 2.0;
  int jobs = default_jobs();
  double dilation_threshold = 1e-7;

  auto* classify_cmd = app.add_subcommand("classify", "regime and epsilon of one instance");
  add_spec_flags(classify_cmd, flags);

  auto* amplitude_cmd = app.add_subcommand("amplitude", "amplitude a_m and first-integral constant k");
  add_spec_flags(amplitude_cmd, flags);

  auto* error_cmd = app.add_subcommand("error", "minimal reconstruction error ||q_hat - q0||_Lp");
  add_spec_flags(error_cmd, flags);
  error_cmd->add_flag("--report", report_flag, "emit the full JSON report");
  error_cmd->add_option("--grid", grid_n, "grid intervals for the report path");

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "write the reconstructed potential as CSV");
  add_spec_flags(reconstruct_cmd, flags);
  reconstruct_cmd->add_option("--grid", grid_n, "grid intervals (>= 256)");
  reconstruct_cmd->add_option("--method", method, "auto | ode | closed-form")
      ->check(CLI::IsMember({"auto", "ode", "closed-form"}));
  reconstruct_cmd->add_option("--output,-o", output_path, "output CSV path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "round-trip verification via the forward eigensolver");
  add_spec_flags(verify_cmd, flags);
  verify_cmd->add_option("--grid", grid_n, "grid intervals (>= 256)");
  verify_cmd->add_option("--eig-tol", eig_tol, "relative eigenvalue residual threshold");
  verify_cmd->add_option("--norm-tol", norm_tol, "formula-vs-direct norm threshold");

  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate the error over a gap grid, CSV output");
  sweep_cmd->add_option("--x-min", x_min, "first gap value")->required();
  sweep_cmd->add_option("--x-max", x_max, "last gap value")->required();
  sweep_cmd->add_option("--steps", steps, "number of grid points")->required();
  sweep_cmd->add_option("--m", sweep_m, "eigenvalue index")->required();
  sweep_cmd->add_option("--p", sweep_p, "Lp exponent")->required();
  sweep_cmd->add_option("--jobs", jobs, "worker pool size")->envname("SL_IOSP_JOBS");
  sweep_cmd->add_option("--output,-o", output_path, "output CSV path (default stdout)");

  auto* dilation_cmd = app.add_subcommand("dilation", "max dilation-identity residual over a gap grid");
  dilation_cmd->add_option("--m", sweep_m, "eigenvalue index")->required();
  dilation_cmd->add_option("--p", sweep_p, "Lp exponent")->required();
  dilation_cmd->add_option("--x-min", x_min, "first gap value")->required();
  dilation_cmd->add_option("--x-max", x_max, "last gap value")->required();
  dilation_cmd->add_option("--steps", steps, "number of grid points");
  dilation_cmd->add_option("--threshold", dilation_threshold, "pass/fail residual bound");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--config", config_path,
                    "flat key=value file mirroring flag names");
  }

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args);
    std::vector<const char*> cargs;
    cargs.push_back(argv[0]);
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  } catch (const sliosp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*classify_cmd) {
      const auto rc = sliosp::classify(flags.spec());
      const char* eps = rc.epsilon > 0 ? "+1" : (rc.epsilon < 0 ? "-1" : "0");
      std::cout << sliosp::regime_name(rc.regime) << ", epsilon=" << eps
                << ", gap=" << sliosp::format_double(rc.gap) << "\n";
      return kExitOk;
    }

    if (*amplitude_cmd) {
      const auto amp = sliosp::invert_v(flags.spec());
      std::cout << "a_m=" << sliosp::format_double(amp.a_m)
                << " k=" << sliosp::format_double(amp.k)
                << " bracket=[" << sliosp::format_double(amp.bracket_lo) << ","
                << sliosp::format_double(amp.bracket_hi) << "]"
                << " iterations=" << amp.iterations << "\n";
      return kExitOk;
    }

    if (*error_cmd) {
      const auto spec = flags.spec();
      if (report_flag) {
        std::cout << sliosp::to_json(sliosp::build_report(spec, grid_n)) << "\n";
      } else {
        const auto rc = sliosp::classify(spec);
        std::cout << sliosp::format_double(sliosp::z_m(rc.gap, spec.m, spec.p))
                  << "\n";
      }
      return kExitOk;
    }

    if (*reconstruct_cmd) {
      const auto spec = flags.spec();
      sliosp::ReconstructMethod rm = sliosp::ReconstructMethod::Auto;
      if (method == "ode") rm = sliosp::ReconstructMethod::Ode;
      if (method == "closed-form") rm = sliosp::ReconstructMethod::ClosedForm;
      const auto prof = sliosp::reconstruct(spec, grid_n, rm);
      std::ofstream file;
      sliosp::write_profile_csv(open_sink(output_path, file), prof);
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto spec = flags.spec();
      const auto report = sliosp::build_report(spec, grid_n);
      std::cout << sliosp::to_json(report) << "\n";
      const bool eig_ok = report.eig_residual <= eig_tol;
      const bool norm_ok =
          std::abs(report.error_formula - report.error_direct) <=
          norm_tol * std::max(1.0, report.error_formula);
      return (eig_ok && norm_ok) ? kExitOk : kExitVerificationFailed;
    }

    if (*sweep_cmd) {
      sliosp::validate(sliosp::ProblemSpec{0.0, 0.0, sweep_m, sweep_p});
      const auto rows = run_sweep(linear_grid(x_min, x_max, steps), sweep_m,
                                  sweep_p, jobs);
      std::ofstream file;
      std::ostream& os = open_sink(output_path, file);
      os << "gap,error_lp\n";
      bool any_failed = false;
      for (const auto& row : rows) {
        os << sliosp::format_double(row.gap) << ',';
        if (row.error) {
          os << sliosp::format_double(*row.error);
        } else {
          any_failed = true;
        }
        os << '\n';
      }
      return any_failed ? kExitVerificationFailed : kExitOk;
    }

    if (*dilation_cmd) {
      sliosp::validate(sliosp::ProblemSpec{0.0, 0.0, sweep_m, sweep_p});
      double max_resid = 0.0;
      for (double x : linear_grid(x_min, x_max, steps)) {
        max_resid = std::max(max_resid,
                             std::abs(sliosp::dilation_residual(x, sweep_m, sweep_p)));
      }
      std::cout << sliosp::format_double(max_resid) << "\n";
      return max_resid < dilation_threshold ? kExitOk : kExitVerificationFailed;
    }
  } catch (const sliosp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.invalid_input() ? kExitInvalidInput : kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}
