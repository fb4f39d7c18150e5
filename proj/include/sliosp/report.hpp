#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sliosp/problem.hpp"
#include "sliosp/reconstruct.hpp"

namespace sliosp {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  ProblemSpec spec;
  int grid_n = 8192;
  double tol = 1e-10;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::Csv;
};

RunConfig validate(const RunConfig& config);

/// Full verification record: formula error vs directly integrated error,
/// recovered eigenvalue and the integration diagnostics.
struct ErrorReport {
  std::string regime;
  int epsilon = 0;
  double a_m = 0.0;
  double k = 0.0;
  double error_formula = 0.0;
  double error_direct = 0.0;
  double lambda_recovered = 0.0;
  double eig_residual = 0.0;  // |lambda_m(q_hat) - lambda_star| / max(1, |lambda_star|)
  double conservation_residual = 0.0;
};

/// Reconstructs via the ODE path, closes the loop through the independent
/// Prüfer eigensolver and evaluates both error routes.
ErrorReport build_report(const ProblemSpec& spec, int grid_n = 8192,
                         double eig_tol = 1e-10);

std::string to_json(const ErrorReport& report);  // versioned with "schema": 1

/// Shortest-width fixed formatting used by every CSV/JSON emitter:
/// 17 significant digits, enough for doubles to round-trip.
std::string format_double(double v);

void write_profile_csv(std::ostream& os, const PotentialProfile& profile);

}  // namespace sliosp
