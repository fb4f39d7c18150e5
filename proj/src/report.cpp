#include "sliosp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "sliosp/error_function.hpp"
#include "sliosp/errors.hpp"
#include "sliosp/forward.hpp"

namespace sliosp {

RunConfig validate(const RunConfig& config) {
  validate(config.spec);
  if (config.grid_n < 256) {
    throw Error(ErrorKind::DomainError, "grid_n must be >= 256");
  }
  if (!(config.tol > 0.0) || !(config.tol < 1e-2)) {
    throw Error(ErrorKind::DomainError, "tol must lie in (0, 1e-2)");
  }
  return config;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ErrorReport build_report(const ProblemSpec& spec, int grid_n, double eig_tol) {
  validate(spec);
  const RegimeClass rc = classify(spec);
  const PotentialProfile prof = reconstruct(spec, grid_n, ReconstructMethod::Ode);

  ErrorReport report;
  report.regime = regime_name(rc.regime);
  report.epsilon = rc.epsilon;
  report.a_m = prof.amplitude.a_m;
  report.k = prof.amplitude.k;
  report.error_formula = z_m(rc.gap, spec.m, spec.p);
  report.error_direct = lp_norm_direct(prof);
  SampledPotential q{prof.n, prof.q_hat};
  report.lambda_recovered = eigenvalue(q, spec.m, eig_tol);
  report.eig_residual = std::abs(report.lambda_recovered - spec.lambda_star) /
                        std::max(1.0, std::abs(spec.lambda_star));
  report.conservation_residual = prof.conservation_residual;
  return report;
}

std::string to_json(const ErrorReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["regime"] = report.regime;
  j["epsilon"] = report.epsilon;
  j["a_m"] = report.a_m;
  j["k"] = report.k;
  j["error_formula"] = report.error_formula;
  j["error_direct"] = report.error_direct;
  j["lambda_recovered"] = report.lambda_recovered;
  j["eig_residual"] = report.eig_residual;
  j["conservation_residual"] = report.conservation_residual;
  return j.dump(2);
}

void write_profile_csv(std::ostream& os, const PotentialProfile& profile) {
  os << "x,u,q_hat\n";
  for (int i = 0; i <= profile.n; ++i) {
    os << format_double(profile.x[i]) << ',' << format_double(profile.u[i])
       << ',' << format_double(profile.q_hat[i]) << '\n';
  }
}

}  // namespace sliosp
