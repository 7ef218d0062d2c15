#pragma once

#include <map>
#include <string>

#include "wbpdn/model.hpp"

namespace wbpdn {

/// Scalars determined by (t, w, alpha, rho):
///   d     = 1 - alpha*rho + max(alpha, 1-alpha)*rho  (exactly 1 when w = 1)
///   theta = w + (1-w) sqrt(1 + rho - 2 alpha rho)
///   r     = sqrt(t - d),  r1 = sqrt(t - 1)
struct GeometryParams {
  double t = 0.0;
  double w = 1.0;
  double alpha = 0.0;
  double rho = 0.0;
  double d = 1.0;
  double theta = 1.0;
  double r = 0.0;
  double r1 = 0.0;
};

double compute_d(double w, double alpha, double rho);
double compute_theta(double w, double alpha, double rho);

/// Requires t > d (and hence t > 1 since d >= 1).
GeometryParams make_geometry(double t, double w, double alpha, double rho);

/// RIC recovery threshold sqrt((t-d)/(t-d+theta^2)); requires t > d >= 1,
/// theta >= 0. Equals 1 when theta = 0.
double condition_threshold(double t, double d, double theta);

/// Compressibility term eta = w ||x_{E^c}||_1 + (1-w) ||x_{K^c ∩ E^c}||_1;
/// zero for exactly k-sparse signals.
double compute_eta(const Vector& truth, const SupportPrior& prior, double w);

struct BetaPair {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta1_sharp = 0.0;
  double beta2_sharp = 0.0;
  double delta = 0.0;
};

/// beta1 = 2/((1-delta) sqrt(1+delta)), beta2 = delta/sqrt(1-delta^2);
/// requires 0 <= delta < 1. Sharp bounds are left NaN (see beta_sharp_bounds).
BetaPair compute_betas(double delta);

/// (beta1_sharp, beta2_sharp): the suprema of beta1, beta2 over deltas
/// admissible under the recovery condition. Requires t > d and theta > 0.
std::pair<double, double> beta_sharp_bounds(double t, double d, double theta);

struct FPolynomials {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
};

/// f1 = theta sqrt(d) b^2 + r (sqrt(d) + 2 theta) b + (2+theta) r r1
/// f2 = sqrt(d) b^2 + 2 (r + r1) b + r r1
/// f3 = 2 (r sqrt(d) - theta (r1 - r)) b + (4+theta) r r1
FPolynomials f_polynomials(double beta2, const GeometryParams& geom);

struct BoundConstants {
  GeometryParams geom;
  double delta = 0.0;
  double threshold = 0.0;
  BetaPair betas;
  FPolynomials f;
  double eta = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  double bound_value = 0.0; // C1 * eta + C2
};

/// Error-bound constants of the recovery theorem, assembled exactly as
/// displayed:
///   C1 = (2 sqrt(k) b1 f1 lam + 2 f2 eps) / (r sqrt(k) (r - th b2)(th sqrt(k) b1 lam + eps))
///   C2 = (sqrt(k) b1 f3 lam + (sqrt(d) b2^2 + f2) eps) (th sqrt(k) b1 lam + eps)
///        / (r1 sqrt(k) (r - th b2) lam)
/// Geometry uses the (alpha, rho) realized by the prior's sets. Throws
/// CertificateError when the recovery condition delta < threshold fails.
BoundConstants theorem_bound(const ProblemInstance& inst, double t, double delta);

/// Closed-form special cases of the error estimate. case_id: 1 (lambda = eps),
/// 2 (lambda = eps/sqrt(k)), 3 (eps = 0). Not applicable when theta = 0 (the
/// case constants divide by theta).
struct CaseEstimate {
  int case_id = 0;
  bool applicable = false;
  std::map<std::string, double> constants;
  double bound_value = 0.0;
};

CaseEstimate case_estimate(int case_id, const ProblemInstance& inst, double t, double delta);

} // namespace wbpdn
