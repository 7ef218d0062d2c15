#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbpdn/errors.hpp"

namespace wbpdn {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Index sets are 0-based and strictly increasing internally; all file formats
// and CLI outputs use 1-based indices.
using IndexSet = std::vector<int>;

/// Binary weight vector: weights_i = w on the estimate set K, 1 elsewhere.
struct WeightProfile {
  Vector weights;
  double w = 1.0;
  IndexSet source_set;
};

/// Measurement model b = A x + z with ||z||_2 <= noise_bound.
struct MeasurementEnsemble {
  Matrix matrix;
  Vector observation;
  double noise_bound = 0.0;
  std::optional<Vector> noise;

  int m() const { return static_cast<int>(matrix.rows()); }
  int n() const { return static_cast<int>(matrix.cols()); }
};

/// Partially known support information: an estimate set K of size rho*k whose
/// overlap with the true top-k support E is alpha*rho*k.
struct SupportPrior {
  IndexSet estimate_set; // K
  IndexSet true_support; // E
  int k = 0;
  double rho = 0.0;   // requested |K|/k (sets realize round_half_up(rho*k))
  double alpha = 0.0; // requested |E ∩ K|/|K|
};

enum class Amplitude { rademacher, gaussian };
enum class MatrixKind { gaussian, near_orthogonal };

std::string to_string(Amplitude a);
std::string to_string(MatrixKind m);
Amplitude amplitude_from_string(const std::string& s);
MatrixKind matrix_kind_from_string(const std::string& s);

/// Shape parameters of a generated instance. Together with a seed they
/// determine the instance bit-exactly.
struct GenSpec {
  int m = 0;
  int n = 0;
  int k = 0;
  double rho = 1.0;
  double alpha = 1.0;
  double w = 1.0;
  double lambda = 0.1;
  double noise_bound = 0.0;
  Amplitude amplitude = Amplitude::rademacher;
  MatrixKind matrix_kind = MatrixKind::gaussian;
  double ortho_mix = 0.5; // near_orthogonal only: blend toward the tight frame
};

struct ProblemInstance {
  MeasurementEnsemble ensemble;
  Vector truth;
  SupportPrior prior;
  WeightProfile profile;
  double lambda = 1.0;
  std::uint64_t seed = 0;
  GenSpec shape; // echo of the generator arguments, when generated

  int m() const { return ensemble.m(); }
  int n() const { return ensemble.n(); }
  int k() const { return prior.k; }
};

/// Round half away from zero toward +inf (round-half-up), e.g. 2.5 -> 3.
int round_half_up(double x);

WeightProfile build_weights(const IndexSet& K, double w, int n);

double weighted_l1_norm(const Vector& x, const WeightProfile& profile);

/// Best s-term approximation: zero all but the s largest-magnitude entries.
/// Ties are broken by keeping the lowest index. Returns the approximation and
/// the retained index set (ascending).
std::pair<Vector, IndexSet> best_k_term(const Vector& x, int s);

/// ||x||_{w,1} + (1/(2 lambda)) ||b - A x||_2^2
double objective_value(const Vector& x, const ProblemInstance& inst);

/// (rho, alpha) realized by the sets: rho = |K|/k, alpha = |E ∩ K|/|K|
/// (alpha = 0 by convention when K is empty).
std::pair<double, double> support_overlap_stats(const IndexSet& E, const IndexSet& K, int k);

/// Reproducible random instance: A Gaussian with entry variance 1/m (or the
/// near-orthogonal blend), exactly k-sparse truth, K sampled to realize
/// (rho, alpha) under round-half-up, noise drawn exactly on the eps-sphere.
ProblemInstance generate_instance(const GenSpec& spec, std::uint64_t seed);

// Set helpers shared by bounds and harness.
IndexSet set_complement(const IndexSet& s, int n);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
double l1_norm_on(const Vector& x, const IndexSet& s);
Vector restrict_to(const Vector& x, const IndexSet& s);

} // namespace wbpdn
