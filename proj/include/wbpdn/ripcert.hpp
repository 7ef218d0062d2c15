#pragma once

#include <cstdint>

#include "wbpdn/bounds.hpp"
#include "wbpdn/model.hpp"

namespace wbpdn {

inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

/// Exact restricted isometry constant of A at a (possibly fractional)
/// order. delta = max over column subsets S of size ceil(order) of
/// max(sigma_max(A_S)^2 - 1, 1 - sigma_min(A_S)^2).
struct RicEstimate {
  double order = 0.0;      // as requested
  int effective_order = 0; // ceil(order)
  double delta = 0.0;
  bool exceeds_one = false; // delta >= 1 (degenerate matrix)
  IndexSet extremal_subset; // lexicographically smallest attaining subset
};

/// Number of size-r column subsets, saturating at uint64 max.
std::uint64_t subset_count(int n, int r);

/// ceil with a 1e-9 snap so orders like 2.0 stored inexactly stay at 2.
int effective_order(double order);

/// Exhaustive enumeration; throws ResourceError (naming the subset count)
/// when C(n, ceil(order)) exceeds cap.
RicEstimate ric_exact(const Matrix& A, double order, std::uint64_t cap = kDefaultSubsetCap);

/// The sharp recovery condition delta_{tk} < sqrt((t-d)/(t-d+theta^2)).
struct RipCondition {
  double t = 0.0;
  double d = 0.0;
  double theta = 0.0;
  double threshold = 0.0;
  double delta = 0.0;
  bool satisfied = false; // strict comparison delta < threshold
  double margin = 0.0;    // threshold - delta
  RicEstimate ric;
};

/// Certifies the condition for A at sparsity k with prior-derived (d, theta).
/// alpha and rho are taken from the prior's realized sets.
RipCondition check_condition(const Matrix& A, int k, double t, const SupportPrior& prior,
                             double w, std::uint64_t cap = kDefaultSubsetCap);

} // namespace wbpdn
