#pragma once

#include <span>

#include "focksim/dynamics.hpp"
#include "focksim/fock.hpp"

namespace focksim {

enum class VerdictKind { Increased, Decreased, Flat };

/// Endpoint comparison of an entropy series: Flat within tolerance,
/// otherwise the sign of s_final - s_initial decides.
struct Verdict {
  VerdictKind kind = VerdictKind::Flat;
  double s_initial = 0.0;
  double s_final = 0.0;
  double tolerance = 0.0;
};

enum class Trend { NonIncreasing, NonDecreasing, Mixed, Flat };

const char* to_string(VerdictKind kind);
const char* to_string(Trend trend);

/// Sum(w_i a_i) / Sum(w_i). Weights must be nonnegative with positive total;
/// computed in min-shifted form so an all-equal value list is returned
/// exactly and the result cannot undershoot the minimum.
double weighted_mean(std::span<const double> values,
                     std::span<const double> weights);

/// min(values) - 1e-12 <= weighted_mean <= max(values) + 1e-12. True for
/// every valid input; exists as an executable property and a guard.
bool mean_bounds_check(std::span<const double> values,
                       std::span<const double> weights);

struct JensenPair {
  double entropy = 0.0;  // Tr(rho S)
  double bound = 0.0;    // ln(<N> + 1/2) >= entropy by concavity
};

/// Entropy expectation together with its concavity bound.
JensenPair jensen_bound(const DensityMatrix& rho);

/// Classify successive deltas of a series against a tolerance band.
Trend monotonicity_verdict(std::span<const double> series, double tolerance);

/// Verdict from the first and last entropy samples of a trajectory.
Verdict endpoint_verdict(const Trajectory& trajectory, double tolerance);

/// -Sum(lambda ln lambda) over the state's spectrum, 0 ln 0 := 0.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace focksim
