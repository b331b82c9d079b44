#include "focksim/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace focksim {

namespace {

void check_weights(std::span<const double> values,
                   std::span<const double> weights) {
  if (values.empty() || values.size() != weights.size())
    throw ShapeError("weighted_mean: need equally sized, nonempty inputs");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::domain_error("weighted_mean: negative weight");
    total += w;
  }
  if (total <= 0.0)
    throw DegenerateWeightsError("weighted_mean: all weights are zero");
}

}  // namespace

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Increased: return "Increased";
    case VerdictKind::Decreased: return "Decreased";
    case VerdictKind::Flat: return "Flat";
  }
  return "?";
}

const char* to_string(Trend trend) {
  switch (trend) {
    case Trend::NonIncreasing: return "NonIncreasing";
    case Trend::NonDecreasing: return "NonDecreasing";
    case Trend::Mixed: return "Mixed";
    case Trend::Flat: return "Flat";
  }
  return "?";
}

double weighted_mean(std::span<const double> values,
                     std::span<const double> weights) {
  check_weights(values, weights);
  const double lo = *std::min_element(values.begin(), values.end());
  double shifted = 0.0, total = 0.0;
  for (size_t i = 0; i < values.size(); ++i) {
    shifted += weights[i] * (values[i] - lo);
    total += weights[i];
  }
  return lo + shifted / total;
}

bool mean_bounds_check(std::span<const double> values,
                       std::span<const double> weights) {
  const double m = weighted_mean(values, weights);
  const double lo = *std::min_element(values.begin(), values.end());
  const double hi = *std::max_element(values.begin(), values.end());
  return lo - 1e-12 <= m && m <= hi + 1e-12;
}

JensenPair jensen_bound(const DensityMatrix& rho) {
  JensenPair pair;
  pair.entropy = expectation(rho, entropy_operator(rho.space()));
  pair.bound = std::log(expectation(rho, number_operator(rho.space())) + 0.5);
  return pair;
}

Trend monotonicity_verdict(std::span<const double> series, double tolerance) {
  if (series.size() < 2)
    throw ShapeError("monotonicity_verdict: need at least two samples");
  if (tolerance < 0.0)
    throw std::domain_error("monotonicity_verdict: tolerance must be >= 0");
  bool rose = false, fell = false;
  for (size_t i = 1; i < series.size(); ++i) {
    const double delta = series[i] - series[i - 1];
    if (delta > tolerance) rose = true;
    if (delta < -tolerance) fell = true;
  }
  if (rose && fell) return Trend::Mixed;
  if (fell) return Trend::NonIncreasing;
  if (rose) return Trend::NonDecreasing;
  return Trend::Flat;
}

Verdict endpoint_verdict(const Trajectory& trajectory, double tolerance) {
  if (trajectory.samples.empty())
    throw ShapeError("endpoint_verdict: empty trajectory");
  Verdict v;
  v.s_initial = trajectory.samples.front().entropy;
  v.s_final = trajectory.samples.back().entropy;
  v.tolerance = tolerance;
  const double delta = v.s_final - v.s_initial;
  if (delta > tolerance) v.kind = VerdictKind::Increased;
  else if (delta < -tolerance) v.kind = VerdictKind::Decreased;
  else v.kind = VerdictKind::Flat;
  return v;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lambda : es.eigenvalues())
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  return s;
}

}  // namespace focksim
