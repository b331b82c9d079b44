#pragma once

#include <string>
#include <vector>

#include "focksim/fock.hpp"

namespace focksim {

enum class Model { LindbladDecay, RateDecay, UnitaryQuench, UnitaryRamp };

bool is_decay_model(Model m);
bool is_unitary_model(Model m);
const char* to_string(Model m);

/// Full description of one simulation run.
///
/// gamma is the decay rate of the k=1 -> 0 channel; omega_* are oscillator
/// angular frequencies (hbar = 1); copies only scales the report totals.
struct Scenario {
  std::string name;
  Model model = Model::LindbladDecay;
  int levels = 0;
  int dim = 0;
  double gamma = 0.0;
  double omega_initial = 1.0;
  double omega_final = 1.0;
  double ramp_time = 0.0;
  double t_final = 0.0;
  double dt = 0.0;
  int initial_level = -1;  // -1 until resolved; parse defaults it to levels
  long copies = 1;
  long sample_every = 1;  // CSV thinning only; verdicts see every step

  FockSpace space() const { return FockSpace(levels, dim); }

  /// Throws ConfigError on any invariant violation, including the step
  /// guards dt*gamma <= 0.1 and dt*max(omega) <= 0.1.
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct TrajectorySample {
  double t = 0.0;
  double n_expect = 0.0;
  double entropy = 0.0;
  double purity = 0.0;
  double jensen_bound = 0.0;
  double vn_entropy = 0.0;
  double trace_error = 0.0;
};

/// Time-ordered samples plus integration diagnostics.
struct Trajectory {
  Scenario scenario;
  std::vector<TrajectorySample> samples;
  double max_hermiticity_defect = 0.0;  // worst pre-fix asymmetry per step
  double min_eigenvalue = 1.0;          // smallest state eigenvalue seen
  double max_tail_mass = 0.0;           // top-index population, unitary runs
  bool tail_flagged = false;            // max_tail_mass exceeded 1e-10
};

/// H = diag(omega * (k + 1/2)), hbar = 1.
ObservableOperator oscillator_hamiltonian(const FockSpace& space, double omega);

/// Right-hand side of the zero-temperature master equation
///   drho/dt = -i[H, rho] + gamma (L rho L^+ - 1/2 {L^+ L, rho}).
/// The result is traceless and maps Hermitian rho to a Hermitian derivative.
Matrix lindblad_rhs(const DensityMatrix& rho, const ObservableOperator& h,
                    const LadderOperator& collapse, double gamma);

/// Population cascade derivative. Oscillator kind:
///   dp_k/dt = gamma (k+1) p_{k+1} - gamma k p_k;
/// Uniform kind drops the k factors. Conserves the total.
RealVector rate_rhs(const RealVector& pops, double gamma, LadderKind kind);

/// Closed-form populations of the oscillator cascade started at |l>:
///   p_k(t) = C(l, k) s^k (1-s)^(l-k),  s = exp(-gamma t).
RealVector binomial_decay_populations(int l, double gamma, double t);

/// Fixed-step RK4 on the Lindblad equation with the oscillator lowering
/// channel. The state is re-hermitized each step; trace drift is left
/// untouched and reported per sample.
class LindbladDecayStepper {
 public:
  LindbladDecayStepper(const FockSpace& space, double gamma, double omega,
                       int initial_level, double dt);

  void step();
  double time() const { return step_count_ * dt_; }
  const Matrix& state() const { return rho_; }
  RealVector populations() const { return rho_.diagonal().real(); }
  double last_hermiticity_defect() const { return last_defect_; }

 private:
  Matrix rhs(const Matrix& rho) const;

  Matrix h_;
  Matrix lower_;
  Matrix ldagl_;
  Matrix rho_;
  double gamma_;
  double dt_;
  long step_count_ = 0;
  double last_defect_ = 0.0;
};

/// Fixed-step RK4 on the classical rate equations, the diagonal shadow of
/// the Lindblad cascade. Coded independently of LindbladDecayStepper.
class RateDecayStepper {
 public:
  RateDecayStepper(const FockSpace& space, double gamma, int initial_level,
                   double dt, LadderKind kind = LadderKind::Oscillator);

  void step();
  double time() const { return step_count_ * dt_; }
  const RealVector& populations() const { return pops_; }

 private:
  RealVector pops_;
  double gamma_;
  double dt_;
  LadderKind kind_;
  long step_count_ = 0;
};

/// Piecewise-linear frequency schedule. ramp_time == 0 means a sudden
/// switch at t = 0+; at(0) is always the pre-switch frequency.
struct FrequencyProfile {
  double omega_initial = 1.0;
  double omega_final = 1.0;
  double ramp_time = 0.0;

  double at(double t) const;
};

/// Exact-exponential midpoint propagator for unitary runs: each step applies
/// U = exp(-i H(omega(t_mid)) dt) built by eigendecomposition, so purity is
/// preserved to machine precision and constant-H segments are integrated
/// exactly. H(omega) = p^2/2 + omega^2 x^2/2 with quadratures fixed at the
/// reference frequency omega_initial.
class UnitaryStepper {
 public:
  UnitaryStepper(const FockSpace& space, const FrequencyProfile& profile,
                 double dt, int initial_level);

  void step();
  double time() const { return step_count_ * dt_; }
  const Matrix& state() const { return rho_; }
  const FrequencyProfile& profile() const { return profile_; }
  double last_hermiticity_defect() const { return last_defect_; }

  /// H(omega) in the fixed reference basis.
  Matrix hamiltonian(double omega) const;

 private:
  FrequencyProfile profile_;
  Matrix kinetic_;    // p^2/2
  Matrix potential_;  // x^2/2
  Matrix rho_;
  double dt_;
  long step_count_ = 0;
  double last_defect_ = 0.0;
  double cached_omega_ = -1.0;
  Matrix cached_u_;
};

/// Dissipative relaxation trajectory (LindbladDecay or RateDecay model),
/// sampled every step. Throws IntegrationError if the state eigenvalues
/// sink below -1e-6.
Trajectory integrate_decay(const Scenario& scenario);

/// Unitary quench or ramp trajectory. <N> and S are taken with respect to
/// the instantaneous frequency's number operator N(omega) = H(omega)/omega
/// - 1/2; the t = 0 sample uses the pre-switch frequency. Throws
/// TruncationError when the top-index population exceeds 1e-6; populations
/// above 1e-10 only set the tail flag.
Trajectory quench_propagate(const Scenario& scenario);

/// Dispatch on scenario.model.
Trajectory run_trajectory(const Scenario& scenario);

}  // namespace focksim
