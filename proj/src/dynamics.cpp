#include "focksim/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace focksim {

namespace {

constexpr Complex kImag{0.0, 1.0};
constexpr double kPositivityAbort = -1e-6;  // integration failure
constexpr double kTailFlag = 1e-10;
constexpr double kTailAbort = 1e-6;

void config_check(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

double vn_from_spectrum(const RealVector& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues)
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  return s;
}

Matrix lindblad_rhs_kernel(const Matrix& rho, const Matrix& h,
                           const Matrix& lower, const Matrix& ldagl,
                           double gamma) {
  Matrix drho = -kImag * (h * rho - rho * h);
  drho.noalias() += gamma * (lower * rho * lower.adjoint());
  drho.noalias() -= (0.5 * gamma) * (ldagl * rho + rho * ldagl);
  return drho;
}

long resolve_steps(double t_final, double dt) {
  return std::llround(t_final / dt);
}

}  // namespace

bool is_decay_model(Model m) {
  return m == Model::LindbladDecay || m == Model::RateDecay;
}

bool is_unitary_model(Model m) {
  return m == Model::UnitaryQuench || m == Model::UnitaryRamp;
}

const char* to_string(Model m) {
  switch (m) {
    case Model::LindbladDecay: return "lindblad-decay";
    case Model::RateDecay: return "rate-decay";
    case Model::UnitaryQuench: return "unitary-quench";
    case Model::UnitaryRamp: return "unitary-ramp";
  }
  return "?";
}

void Scenario::validate() const {
  config_check(levels >= 0, "levels must be >= 0");
  config_check(dim >= 1, "dim must be >= 1");
  config_check(dim >= levels + 1, "dim must be >= levels + 1");
  config_check(initial_level >= 0 && initial_level <= levels,
               "initial_level must lie in [0, levels]");
  config_check(t_final > 0.0, "t_final must be > 0");
  config_check(dt > 0.0, "dt must be > 0");
  config_check(dt <= t_final, "dt must be <= t_final");
  config_check(gamma >= 0.0, "gamma must be >= 0");
  config_check(omega_initial > 0.0, "omega_initial must be > 0");
  config_check(omega_final > 0.0, "omega_final must be > 0");
  config_check(ramp_time >= 0.0, "ramp_time must be >= 0");
  config_check(copies >= 1, "copies must be >= 1");
  config_check(sample_every >= 1, "sample_every must be >= 1");
  config_check(dt * gamma <= 0.1, "stability guard violated: dt * gamma > 0.1");
  config_check(dt * std::max(omega_initial, omega_final) <= 0.1,
               "stability guard violated: dt * max(omega) > 0.1");
}

ObservableOperator oscillator_hamiltonian(const FockSpace& space, double omega) {
  if (omega <= 0.0)
    throw std::domain_error("oscillator_hamiltonian: omega must be > 0");
  Matrix m = Matrix::Zero(space.dim, space.dim);
  for (int k = 0; k < space.dim; ++k) m(k, k) = omega * (k + 0.5);
  return {space, std::move(m)};
}

Matrix lindblad_rhs(const DensityMatrix& rho, const ObservableOperator& h,
                    const LadderOperator& collapse, double gamma) {
  if (!(rho.space() == h.space()) || !(rho.space() == collapse.space()))
    throw ShapeError("lindblad_rhs: operands live on different spaces");
  if (gamma < 0.0) throw std::domain_error("lindblad_rhs: gamma must be >= 0");
  const Matrix ldagl = collapse.entries().adjoint() * collapse.entries();
  return lindblad_rhs_kernel(rho.entries(), h.entries(), collapse.entries(),
                             ldagl, gamma);
}

RealVector rate_rhs(const RealVector& pops, double gamma, LadderKind kind) {
  const auto n = pops.size();
  RealVector d = RealVector::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double out_rate = kind == LadderKind::Oscillator ? gamma * k : gamma;
    if (k > 0) d[k] -= out_rate * pops[k];
    if (k > 0) d[k - 1] += out_rate * pops[k];
  }
  return d;
}

RealVector binomial_decay_populations(int l, double gamma, double t) {
  if (l < 0) throw std::domain_error("binomial_decay_populations: l must be >= 0");
  if (gamma < 0.0 || t < 0.0)
    throw std::domain_error("binomial_decay_populations: gamma and t must be >= 0");
  const double s = std::exp(-gamma * t);
  RealVector p(l + 1);
  double binom = 1.0;  // C(l, k), updated multiplicatively
  for (int k = 0; k <= l; ++k) {
    p[k] = binom * std::pow(s, k) * std::pow(1.0 - s, l - k);
    binom *= static_cast<double>(l - k) / (k + 1);
  }
  return p;
}

LindbladDecayStepper::LindbladDecayStepper(const FockSpace& space, double gamma,
                                           double omega, int initial_level,
                                           double dt)
    : h_(oscillator_hamiltonian(space, omega).entries()),
      lower_(lowering_operator(space, LadderKind::Oscillator).entries()),
      ldagl_(lower_.adjoint() * lower_),
      rho_(fock_pure_density(space, initial_level).entries()),
      gamma_(gamma),
      dt_(dt) {}

Matrix LindbladDecayStepper::rhs(const Matrix& rho) const {
  return lindblad_rhs_kernel(rho, h_, lower_, ldagl_, gamma_);
}

void LindbladDecayStepper::step() {
  const Matrix k1 = rhs(rho_);
  const Matrix k2 = rhs(rho_ + (0.5 * dt_) * k1);
  const Matrix k3 = rhs(rho_ + (0.5 * dt_) * k2);
  const Matrix k4 = rhs(rho_ + dt_ * k3);
  rho_ += (dt_ / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  last_defect_ = hermiticity_defect(rho_);
  rho_ = 0.5 * (rho_ + rho_.adjoint()).eval();
  ++step_count_;
}

RateDecayStepper::RateDecayStepper(const FockSpace& space, double gamma,
                                   int initial_level, double dt, LadderKind kind)
    : pops_(RealVector::Zero(space.dim)), gamma_(gamma), dt_(dt), kind_(kind) {
  if (initial_level < 0 || initial_level >= space.dim)
    throw std::out_of_range("RateDecayStepper: initial_level outside the space");
  pops_[initial_level] = 1.0;
}

void RateDecayStepper::step() {
  const RealVector k1 = rate_rhs(pops_, gamma_, kind_);
  const RealVector k2 = rate_rhs(pops_ + (0.5 * dt_) * k1, gamma_, kind_);
  const RealVector k3 = rate_rhs(pops_ + (0.5 * dt_) * k2, gamma_, kind_);
  const RealVector k4 = rate_rhs(pops_ + dt_ * k3, gamma_, kind_);
  pops_ += (dt_ / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  ++step_count_;
}

double FrequencyProfile::at(double t) const {
  if (t <= 0.0) return omega_initial;
  if (ramp_time <= 0.0 || t >= ramp_time) return omega_final;
  return omega_initial + (omega_final - omega_initial) * (t / ramp_time);
}

UnitaryStepper::UnitaryStepper(const FockSpace& space,
                               const FrequencyProfile& profile, double dt,
                               int initial_level)
    : profile_(profile),
      rho_(fock_pure_density(space, initial_level).entries()),
      dt_(dt) {
  const double omega_ref = profile_.omega_initial;
  Matrix a = Matrix::Zero(space.dim, space.dim);
  for (int k = 1; k < space.dim; ++k) a(k - 1, k) = std::sqrt(double(k));
  const Matrix x = (a + a.adjoint()) / std::sqrt(2.0 * omega_ref);
  const Matrix p = kImag * std::sqrt(omega_ref / 2.0) * (a.adjoint() - a);
  kinetic_ = 0.5 * (p * p);
  potential_ = 0.5 * (x * x);
}

Matrix UnitaryStepper::hamiltonian(double omega) const {
  return kinetic_ + (omega * omega) * potential_;
}

void UnitaryStepper::step() {
  const double omega_mid = profile_.at((step_count_ + 0.5) * dt_);
  if (omega_mid != cached_omega_) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian(omega_mid));
    const Matrix& v = es.eigenvectors();
    const RealVector phase = -dt_ * es.eigenvalues();
    cached_u_ = v *
                (phase.array().cos() + kImag * phase.array().sin())
                    .matrix()
                    .asDiagonal() *
                v.adjoint();
    cached_omega_ = omega_mid;
  }
  rho_ = cached_u_ * rho_ * cached_u_.adjoint();
  last_defect_ = hermiticity_defect(rho_);
  rho_ = 0.5 * (rho_ + rho_.adjoint()).eval();
  ++step_count_;
}

namespace {

struct DecaySampler {
  Matrix number_op;
  Matrix entropy_op;

  explicit DecaySampler(const FockSpace& space)
      : number_op(number_operator(space).entries()),
        entropy_op(entropy_operator(space).entries()) {}

  TrajectorySample from_state(double t, const Matrix& rho,
                              Trajectory& diag) const {
    TrajectorySample s;
    s.t = t;
    s.n_expect = trace_product(rho, number_op).real();
    s.entropy = trace_product(rho, entropy_op).real();
    s.purity = rho.squaredNorm();
    s.jensen_bound = std::log(s.n_expect + 0.5);
    s.trace_error = std::abs(rho.trace() - Complex{1.0, 0.0});
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    const double eig_min = es.eigenvalues().minCoeff();
    if (eig_min < kPositivityAbort) {
      std::ostringstream msg;
      msg << "state eigenvalue " << eig_min << " at t = " << t;
      throw IntegrationError(msg.str());
    }
    diag.min_eigenvalue = std::min(diag.min_eigenvalue, eig_min);
    s.vn_entropy = vn_from_spectrum(es.eigenvalues());
    return s;
  }

  TrajectorySample from_populations(double t, const RealVector& pops,
                                    Trajectory& diag) const {
    TrajectorySample s;
    s.t = t;
    double n = 0.0, entropy = 0.0, purity = 0.0, vn = 0.0, sum = 0.0;
    double p_min = 1.0;
    for (Eigen::Index k = 0; k < pops.size(); ++k) {
      const double p = pops[k];
      sum += p;
      n += k * p;
      entropy += p * std::log(k + 0.5);
      purity += p * p;
      if (p > 0.0) vn -= p * std::log(p);
      p_min = std::min(p_min, p);
    }
    if (p_min < kPositivityAbort) {
      std::ostringstream msg;
      msg << "population " << p_min << " at t = " << t;
      throw IntegrationError(msg.str());
    }
    diag.min_eigenvalue = std::min(diag.min_eigenvalue, p_min);
    s.n_expect = n;
    s.entropy = entropy;
    s.purity = purity;
    s.vn_entropy = vn;
    s.jensen_bound = std::log(n + 0.5);
    s.trace_error = std::abs(sum - 1.0);
    return s;
  }
};

}  // namespace

Trajectory integrate_decay(const Scenario& scenario) {
  if (!is_decay_model(scenario.model))
    throw std::invalid_argument("integrate_decay: scenario is not a decay model");
  scenario.validate();

  const FockSpace space = scenario.space();
  const long n_steps = resolve_steps(scenario.t_final, scenario.dt);
  const DecaySampler sampler(space);

  Trajectory traj;
  traj.scenario = scenario;
  traj.samples.reserve(n_steps + 1);

  if (scenario.model == Model::LindbladDecay) {
    LindbladDecayStepper stepper(space, scenario.gamma, scenario.omega_initial,
                                 scenario.initial_level, scenario.dt);
    for (long i = 0; i <= n_steps; ++i) {
      traj.samples.push_back(
          sampler.from_state(i * scenario.dt, stepper.state(), traj));
      if (i < n_steps) {
        stepper.step();
        traj.max_hermiticity_defect =
            std::max(traj.max_hermiticity_defect, stepper.last_hermiticity_defect());
      }
    }
  } else {
    RateDecayStepper stepper(space, scenario.gamma, scenario.initial_level,
                             scenario.dt);
    for (long i = 0; i <= n_steps; ++i) {
      traj.samples.push_back(
          sampler.from_populations(i * scenario.dt, stepper.populations(), traj));
      if (i < n_steps) stepper.step();
    }
  }
  return traj;
}

namespace {

// Observables in the instantaneous frequency's eigenbasis. H(omega) is
// positive definite, so ln(H/omega) realizes ln(N(omega) + 1/2).
struct InstantBasis {
  double omega = -1.0;
  Matrix h;
  Matrix entropy_op;

  void rebuild(const UnitaryStepper& stepper, double new_omega) {
    omega = new_omega;
    h = stepper.hamiltonian(omega);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const RealVector log_numbers =
        (es.eigenvalues().array() / omega).log().matrix();
    entropy_op = es.eigenvectors() * log_numbers.asDiagonal() *
                 es.eigenvectors().adjoint();
  }
};

}  // namespace

Trajectory quench_propagate(const Scenario& scenario) {
  if (!is_unitary_model(scenario.model))
    throw std::invalid_argument("quench_propagate: scenario is not a unitary model");
  scenario.validate();

  const FockSpace space = scenario.space();
  FrequencyProfile profile{scenario.omega_initial, scenario.omega_final,
                           scenario.model == Model::UnitaryRamp ? scenario.ramp_time
                                                                : 0.0};
  UnitaryStepper stepper(space, profile, scenario.dt, scenario.initial_level);
  const long n_steps = resolve_steps(scenario.t_final, scenario.dt);

  Trajectory traj;
  traj.scenario = scenario;
  traj.samples.reserve(n_steps + 1);
  InstantBasis basis;

  for (long i = 0; i <= n_steps; ++i) {
    const double t = i * scenario.dt;
    const double omega_now = profile.at(t);
    if (omega_now != basis.omega) basis.rebuild(stepper, omega_now);
    const Matrix& rho = stepper.state();

    TrajectorySample s;
    s.t = t;
    s.n_expect = trace_product(rho, basis.h).real() / omega_now - 0.5;
    s.entropy = trace_product(rho, basis.entropy_op).real();
    s.purity = rho.squaredNorm();
    s.jensen_bound = std::log(s.n_expect + 0.5);
    s.trace_error = std::abs(rho.trace() - Complex{1.0, 0.0});
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    traj.min_eigenvalue = std::min(traj.min_eigenvalue, es.eigenvalues().minCoeff());
    s.vn_entropy = vn_from_spectrum(es.eigenvalues());
    traj.samples.push_back(s);

    const double tail = rho(space.dim - 1, space.dim - 1).real();
    traj.max_tail_mass = std::max(traj.max_tail_mass, tail);
    if (tail > kTailAbort) {
      std::ostringstream msg;
      msg << "top-level population " << tail << " at t = " << t
          << "; increase dim (currently " << space.dim << ")";
      throw TruncationError(msg.str());
    }

    if (i < n_steps) {
      stepper.step();
      traj.max_hermiticity_defect =
          std::max(traj.max_hermiticity_defect, stepper.last_hermiticity_defect());
    }
  }
  traj.tail_flagged = traj.max_tail_mass > kTailFlag;
  return traj;
}

Trajectory run_trajectory(const Scenario& scenario) {
  return is_decay_model(scenario.model) ? integrate_decay(scenario)
                                        : quench_propagate(scenario);
}

}  // namespace focksim
