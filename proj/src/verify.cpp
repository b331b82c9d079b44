#include "focksim/verify.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "focksim/analysis.hpp"
#include "focksim/dynamics.hpp"
#include "focksim/io.hpp"
#include "focksim/runner.hpp"

namespace focksim::verify {

namespace {

struct CheckList {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& label) {
    if (!condition) {
      ok = false;
      detail << "FAILED: " << label << "; ";
    }
  }
  void note(const std::string& text) { detail << text; }
};

Scenario counterexample_scenario() {
  Scenario s;
  s.name = "counterexample-l5";
  s.model = Model::LindbladDecay;
  s.levels = 5;
  s.dim = 6;
  s.gamma = 1.0;
  s.t_final = 3.0;
  s.dt = 1e-3;
  s.initial_level = 5;
  return s;
}

std::vector<double> entropy_series(const Trajectory& traj) {
  std::vector<double> out;
  out.reserve(traj.samples.size());
  for (const auto& s : traj.samples) out.push_back(s.entropy);
  return out;
}

// ---------------------------------------------------------------------------
// Quench oracle: step-halved RK4 on the von Neumann equation, built on its
// own quadrature matrices so it shares no propagation code with
// UnitaryStepper. tr(rho H) is conserved by the flow, so halving converges
// immediately; the halving is still performed as the convergence criterion.
// ---------------------------------------------------------------------------

Matrix oracle_hamiltonian(int dim, double omega_ref, double omega) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(double(k));
  const Matrix x = (a + a.adjoint()) / std::sqrt(2.0 * omega_ref);
  const Matrix p = Complex{0.0, 1.0} * std::sqrt(omega_ref / 2.0) *
                   (a.adjoint() - a);
  return 0.5 * (p * p).eval() + (0.5 * omega * omega) * (x * x).eval();
}

double oracle_rk4_n_final(const Matrix& h, int level, double omega,
                          double t_final, double dt) {
  const auto dim = h.rows();
  Matrix rho = Matrix::Zero(dim, dim);
  rho(level, level) = 1.0;
  const Complex mi{0.0, -1.0};
  auto rhs = [&](const Matrix& r) -> Matrix { return mi * (h * r - r * h); };
  const long steps = std::llround(t_final / dt);
  for (long i = 0; i < steps; ++i) {
    const Matrix k1 = rhs(rho);
    const Matrix k2 = rhs(rho + (0.5 * dt) * k1);
    const Matrix k3 = rhs(rho + (0.5 * dt) * k2);
    const Matrix k4 = rhs(rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return trace_product(rho, h).real() / omega - 0.5;
}

double oracle_quench_n_final(int dim, int level, double omega_initial,
                             double omega_final, double t_final) {
  const Matrix h = oracle_hamiltonian(dim, omega_initial, omega_final);
  double previous = oracle_rk4_n_final(h, level, omega_final, t_final, 0.01);
  for (double dt = 0.005; dt > 1e-5; dt *= 0.5) {
    const double current = oracle_rk4_n_final(h, level, omega_final, t_final, dt);
    if (std::abs(current - previous) <= 1e-8) return current;
    previous = current;
  }
  throw std::runtime_error("quench oracle failed to converge");
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

CheckList criterion_counterexample(const Trajectory& traj) {
  CheckList c;
  const double s0 = traj.samples.front().entropy;
  const double sf = traj.samples.back().entropy;
  c.require(std::abs(s0 - std::log(5.5)) <= 1e-12, "S(0) != ln(5.5)");

  const Trend trend = monotonicity_verdict(entropy_series(traj), 1e-9);
  c.require(trend == Trend::NonIncreasing, "entropy series not NonIncreasing");

  const Verdict v = endpoint_verdict(traj, kVerdictTolerance);
  c.require(v.kind == VerdictKind::Decreased, "endpoint verdict not Decreased");

  const RealVector pops = binomial_decay_populations(5, 1.0, 3.0);
  double s_oracle = 0.0;
  for (int k = 0; k < pops.size(); ++k) s_oracle += pops[k] * std::log(k + 0.5);
  c.require(std::abs(sf - s_oracle) <= 1e-6, "S_final drifts from binomial oracle");

  c.detail << "S(0)=" << s0 << " S(t_f)=" << sf << " oracle=" << s_oracle
           << " verdict=" << to_string(v.kind);
  return c;
}

CheckList criterion_decay_law(const Trajectory& traj) {
  CheckList c;
  double worst = 0.0;
  for (const auto& s : traj.samples)
    worst = std::max(worst, std::abs(s.n_expect - 5.0 * std::exp(-s.t)));
  c.require(worst <= 1e-6, "<N>(t) drifts from 5 exp(-t)");
  c.detail << "max |<N> - 5 exp(-t)| = " << worst;
  return c;
}

CheckList criterion_oracle_equivalence() {
  CheckList c;
  const FockSpace space(5, 6);
  const double dt = 1e-3;
  LindbladDecayStepper lindblad(space, 1.0, 1.0, 5, dt);
  RateDecayStepper rate(space, 1.0, 5, dt);
  const long steps_per_probe = 60;  // 50 probes spanning (0, 3]
  double worst = 0.0;
  for (int probe = 1; probe <= 50; ++probe) {
    for (long i = 0; i < steps_per_probe; ++i) {
      lindblad.step();
      rate.step();
    }
    const double t = probe * steps_per_probe * dt;
    const RealVector from_lindblad = lindblad.populations();
    const RealVector from_rate = rate.populations();
    const RealVector from_binomial = binomial_decay_populations(5, 1.0, t);
    for (int k = 0; k < space.dim; ++k) {
      worst = std::max(worst, std::abs(from_lindblad[k] - from_rate[k]));
      worst = std::max(worst, std::abs(from_lindblad[k] - from_binomial[k]));
      worst = std::max(worst, std::abs(from_rate[k] - from_binomial[k]));
    }
  }
  c.require(worst <= 1e-6, "population routes disagree");
  c.detail << "max pairwise population gap over 50 probes = " << worst;
  return c;
}

CheckList criterion_jensen_chain(const Trajectory& traj) {
  CheckList c;
  const double ceiling = std::log(5.5);
  double worst_gap = 0.0, worst_ceiling = 0.0;
  for (const auto& s : traj.samples) {
    worst_gap = std::max(worst_gap, s.entropy - s.jensen_bound);
    worst_ceiling = std::max(worst_ceiling, s.jensen_bound - ceiling);
  }
  c.require(worst_gap <= 1e-9, "S exceeds ln(<N>+1/2)");
  c.require(worst_ceiling <= 1e-9, "ln(<N>+1/2) exceeds ln(l+1/2)");
  c.detail << "max S - bound = " << worst_gap
           << ", max bound - ln(5.5) = " << worst_ceiling;
  return c;
}

CheckList criterion_weighted_mean_bounds() {
  CheckList c;
  std::mt19937 gen(987654321u);
  std::uniform_int_distribution<int> len_dist(1, 64);
  std::uniform_real_distribution<double> value_dist(-100.0, 100.0);
  std::uniform_real_distribution<double> weight_dist(0.0, 1.0);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = len_dist(gen);
    std::vector<double> values(n), weights(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      values[i] = value_dist(gen);
      weights[i] = weight_dist(gen);
      total += weights[i];
    }
    if (total <= 0.0) weights[0] = 0.5;
    if (!mean_bounds_check(values, weights)) ++failures;
  }
  c.require(failures == 0, "mean escaped its min/max bracket");

  const std::vector<double> flat(7, 0.1);
  const std::vector<double> w{0.3, 0.05, 0.2, 0.01, 0.14, 0.09, 0.21};
  c.require(weighted_mean(flat, w) == 0.1, "all-equal values not returned exactly");
  c.detail << failures << " of 1000 random cases escaped";
  return c;
}

CheckList criterion_conservation(const Trajectory& traj) {
  CheckList c;
  double worst_trace = 0.0;
  for (const auto& s : traj.samples)
    worst_trace = std::max(worst_trace, s.trace_error);
  c.require(worst_trace <= 1e-9, "trace drift above 1e-9");
  c.require(traj.max_hermiticity_defect <= 1e-10, "hermiticity defect above 1e-10");
  c.require(traj.min_eigenvalue >= -1e-9, "state eigenvalue below -1e-9");
  c.detail << "max |Tr-1| = " << worst_trace
           << ", max asymmetry = " << traj.max_hermiticity_defect
           << ", min eigenvalue = " << traj.min_eigenvalue;
  return c;
}

CheckList criterion_purity(const Trajectory& traj) {
  CheckList c;
  c.require(std::abs(traj.samples.front().purity - 1.0) <= 1e-12,
            "initial purity != 1");
  double lo = 2.0, hi = 0.0;
  for (const auto& s : traj.samples) {
    lo = std::min(lo, s.purity);
    hi = std::max(hi, s.purity);
  }
  c.require(lo >= 1.0 / 6.0 - 1e-9 && hi <= 1.0 + 1e-9,
            "purity left [1/d, 1]");

  Scenario relaxed = counterexample_scenario();
  relaxed.name = "counterexample-l5-long";
  relaxed.t_final = 20.0;
  const Trajectory long_run = integrate_decay(relaxed);
  const double final_purity = long_run.samples.back().purity;
  c.require(final_purity >= 1.0 - 1e-6, "purity at gamma*t = 20 below 1 - 1e-6");
  c.detail << "purity range [" << lo << ", " << hi << "], purity(20) = "
           << final_purity;
  return c;
}

CheckList criterion_unitary_probe() {
  CheckList c;
  for (int n = 0; n <= 2; ++n) {
    Scenario q;
    q.name = "quench-" + std::to_string(n);
    q.model = Model::UnitaryQuench;
    q.levels = n;
    q.dim = 40;
    q.omega_initial = 1.0;
    q.omega_final = 2.0;
    q.t_final = 2.0;
    q.dt = 0.01;
    q.initial_level = n;
    const Trajectory traj = quench_propagate(q);
    const double n_final = traj.samples.back().n_expect;
    const double oracle = oracle_quench_n_final(40, n, 1.0, 2.0, 2.0);
    c.require(n_final >= n - 1e-6, "quench shrank the quantum number");
    c.require(std::abs(n_final - oracle) <= 1e-6,
              "quench <N> drifts from converged propagation");
    const Verdict v = endpoint_verdict(traj, kVerdictTolerance);
    c.note((n == 0 ? std::string("quench n_final/verdict: ") : std::string("; ")) +
           std::to_string(n_final) + "/" + to_string(v.kind));
  }

  Scenario r;
  r.name = "slow-ramp";
  r.model = Model::UnitaryRamp;
  r.levels = 2;
  r.dim = 40;
  r.omega_initial = 1.0;
  r.omega_final = 2.0;
  r.ramp_time = 200.0;
  r.t_final = 202.0;
  r.dt = 0.05;
  r.initial_level = 2;
  const Trajectory ramp = quench_propagate(r);
  const double ramp_n = ramp.samples.back().n_expect;
  c.require(std::abs(ramp_n - 2.0) <= 1e-2, "slow ramp moved the quantum number");
  const Verdict rv = endpoint_verdict(ramp, kVerdictTolerance);
  std::ostringstream tail;
  tail << "; ramp n_final/verdict: " << ramp_n << "/" << to_string(rv.kind);
  c.note(tail.str());
  return c;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read back " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

CheckList criterion_determinism(const std::filesystem::path& scratch) {
  CheckList c;
  const Scenario base = counterexample_scenario();
  const auto first = scratch / "determinism_first.csv";
  const auto second = scratch / "determinism_second.csv";
  run_scenario(base, first);
  run_scenario(base, second);
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  c.require(a == b, "consecutive runs differ byte-for-byte");
  const std::string header = a.substr(0, a.find('\n'));
  c.require(header == kCsvHeader, "CSV header mismatch");
  c.detail << a.size() << " bytes, identical across runs";
  return c;
}

}  // namespace

std::vector<CriterionResult> run_all(const std::filesystem::path& scratch_dir) {
  std::error_code ec;
  std::filesystem::create_directories(scratch_dir, ec);
  if (ec && !std::filesystem::is_directory(scratch_dir))
    throw IoError("cannot create scratch directory " + scratch_dir.string() +
                  ": " + ec.message());

  Trajectory base_traj;
  std::string base_error;
  try {
    base_traj = integrate_decay(counterexample_scenario());
  } catch (const std::exception& e) {
    base_error = e.what();
  }

  struct Entry {
    int id;
    const char* name;
    std::function<CheckList()> run;
    bool needs_base;
  };
  const std::vector<Entry> criteria = {
      {1, "decay counterexample: number entropy falls",
       [&] { return criterion_counterexample(base_traj); }, true},
      {2, "<N> follows the closed-form exponential decay",
       [&] { return criterion_decay_law(base_traj); }, true},
      {3, "lindblad / rate / binomial populations agree",
       [] { return criterion_oracle_equivalence(); }, false},
      {4, "jensen chain S <= ln(<N>+1/2) <= S(0)",
       [&] { return criterion_jensen_chain(base_traj); }, true},
      {5, "weighted mean stays within min/max",
       [] { return criterion_weighted_mean_bounds(); }, false},
      {6, "trace, hermiticity and positivity conserved",
       [&] { return criterion_conservation(base_traj); }, true},
      {7, "purity bracket and ground-state relaxation",
       [&] { return criterion_purity(base_traj); }, true},
      {8, "sudden quench grows <N>; slow ramp preserves it",
       [] { return criterion_unitary_probe(); }, false},
      {9, "deterministic CSV with the fixed header",
       [&] { return criterion_determinism(scratch_dir); }, false},
  };

  std::vector<CriterionResult> results;
  for (const auto& entry : criteria) {
    CriterionResult r{entry.id, entry.name, false, ""};
    if (entry.needs_base && !base_error.empty()) {
      r.detail = "base trajectory unavailable: " + base_error;
    } else {
      try {
        CheckList c = entry.run();
        r.passed = c.ok;
        r.detail = c.detail.str();
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

int run_and_print(std::ostream& out, const std::filesystem::path& scratch_dir) {
  const auto results = run_all(scratch_dir);
  int failures = 0;
  for (const auto& r : results) {
    out << "[" << r.id << "/" << results.size() << "] "
        << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) out << "  |  " << r.detail;
    out << "\n";
    if (!r.passed) ++failures;
  }
  if (failures == 0) {
    out << "all " << results.size() << " acceptance criteria passed\n";
  } else {
    out << failures << " of " << results.size() << " acceptance criteria failed\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace focksim::verify
