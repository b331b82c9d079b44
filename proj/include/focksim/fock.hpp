#pragma once

#include <span>

#include "focksim/errors.hpp"
#include "focksim/types.hpp"

namespace focksim {

/// Single-mode Fock space truncated to basis indices 0..dim-1.
///
/// `levels` is the highest initially occupied index l; the truncation
/// dimension must keep that index representable (dim >= levels + 1).
struct FockSpace {
  int levels = 0;
  int dim = 1;

  FockSpace(int levels_, int dim_);

  friend bool operator==(const FockSpace&, const FockSpace&) = default;
};

/// Hermitian d x d matrix in the Fock basis (N, S = ln(N + 1/2), H, ...).
class ObservableOperator {
 public:
  ObservableOperator(FockSpace space, Matrix entries);

  const FockSpace& space() const { return space_; }
  const Matrix& entries() const { return entries_; }

 private:
  FockSpace space_;
  Matrix entries_;
};

enum class LadderKind { Oscillator, Uniform };

/// Non-Hermitian lowering matrix: the only nonzero entries sit at (k-1, k).
class LadderOperator {
 public:
  LadderOperator(FockSpace space, Matrix entries);

  const FockSpace& space() const { return space_; }
  const Matrix& entries() const { return entries_; }

 private:
  FockSpace space_;
  Matrix entries_;
};

/// Hermitian, positive semidefinite, unit-trace state matrix.
///
/// Construction validates: hermiticity defect <= 1e-12, |Tr - 1| <= trace_tol
/// (1e-12 for freshly built states, integrators pass 1e-9 to admit drift),
/// smallest eigenvalue >= -1e-9, and Tr(rho^2) within [1/d - 1e-9, 1 + 1e-9].
class DensityMatrix {
 public:
  DensityMatrix(FockSpace space, Matrix entries, double trace_tol = 1e-12);

  const FockSpace& space() const { return space_; }
  const Matrix& entries() const { return entries_; }

 private:
  FockSpace space_;
  Matrix entries_;
};

/// N: diag(0, 1, ..., d-1).
ObservableOperator number_operator(const FockSpace& space);

/// S = ln(N + 1/2): diag(ln(k + 1/2)).
ObservableOperator entropy_operator(const FockSpace& space);

/// The d x d identity.
ObservableOperator identity_operator(const FockSpace& space);

/// Lowering matrix; Oscillator kind has sqrt(k) at (k-1, k), Uniform has 1.
LadderOperator lowering_operator(const FockSpace& space, LadderKind kind);

/// Pure Fock state |level><level|.
DensityMatrix fock_pure_density(const FockSpace& space, int level);

/// Diagonal state from level populations, zero-padded to dim and renormalized
/// exactly to unit trace. Rejects negative entries and sums off one by more
/// than 1e-9.
DensityMatrix density_from_populations(const FockSpace& space,
                                       std::span<const double> pops);

/// Re Tr(rho * op). The imaginary part is a numerical diagnostic and must
/// stay within 1e-10.
double expectation(const DensityMatrix& rho, const ObservableOperator& op);

/// Tr(rho^2), in [1/d, 1] up to tolerance.
double purity(const DensityMatrix& rho);

}  // namespace focksim
