#include "focksim/fock.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace focksim {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-9;
constexpr double kPurityTol = 1e-9;

void require_same_space(const FockSpace& a, const FockSpace& b) {
  if (!(a == b)) {
    std::ostringstream msg;
    msg << "space mismatch: (levels=" << a.levels << ", dim=" << a.dim
        << ") vs (levels=" << b.levels << ", dim=" << b.dim << ")";
    throw ShapeError(msg.str());
  }
}

void require_square(const FockSpace& space, const Matrix& m, const char* role) {
  if (m.rows() != space.dim || m.cols() != space.dim) {
    std::ostringstream msg;
    msg << role << " must be " << space.dim << "x" << space.dim << ", got "
        << m.rows() << "x" << m.cols();
    throw ShapeError(msg.str());
  }
}

}  // namespace

FockSpace::FockSpace(int levels_, int dim_) : levels(levels_), dim(dim_) {
  if (levels < 0) throw std::domain_error("FockSpace: levels must be >= 0");
  if (dim < 1) throw std::domain_error("FockSpace: dim must be >= 1");
  if (dim < levels + 1)
    throw std::domain_error("FockSpace: dim must be >= levels + 1");
}

ObservableOperator::ObservableOperator(FockSpace space, Matrix entries)
    : space_(space), entries_(std::move(entries)) {
  require_square(space_, entries_, "ObservableOperator");
  if (hermiticity_defect(entries_) > kHermitianTol)
    throw std::domain_error("ObservableOperator: matrix is not Hermitian");
}

LadderOperator::LadderOperator(FockSpace space, Matrix entries)
    : space_(space), entries_(std::move(entries)) {
  require_square(space_, entries_, "LadderOperator");
  for (int i = 0; i < space_.dim; ++i)
    for (int j = 0; j < space_.dim; ++j)
      if (j != i + 1 && entries_(i, j) != Complex{0.0, 0.0})
        throw std::domain_error(
            "LadderOperator: nonzero entry off the first superdiagonal");
}

DensityMatrix::DensityMatrix(FockSpace space, Matrix entries, double trace_tol)
    : space_(space), entries_(std::move(entries)) {
  require_square(space_, entries_, "DensityMatrix");
  if (hermiticity_defect(entries_) > kHermitianTol)
    throw std::domain_error("DensityMatrix: matrix is not Hermitian");
  const double trace_err = std::abs(entries_.trace() - Complex{1.0, 0.0});
  if (trace_err > trace_tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: |Tr - 1| = " << trace_err << " exceeds " << trace_tol;
    throw std::domain_error(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eigs(entries_, Eigen::EigenvaluesOnly);
  if (eigs.eigenvalues().minCoeff() < kEigenvalueFloor)
    throw std::domain_error("DensityMatrix: not positive semidefinite");
  const double p = entries_.squaredNorm();
  if (p < 1.0 / space_.dim - kPurityTol || p > 1.0 + kPurityTol)
    throw std::domain_error("DensityMatrix: purity out of [1/d, 1]");
}

ObservableOperator number_operator(const FockSpace& space) {
  Matrix m = Matrix::Zero(space.dim, space.dim);
  for (int k = 0; k < space.dim; ++k) m(k, k) = static_cast<double>(k);
  return {space, std::move(m)};
}

ObservableOperator entropy_operator(const FockSpace& space) {
  Matrix m = Matrix::Zero(space.dim, space.dim);
  for (int k = 0; k < space.dim; ++k) m(k, k) = std::log(k + 0.5);
  return {space, std::move(m)};
}

ObservableOperator identity_operator(const FockSpace& space) {
  return {space, Matrix::Identity(space.dim, space.dim)};
}

LadderOperator lowering_operator(const FockSpace& space, LadderKind kind) {
  Matrix m = Matrix::Zero(space.dim, space.dim);
  for (int k = 1; k < space.dim; ++k)
    m(k - 1, k) = kind == LadderKind::Oscillator ? std::sqrt(double(k)) : 1.0;
  return {space, std::move(m)};
}

DensityMatrix fock_pure_density(const FockSpace& space, int level) {
  if (level < 0 || level >= space.dim) {
    std::ostringstream msg;
    msg << "fock_pure_density: level " << level << " outside [0, "
        << space.dim - 1 << "]";
    throw std::out_of_range(msg.str());
  }
  Matrix m = Matrix::Zero(space.dim, space.dim);
  m(level, level) = 1.0;
  return {space, std::move(m)};
}

DensityMatrix density_from_populations(const FockSpace& space,
                                       std::span<const double> pops) {
  if (std::ssize(pops) > space.dim)
    throw ShapeError("density_from_populations: more populations than basis states");
  for (double p : pops)
    if (p < 0.0)
      throw std::domain_error("density_from_populations: negative population");
  const double sum = std::accumulate(pops.begin(), pops.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "density_from_populations: populations sum to " << sum;
    throw NormalizationError(msg.str());
  }
  Matrix m = Matrix::Zero(space.dim, space.dim);
  for (int k = 0; k < std::ssize(pops); ++k) m(k, k) = pops[k] / sum;
  return {space, std::move(m)};
}

double expectation(const DensityMatrix& rho, const ObservableOperator& op) {
  require_same_space(rho.space(), op.space());
  const Complex tr = trace_product(rho.entries(), op.entries());
  if (std::abs(tr.imag()) > 1e-10)
    throw std::runtime_error("expectation: trace has a non-negligible imaginary part");
  return tr.real();
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.entries().squaredNorm();
}

}  // namespace focksim
