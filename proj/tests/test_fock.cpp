#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "focksim/fock.hpp"

using namespace focksim;

namespace {

DensityMatrix random_diagonal_state(const FockSpace& space, std::mt19937& gen) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> pops(space.dim);
  double total = 0.0;
  for (double& p : pops) {
    p = dist(gen);
    total += p;
  }
  for (double& p : pops) p /= total;
  return density_from_populations(space, pops);
}

}  // namespace

TEST_CASE("fock space invariants") {
  CHECK(FockSpace(5, 6).levels == 5);
  CHECK(FockSpace(0, 1).dim == 1);
  CHECK_THROWS_AS(FockSpace(5, 5), std::domain_error);   // level 5 needs dim 6
  CHECK_THROWS_AS(FockSpace(-1, 3), std::domain_error);
  CHECK_THROWS_AS(FockSpace(0, 0), std::domain_error);
}

TEST_CASE("number operator is diag(0..d-1)") {
  const FockSpace space(2, 3);
  const Matrix n = number_operator(space).entries();
  CHECK(n(0, 0) == Complex{0.0, 0.0});
  CHECK(n(1, 1) == Complex{1.0, 0.0});
  CHECK(n(2, 2) == Complex{2.0, 0.0});
  CHECK(n.cwiseAbs().sum() == 3.0);

  CHECK(number_operator(FockSpace(0, 1)).entries()(0, 0) == Complex{0.0, 0.0});
  CHECK(number_operator(FockSpace(0, 6)).entries().trace().real() == 15.0);
}

TEST_CASE("entropy operator entries are ln(k + 1/2)") {
  const Matrix s = entropy_operator(FockSpace(2, 3)).entries();
  CHECK(s(0, 0).real() == doctest::Approx(-0.6931472).epsilon(1e-7));
  CHECK(s(1, 1).real() == doctest::Approx(0.4054651).epsilon(1e-7));
  CHECK(s(2, 2).real() == doctest::Approx(0.9162907).epsilon(1e-7));

  CHECK(entropy_operator(FockSpace(0, 1)).entries()(0, 0).real() ==
        doctest::Approx(std::log(0.5)).epsilon(1e-12));
  CHECK(entropy_operator(FockSpace(0, 6)).entries()(5, 5).real() ==
        doctest::Approx(1.7047481).epsilon(1e-7));
}

TEST_CASE("entropy operator equals the diagonal log of N + 1/2") {
  const FockSpace space(3, 9);
  const Matrix s = entropy_operator(space).entries();
  const Matrix shifted = number_operator(space).entries() +
                         0.5 * identity_operator(space).entries();
  for (int k = 0; k < space.dim; ++k)
    CHECK(std::abs(s(k, k) - std::log(shifted(k, k).real())) <= 1e-12);
}

TEST_CASE("lowering operator matrix elements") {
  const FockSpace space(2, 3);
  const Matrix osc = lowering_operator(space, LadderKind::Oscillator).entries();
  CHECK(osc(0, 1).real() == 1.0);
  CHECK(osc(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(osc.cwiseAbs().sum() == doctest::Approx(1.0 + std::sqrt(2.0)));

  const Matrix uni = lowering_operator(space, LadderKind::Uniform).entries();
  CHECK(uni(0, 1).real() == 1.0);
  CHECK(uni(1, 2).real() == 1.0);
  CHECK(uni.cwiseAbs().sum() == 2.0);

  CHECK(lowering_operator(FockSpace(0, 1), LadderKind::Oscillator)
            .entries()
            .cwiseAbs()
            .sum() == 0.0);
  CHECK(lowering_operator(FockSpace(0, 1), LadderKind::Uniform)
            .entries()
            .cwiseAbs()
            .sum() == 0.0);
}

TEST_CASE("adjoint product of the oscillator lowering matches N below the edge") {
  const FockSpace space(4, 7);
  const Matrix a = lowering_operator(space, LadderKind::Oscillator).entries();
  const Matrix product = a.adjoint() * a;
  const Matrix n = number_operator(space).entries();
  for (int i = 0; i + 1 < space.dim; ++i)
    for (int j = 0; j + 1 < space.dim; ++j)
      CHECK(std::abs(product(i, j) - n(i, j)) <= 1e-12);
}

TEST_CASE("pure fock state") {
  const FockSpace space(5, 6);
  const DensityMatrix rho = fock_pure_density(space, 5);
  CHECK(expectation(rho, number_operator(space)) == 5.0);
  CHECK(purity(rho) == 1.0);
  CHECK(expectation(fock_pure_density(FockSpace(2, 3), 0),
                    entropy_operator(FockSpace(2, 3))) ==
        doctest::Approx(-0.6931472).epsilon(1e-7));

  CHECK_THROWS_AS(fock_pure_density(space, 6), std::out_of_range);
  CHECK_THROWS_AS(fock_pure_density(space, -1), std::out_of_range);
}

TEST_CASE("density from populations") {
  const FockSpace space(2, 3);
  const std::vector<double> pops{0.25, 0.25, 0.5};
  const DensityMatrix rho = density_from_populations(space, pops);
  CHECK(expectation(rho, number_operator(space)) == 1.25);
  CHECK(purity(rho) == doctest::Approx(0.375).epsilon(1e-15));

  SUBCASE("single population reproduces the ground state") {
    const std::vector<double> ground{1.0};
    const DensityMatrix a = density_from_populations(space, ground);
    const DensityMatrix b = fock_pure_density(space, 0);
    CHECK((a.entries() - b.entries()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("rejects bad inputs") {
    const std::vector<double> unnormalized{0.5, 0.6};
    CHECK_THROWS_AS(density_from_populations(space, unnormalized),
                    NormalizationError);
    const std::vector<double> negative{1.25, -0.25};
    CHECK_THROWS_AS(density_from_populations(space, negative), std::domain_error);
    const std::vector<double> too_long{0.25, 0.25, 0.25, 0.25};
    CHECK_THROWS_AS(density_from_populations(space, too_long), ShapeError);
  }
  SUBCASE("diagonal reads back renormalized to 1e-12") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> raw(3);
      double total = 0.0;
      for (double& p : raw) total += (p = dist(gen));
      for (double& p : raw) p /= total;
      const DensityMatrix rho2 = density_from_populations(space, raw);
      for (int k = 0; k < 3; ++k)
        CHECK(std::abs(rho2.entries()(k, k).real() - raw[k]) <= 1e-12);
    }
  }
}

TEST_CASE("expectation basics and shape checks") {
  const FockSpace space(5, 6);
  const DensityMatrix rho = fock_pure_density(space, 5);
  CHECK(expectation(rho, entropy_operator(space)) ==
        doctest::Approx(1.7047481).epsilon(1e-7));
  CHECK_THROWS_AS(expectation(rho, number_operator(FockSpace(2, 3))), ShapeError);
}

TEST_CASE("expectation is real and normalized over random diagonal states") {
  std::mt19937 gen(20260810);
  const FockSpace space(4, 5);
  const ObservableOperator id = identity_operator(space);
  const ObservableOperator s_op = entropy_operator(space);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = random_diagonal_state(space, gen);
    CHECK(std::abs(expectation(rho, id) - 1.0) <= 1e-10);

    // min-max sandwich for the diagonal entropy expectation
    const double s = expectation(rho, s_op);
    CHECK(s >= std::log(0.5) - 1e-12);
    CHECK(s <= std::log(space.dim - 1 + 0.5) + 1e-12);
  }
}

TEST_CASE("purity spans pure to maximally mixed") {
  const FockSpace d2(1, 2);
  const std::vector<double> mixed{0.5, 0.5};
  CHECK(purity(density_from_populations(d2, mixed)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(purity(fock_pure_density(d2, 0)) == 1.0);
}

TEST_CASE("operator constructors validate their matrices") {
  const FockSpace space(1, 2);
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = Complex{1.0, 0.0};  // not Hermitian
  CHECK_THROWS_AS(ObservableOperator(space, bad), std::domain_error);
  CHECK_THROWS_AS(ObservableOperator(space, Matrix::Zero(3, 3)), ShapeError);

  Matrix low = Matrix::Zero(2, 2);
  low(1, 0) = Complex{1.0, 0.0};  // raising, not lowering
  CHECK_THROWS_AS(LadderOperator(space, low), std::domain_error);

  Matrix not_normalized = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(space, not_normalized), std::domain_error);
  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(space, negative), std::domain_error);
}
