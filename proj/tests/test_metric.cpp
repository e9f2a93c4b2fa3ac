#include <doctest.h>

#include <cmath>

#include "bym/bundle.hpp"
#include "bym/metric.hpp"
#include "bym/random.hpp"
#include "oracles.hpp"

using namespace bym;

namespace {

DensityMatrix diag_state(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return DensityMatrix(m, std::abs(a + b - 1.0) <= 1e-12);
}

}  // namespace

TEST_CASE("bures_metric: maximally mixed base point") {
  // D = I/n: the Sylvester solve gives G = nY/2, so g^B(X, Y) = (n/4) Tr XY.
  Rng rng(3);
  const int n = 3;
  const DensityMatrix d(Matrix::Identity(n, n) / n, true);
  const Matrix x = rng.hermitian(n);
  const Matrix y = rng.hermitian(n);
  const double expected = 0.25 * n * (x * y).trace().real();
  CHECK(bures_metric(d, x, y) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("bures_metric: classical Fisher quarter on the diagonal") {
  const DensityMatrix d = diag_state(0.25, 0.75);
  Matrix x = Matrix::Zero(2, 2);
  x(0, 0) = 0.4;
  x(1, 1) = -0.4;
  const double expected = 0.25 * (0.16 / 0.25 + 0.16 / 0.75);
  CHECK(bures_metric(d, x, x) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("bures_metric: symmetry and positivity") {
  Rng rng(5);
  const DensityMatrix d = random_density(rng, 3, 30.0);
  const Matrix x = rng.hermitian(3);
  const Matrix y = rng.hermitian(3);
  CHECK(bures_metric(d, x, y) == doctest::Approx(bures_metric(d, y, x)).epsilon(1e-12));
  CHECK(bures_metric(d, x, x) > 0.0);
}

TEST_CASE("bures_metric: unitary invariance") {
  Rng rng(7);
  const DensityMatrix d = random_density(rng, 3, 30.0);
  const Matrix x = rng.hermitian(3);
  const Matrix y = rng.hermitian(3);
  const Matrix u = rng.unitary(3);
  const DensityMatrix du(u * d.mat() * u.adjoint(), true);
  const double before = bures_metric(d, x, y);
  const double after = bures_metric(du, u * x * u.adjoint(), u * y * u.adjoint());
  CHECK(after == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("bures_metric: agrees with the lift pairing in any gauge") {
  Rng rng(9);
  const DensityMatrix d = random_density(rng, 3, 30.0);
  const Matrix x = rng.hermitian(3);
  const double base_value = bures_metric(d, x, x);

  const Matrix root = matrix_sqrt(d.mat());
  for (int gauge = 0; gauge < 2; ++gauge) {
    const Matrix u = gauge ? rng.unitary(3) : Matrix::Identity(3, 3);
    const Purification w(root * u, true);
    const Matrix lift = horizontal_lift(w, x);
    CHECK(hs_metric(lift, lift) == doctest::Approx(base_value).epsilon(1e-12));
  }
}

TEST_CASE("fidelity_root: coincident states give one") {
  Rng rng(11);
  const DensityMatrix d = random_density(rng, 3, 30.0);
  CHECK(fidelity_root(d, d) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fidelity_root: commuting pair matches the Bhattacharyya sum") {
  const DensityMatrix rho = diag_state(0.5, 0.5);
  const DensityMatrix mu = diag_state(0.75, 0.25);
  const double expected = std::sqrt(0.375) + std::sqrt(0.125);
  CHECK(fidelity_root(rho, mu) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(fidelity_root(mu, rho) == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("fidelity_root: unitary invariance and symmetry") {
  Rng rng(13);
  const DensityMatrix rho = random_density(rng, 3, 30.0);
  const DensityMatrix mu = random_density(rng, 3, 30.0);
  const Matrix u = rng.unitary(3);
  const double plain = fidelity_root(rho, mu);
  CHECK(fidelity_root(mu, rho) == doctest::Approx(plain).epsilon(1e-11));
  const DensityMatrix rho_u(u * rho.mat() * u.adjoint(), true);
  const DensityMatrix mu_u(u * mu.mat() * u.adjoint(), true);
  CHECK(fidelity_root(rho_u, mu_u) == doctest::Approx(plain).epsilon(1e-12));
}

TEST_CASE("bures_distance: zero at coincidence, frozen commuting value") {
  const DensityMatrix rho = diag_state(0.5, 0.5);
  const DensityMatrix mu = diag_state(0.75, 0.25);
  CHECK(bures_distance(rho, rho) == doctest::Approx(0.0));
  const double expected = std::sqrt(2.0 - 2.0 * (std::sqrt(0.375) + std::sqrt(0.125)));
  CHECK(bures_distance(rho, mu) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("bures_distance: triangle inequality on random triples") {
  Rng rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix a = random_density(rng, 3, 30.0);
    const DensityMatrix b = random_density(rng, 3, 30.0);
    const DensityMatrix c = random_density(rng, 3, 30.0);
    CHECK(bures_distance(a, b) <= bures_distance(a, c) + bures_distance(c, b) + 1e-12);
  }
}

TEST_CASE("bures_distance: rejects unnormalized input") {
  Rng rng(19);
  const Purification w = random_purification(rng, 2, false, 30.0);
  const DensityMatrix d = project(w);
  try {
    bures_distance(d, d);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormalized);
  }
}

TEST_CASE("traceless_hermitian_basis: orthonormal and traceless") {
  for (int n : {2, 3, 4}) {
    const auto basis = traceless_hermitian_basis(n);
    REQUIRE(static_cast<int>(basis.size()) == n * n - 1);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      CHECK(std::abs(basis[a].trace().real()) <= 1e-14);
      CHECK(is_hermitian(basis[a]));
      for (std::size_t b = a; b < basis.size(); ++b) {
        const double want = a == b ? 1.0 : 0.0;
        CHECK(std::abs((basis[a] * basis[b]).trace().real() - want) <= 1e-13);
      }
    }
  }
}

TEST_CASE("distance hessian: half of it matches the metric Gram at I/2") {
  const DensityMatrix rho(Matrix::Identity(2, 2) / 2.0, true);
  const auto basis = traceless_hermitian_basis(2);
  const double h = 1e-3 * 0.5;
  const RealMatrix hess = distance_squared_hessian(rho, basis, h);
  const RealMatrix gram = metric_gram(rho, basis);
  CHECK((0.5 * hess - gram).norm() <= 1e-4 * gram.norm());
  // at I/2 the Gram matrix itself is delta/2
  CHECK((gram - 0.5 * RealMatrix::Identity(3, 3)).norm() <= 1e-12);
}

TEST_CASE("distance hessian: zero direction gives a zero row and column") {
  const DensityMatrix rho(Matrix::Identity(2, 2) / 2.0, true);
  std::vector<Matrix> dirs = {traceless_hermitian_basis(2)[0], Matrix::Zero(2, 2)};
  const RealMatrix hess = distance_squared_hessian(rho, dirs, 1e-3);
  CHECK(std::abs(hess(0, 1)) <= 1e-10);
  CHECK(std::abs(hess(1, 1)) <= 1e-10);
}

TEST_CASE("distance hessian: second-order convergence under halving") {
  Rng rng(23);
  const DensityMatrix rho = random_density(rng, 2, 10.0);
  const auto basis = traceless_hermitian_basis(2);
  const RealMatrix gram = metric_gram(rho, basis);
  const SpectralData spec = spectral_decompose(rho.mat(), true);
  const double h0 = 1e-2 * spec.eigenvalues.minCoeff();

  double prev = -1.0;
  for (int k = 0; k < 3; ++k) {
    const double h = h0 / (1 << k);
    const double err = (0.5 * distance_squared_hessian(rho, basis, h) - gram).norm();
    if (prev > 0.0) CHECK(err <= 0.4 * prev);  // ~4x shrink expected per halving
    prev = err;
  }
}

TEST_CASE("distance hessian: oversized steps are rejected") {
  const DensityMatrix rho = diag_state(0.5, 0.5);
  const auto basis = traceless_hermitian_basis(2);
  try {
    distance_squared_hessian(rho, basis, 10.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StepTooLarge);
  }
}
