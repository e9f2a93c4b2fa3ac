#include <doctest.h>

#include <cmath>

#include "bym/bundle.hpp"
#include "bym/random.hpp"
#include "bym/yangmills.hpp"
#include "oracles.hpp"

using namespace bym;

namespace {

Purification random_diagonal(Rng& rng, int n, bool normalized = false) {
  Matrix lam = Matrix::Zero(n, n);
  RealVector entries(n);
  for (int i = 0; i < n; ++i) entries(i) = 0.4 + rng.uniform();
  if (normalized) entries /= entries.norm();
  lam.diagonal() = entries.cast<Complex>();
  return Purification(lam, normalized);
}

double lambda_min(const Purification& lam) {
  double m = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < lam.dim(); ++i)
    m = std::min(m, lam.mat()(i, i).real());
  return m;
}

}  // namespace

TEST_CASE("divergence summand: identity probe or identity frame direction vanish") {
  Rng rng(9);
  const Purification lam = random_diagonal(rng, 3);
  const Matrix g_alpha = rng.hermitian(3);
  const Matrix g = rng.hermitian(3);
  const Matrix eye = Matrix::Identity(3, 3);
  CHECK(divergence_summand(lam, g_alpha, eye).norm() <= 1e-12 * (1.0 + g_alpha.norm()));
  CHECK(divergence_summand(lam, eye, g).norm() <= 1e-12 * (1.0 + g.norm()));
}

TEST_CASE("divergence summand: termwise assembly from curvature pieces") {
  // summand == flat derivative - Omega(G_a^2 L, G L) - Omega(G_a L, G G_a L),
  // every piece analytic.
  Rng rng(10);
  for (int n : {2, 3}) {
    const Purification lam = random_diagonal(rng, n);
    const Matrix g_alpha = rng.hermitian(n);
    const Matrix g = rng.hermitian(n);
    const Matrix assembled = curvature_flat_derivative(lam, g_alpha, g) -
                             curvature_hh(lam, g_alpha * g_alpha, g) -
                             curvature(lam, g_alpha, g * g_alpha * lam.mat());
    CHECK(test::rel_err(divergence_summand(lam, g_alpha, g), assembled) <= 1e-11);
  }
}

TEST_CASE("flat derivative term: matched by central differences of the curvature") {
  Rng rng(11);
  const Purification lam = random_diagonal(rng, 3);
  const Matrix g_alpha = rng.hermitian(3);
  const Matrix g = rng.hermitian(3);
  const Matrix analytic = curvature_flat_derivative(lam, g_alpha, g);
  const double h = 1e-5 * lambda_min(lam);
  auto displaced = [&](double sign) {
    return Purification(lam.mat() + sign * h * g_alpha * lam.mat(), false);
  };
  const Matrix fd = (curvature_hh(displaced(+1), g_alpha, g) -
                     curvature_hh(displaced(-1), g_alpha, g)) /
                    (2.0 * h);
  CHECK(test::rel_err(fd, analytic) <= 1e-7);
}

TEST_CASE("divergence summand vs finite-difference oracle") {
  Rng rng(9);
  const Purification lam = random_diagonal(rng, 3);
  const Matrix g_alpha = rng.hermitian(3);
  const Matrix g = rng.hermitian(3);
  const Matrix analytic = divergence_summand(lam, g_alpha, g);
  const double h = 1e-5 * lambda_min(lam);
  const Matrix fd = divergence_summand_fd(lam, g_alpha, g, h);
  CHECK(test::rel_err(fd, analytic) <= 1e-6);
}

TEST_CASE("finite-difference oracle: identity probe and commuting data vanish") {
  Rng rng(12);
  const Purification lam = random_diagonal(rng, 2);
  const Matrix g_alpha = rng.hermitian(2);
  const double h = 1e-4;
  CHECK(divergence_summand_fd(lam, g_alpha, Matrix::Identity(2, 2), h).norm() <= 1e-7);

  // everything diagonal: all commutators vanish
  Matrix da = Matrix::Zero(2, 2), dg = Matrix::Zero(2, 2);
  da.diagonal() << Complex(0.3), Complex(-0.7);
  dg.diagonal() << Complex(1.1), Complex(0.2);
  CHECK(divergence_summand_fd(lam, da, dg, h).norm() <= 1e-8);
}

TEST_CASE("finite-difference oracle: second-order Richardson convergence") {
  Rng rng(13);
  const Purification lam = random_diagonal(rng, 2);
  const Matrix g_alpha = rng.hermitian(2);
  const Matrix g = rng.hermitian(2);
  const Matrix analytic = divergence_summand(lam, g_alpha, g);
  const double h0 = 1e-2 * lambda_min(lam);
  double prev = -1.0;
  for (int k = 0; k < 4; ++k) {
    const double err = (divergence_summand_fd(lam, g_alpha, g, h0 / (1 << k)) - analytic).norm();
    if (prev > 0.0) CHECK(err <= 0.35 * prev);
    prev = err;
  }
}

TEST_CASE("codifferential: vanishes termwise on the identity probe") {
  Rng rng(14);
  const Purification lam = random_diagonal(rng, 4);
  CHECK(codifferential(lam, Matrix::Identity(4, 4), false).norm() <= 1e-11);
}

TEST_CASE("codifferential: vanishes on random probes, dimension two") {
  Rng rng(15);
  for (int rep = 0; rep < 5; ++rep) {
    const Purification lam = random_diagonal(rng, 2);
    const HorizontalFrame frame = horizontal_frame(lam, false);
    const double scale = std::max(curvature_scale(lam, frame), 1.0);
    CHECK(codifferential(lam, rng.hermitian(2), false).norm() <= 1e-10 * scale);
  }
}

TEST_CASE("codifferential: vanishes on the hermitian basis, dimension three") {
  Rng rng(16);
  const Purification lam = random_diagonal(rng, 3);
  const HorizontalFrame frame = horizontal_frame(lam, false);
  const double scale = std::max(curvature_scale(lam, frame), 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Matrix probe = matrix_unit(3, i, j) + matrix_unit(3, j, i);
      CHECK(codifferential(lam, probe, false).norm() <= 1e-9 * scale);
      if (i < j) {
        const Matrix anti = Complex(0, 1) * (matrix_unit(3, i, j) - matrix_unit(3, j, i));
        CHECK(codifferential(lam, anti, false).norm() <= 1e-9 * scale);
      }
    }
}

TEST_CASE("sign-split sums: each branch vanishes on matrix-unit probes") {
  Rng rng(17);
  for (int n : {2, 3, 4}) {
    const Purification lam = random_diagonal(rng, n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Matrix probe = matrix_unit(n, k, l);
        CHECK(sign_split_sum(lam, probe, +1).norm() <= 1e-10);
        CHECK(sign_split_sum(lam, probe, -1).norm() <= 1e-10);
      }
  }
}

TEST_CASE("sign-split sums: linear in the probe") {
  Rng rng(18);
  const Purification lam = random_diagonal(rng, 3);
  const Matrix p1 = matrix_unit(3, 0, 1);
  const Matrix p2 = matrix_unit(3, 1, 2);
  const Matrix sum = sign_split_sum(lam, p1 + p2, +1);
  const Matrix parts = sign_split_sum(lam, p1, +1) + sign_split_sum(lam, p2, +1);
  CHECK((sum - parts).norm() <= 1e-12);
}

TEST_CASE("frame sum equals the half-weighted full double sum, family by family") {
  // The frame sum splits into the symmetric and antisymmetric families; each
  // partial sum (nonzero on its own) must match the corresponding half-
  // weighted double sum. Comparison through the public conjugation pieces.
  Rng rng(19);
  const int n = 3;
  const Purification lam = random_diagonal(rng, n);
  const Matrix g = rng.hermitian(n);
  const HorizontalFrame frame = horizontal_frame(lam, false);

  const SpectralData spec = spectral_decompose(project(lam).mat(), true);
  const Superoperator inv1px = Superoperator::inv_one_plus_x(spec);
  const Matrix conj_left = lam.mat().adjoint();
  const Matrix conj_right = lam.mat().adjoint().inverse();

  // symmetric family: diagonal generators plus the (i<j) symmetric ones
  Matrix sym_frame_sum = Matrix::Zero(n, n);
  const int n_sym = n + n * (n - 1) / 2;
  for (int a = 0; a < n_sym; ++a)
    sym_frame_sum += divergence_summand(lam, frame.generators[a], g);
  const Matrix sym_reduced =
      2.0 * conj_left * inv1px.apply(0.5 * sign_split_sum(lam, g, +1)) * conj_right;
  CHECK((sym_frame_sum - sym_reduced).norm() <=
        1e-11 * std::max(1.0, sym_reduced.norm()));

  // antisymmetric family
  Matrix anti_frame_sum = Matrix::Zero(n, n);
  for (std::size_t a = n_sym; a < frame.generators.size(); ++a)
    anti_frame_sum += divergence_summand(lam, frame.generators[a], g);
  const Matrix anti_reduced =
      2.0 * conj_left * inv1px.apply(0.5 * sign_split_sum(lam, g, -1)) * conj_right;
  CHECK((anti_frame_sum - anti_reduced).norm() <=
        1e-11 * std::max(1.0, anti_reduced.norm()));

  // and the full sums both vanish together (kernel-triviality reduction)
  CHECK((sym_frame_sum + anti_frame_sum).norm() <= 1e-10);
  CHECK((sign_split_sum(lam, g, +1) + sign_split_sum(lam, g, -1)).norm() <= 1e-10);
}

TEST_CASE("normalized case: the submanifold corrections vanish") {
  Rng rng(20);
  const Purification lam = random_diagonal(rng, 3, true);
  const HorizontalFrame frame = horizontal_frame(lam, true);
  const Matrix g = rng.hermitian(3);
  for (const Matrix& g_alpha : frame.generators)
    CHECK(normal_correction(lam, g_alpha, g).norm() <= 1e-12);
}

TEST_CASE("normalized case: reduced and full frames give the same residual") {
  Rng rng(21);
  const Purification lam = random_diagonal(rng, 3, true);
  const Matrix g = rng.hermitian(3);
  const Matrix full = codifferential(lam, g, false);
  const Matrix reduced = codifferential(lam, g, true);
  CHECK((full - reduced).norm() <= 1e-11);
}

TEST_CASE("codifferential transforms equivariantly without the diagonal reduction") {
  Rng rng(22);
  const int n = 3;
  const Purification w = random_purification(rng, n, false, 30.0);
  Eigen::JacobiSVD<Matrix> svd(w.mat(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix diag = Matrix::Zero(n, n);
  diag.diagonal() = svd.singularValues().cast<Complex>();
  const Purification lam(diag, false);
  const Matrix v = svd.matrixU();
  const Matrix u = svd.matrixV().adjoint();

  const HorizontalFrame frame = horizontal_frame(lam, false);
  std::vector<Matrix> conjugated;
  for (const Matrix& g_alpha : frame.generators)
    conjugated.push_back(v * g_alpha * v.adjoint());

  const Matrix g = rng.hermitian(n);
  const Matrix at_w = detail::codifferential_at(w.mat(), conjugated, v * g * v.adjoint());
  const Matrix at_lam = codifferential(lam, g, false);
  CHECK((at_w - u.adjoint() * at_lam * u).norm() <= 1e-10);
  CHECK(at_w.norm() <= 1e-9);
}

TEST_CASE("verify: dimension one is exactly flat") {
  YmConfig config;
  config.dim = 1;
  config.seed = 5;
  config.samples = 3;
  const YmReport report = verify_yang_mills(config);
  CHECK(report.passed);
  CHECK(report.max_residual == 0.0);
}

TEST_CASE("verify: dimension two passes at 1e-10") {
  YmConfig config;
  config.dim = 2;
  config.seed = 3;
  config.samples = 20;
  config.tolerance = 1e-10;
  const YmReport report = verify_yang_mills(config);
  CHECK(report.passed);
  CHECK(report.max_residual <= 1e-10 * std::max(report.scale, 1.0));
}

TEST_CASE("verify: dimension four, both cases") {
  for (bool normalized : {false, true}) {
    YmConfig config;
    config.dim = 4;
    config.seed = 5;
    config.samples = 5;
    config.tolerance = 1e-8;
    config.normalized = normalized;
    const YmReport report = verify_yang_mills(config);
    CHECK(report.passed);
  }
}

TEST_CASE("verify: report fields and probe bookkeeping") {
  YmConfig config;
  config.dim = 2;
  config.seed = 1;
  config.samples = 2;
  config.random_probes = 1;
  const YmReport report = verify_yang_mills(config);
  CHECK(report.dim == 2);
  CHECK(report.samples == 2);
  // per sample: n diagonal + 2 off-diagonal + 1 random, plus the
  // no-reduction re-check on sample 0
  CHECK(report.per_probe.size() == 2 * (2 + 2 + 1) + 1);
  CHECK(report.tolerance == kTolerances.ym_dim2);
}
