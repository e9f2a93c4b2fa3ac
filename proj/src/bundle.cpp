#include "bym/bundle.hpp"

#include <cmath>

namespace bym {

namespace {

// Sylvester solve against a raw positive matrix (validation already done by
// the caller or implied by construction).
Matrix sylvester_raw(const Matrix& pd, const Matrix& rhs) {
  return solve_sylvester(DensityMatrix(pd, false), rhs);
}

}  // namespace

DensityMatrix project(const Purification& w) {
  Matrix d = w.mat() * w.mat().adjoint();
  return DensityMatrix((d + d.adjoint()) / 2.0, w.normalized());
}

Matrix connection_form(const Purification& w, const Matrix& t) {
  if (t.rows() != w.dim() || t.cols() != w.dim())
    throw Error(ErrorKind::DimensionMismatch, "tangent does not match the base point");
  const Matrix dtilde = w.mat().adjoint() * w.mat();
  const Matrix rhs = w.mat().adjoint() * t - t.adjoint() * w.mat();
  return sylvester_raw((dtilde + dtilde.adjoint()) / 2.0, rhs);
}

VerticalHorizontalSplit split_tangent(const Purification& w, const Matrix& t) {
  const Matrix vertical = w.mat() * connection_form(w, t);
  const Matrix horizontal = t - vertical;

  // Independent route: horizontal = GW with DG + GD = TW^* + WT^*.
  const Matrix g = sylvester_raw(project(w).mat(),
                                 t * w.mat().adjoint() + w.mat() * t.adjoint());
  const double scale = std::max(frobenius(t), 1.0);
  if (frobenius(horizontal - g * w.mat()) > kTolerances.split_consistency * scale)
    throw Error(ErrorKind::NotPositiveDefinite,
                "tangent splitting failed its internal cross-check");
  return {vertical, horizontal};
}

Matrix horizontal_lift(const Purification& w, const Matrix& x) {
  if (!is_hermitian(x))
    throw Error(ErrorKind::NotHermitian, "base tangent must be hermitian");
  return solve_sylvester(project(w), x) * w.mat();
}

Matrix curvature(const Purification& w, const Matrix& g, const Matrix& t) {
  if (!is_hermitian(g))
    throw Error(ErrorKind::NotHermitian, "first curvature slot takes GW with hermitian G");
  if (t.rows() != w.dim() || t.cols() != w.dim())
    throw Error(ErrorKind::DimensionMismatch, "tangent does not match the base point");
  const SpectralData spec = spectral_decompose(project(w).mat(), true);
  const Superoperator inv1px = Superoperator::inv_one_plus_x(spec);
  const Superoperator x_op = Superoperator::x(spec);

  const Matrix winv = w.mat().inverse();
  const Matrix inner = inv1px.apply(t * winv + x_op.apply(winv.adjoint() * t.adjoint()));
  return 2.0 * w.mat().adjoint() * inv1px.apply(commutator(g, inner)) *
         w.mat().adjoint().inverse();
}

Matrix curvature_hh(const Purification& w, const Matrix& g, const Matrix& gp) {
  if (!is_hermitian(g) || !is_hermitian(gp))
    throw Error(ErrorKind::NotHermitian, "curvature_hh takes two hermitian generators");
  const SpectralData spec = spectral_decompose(project(w).mat(), true);
  const Superoperator inv1px = Superoperator::inv_one_plus_x(spec);
  return 2.0 * w.mat().adjoint() * inv1px.apply(commutator(g, gp)) *
         w.mat().adjoint().inverse();
}

HorizontalFrame horizontal_frame(const Purification& lambda, bool normalized_case) {
  const Eigen::Index n = lambda.dim();
  if (!is_diagonal(lambda.mat()))
    throw Error(ErrorKind::NotDiagonal, "horizontal frames are built at diagonal points");
  RealVector lam(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex entry = lambda.mat()(i, i);
    if (entry.real() <= 0.0 || std::abs(entry.imag()) > kTolerances.hermitian)
      throw Error(ErrorKind::NotPositiveDefinite, "diagonal entries must be positive reals");
    lam(i) = entry.real();
  }
  // The metric of GL at L is Re Tr(G G' L^2): all normalizers below use the
  // eigenvalues d_i = lam_i^2 of D = Lambda^2.
  RealVector d = lam.array().square();

  std::vector<Matrix> diag_family;
  for (Eigen::Index i = 0; i < n; ++i)
    diag_family.push_back(matrix_unit(n, i, i) / lam(i));

  std::vector<Matrix> generators;
  if (!normalized_case) {
    generators = diag_family;
  } else {
    if (std::abs(d.sum() - 1.0) > kTolerances.trace_one)
      throw Error(ErrorKind::NotNormalized,
                  "normalized frame requested at a point with Tr Lambda^2 != 1");
    // Gram-Schmidt of the diagonal family against the normal direction
    // 1*Lambda; the off-diagonal families are orthogonal to it already.
    auto pairing = [&](const Matrix& a, const Matrix& b) {
      return hs_metric(a * lambda.mat(), b * lambda.mat());
    };
    std::vector<Matrix> accepted{Matrix::Identity(n, n)};
    for (const Matrix& h : diag_family) {
      Matrix residue = h;
      for (const Matrix& prev : accepted) residue -= pairing(prev, residue) * prev;
      const double norm = std::sqrt(pairing(residue, residue));
      if (norm > 1e-8) {
        accepted.push_back(residue / norm);
        generators.push_back(accepted.back());
      }
    }
    if (static_cast<Eigen::Index>(generators.size()) != n - 1)
      throw Error(ErrorKind::NotNormalized,
                  "normalized diagonal family did not reduce to n-1 generators");
  }

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double norm = std::sqrt(d(i) + d(j));
      generators.push_back((matrix_unit(n, i, j) + matrix_unit(n, j, i)) / norm);
    }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double norm = std::sqrt(d(i) + d(j));
      generators.push_back(Complex(0.0, 1.0) *
                           (matrix_unit(n, i, j) - matrix_unit(n, j, i)) / norm);
    }
  return HorizontalFrame{lambda, std::move(generators), normalized_case};
}

Purification transport(const std::vector<DensityMatrix>& curve, const Purification& w0) {
  if (curve.empty())
    throw Error(ErrorKind::BasePointMismatch, "transport needs a non-empty curve");
  const Eigen::Index n = w0.dim();
  const Matrix d0 = curve.front().mat();
  if (d0.rows() != n)
    throw Error(ErrorKind::DimensionMismatch, "curve dimension does not match start point");
  if (frobenius(project(w0).mat() - d0) > kTolerances.base_point * frobenius(d0))
    throw Error(ErrorKind::BasePointMismatch,
                "start purification does not project onto the first curve point");

  Matrix w = w0.mat();
  for (std::size_t k = 0; k + 1 < curve.size(); ++k) {
    const DensityMatrix& dk = curve[k];
    const Matrix& next = curve[k + 1].mat();
    const Matrix step = next - dk.mat();
    const SpectralData spec = spectral_decompose(dk.mat(), true);
    if (frobenius(step) > 0.5 * spec.eigenvalues.minCoeff())
      throw Error(ErrorKind::StepTooLarge, "consecutive curve points are too far apart");

    const Matrix g = solve_sylvester(dk, step);
    w = (Matrix::Identity(n, n) + g) * w;

    // Re-project the positive part so pi(W) hits the next curve point exactly.
    Matrix ww = w * w.adjoint();
    const SpectralData ws = spectral_decompose((ww + ww.adjoint()) / 2.0, true);
    const Matrix inv_sqrt = ws.eigenvectors *
                            ws.eigenvalues.array().rsqrt().matrix().asDiagonal() *
                            ws.eigenvectors.adjoint();
    w = matrix_sqrt(next) * inv_sqrt * w;
  }
  return Purification(std::move(w), w0.normalized() && curve.back().normalized());
}

Matrix holonomy(const Purification& w0, const Purification& wm) {
  if (w0.dim() != wm.dim())
    throw Error(ErrorKind::DimensionMismatch, "holonomy endpoints differ in dimension");
  const Matrix m = w0.mat().inverse() * wm.mat();
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace bym
