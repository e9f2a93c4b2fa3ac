#include "bym/core.hpp"

#include <cmath>
#include <utility>

namespace bym {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::ResampleLimitExceeded: return "ResampleLimitExceeded";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::BasePointMismatch: return "BasePointMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Matrix matrix_unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  Matrix e = Matrix::Zero(n, n);
  e(i, j) = Complex(1.0, 0.0);
  return e;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_antihermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m + m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_diagonal(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Matrix off = m;
  off.diagonal().setZero();
  return off.cwiseAbs().maxCoeff() <= tol * (1.0 + m.cwiseAbs().maxCoeff());
}

double hs_metric(const Matrix& t1, const Matrix& t2) {
  if (t1.rows() != t2.rows() || t1.cols() != t2.cols())
    throw Error(ErrorKind::DimensionMismatch, "hs_metric arguments differ in shape");
  return t1.conjugate().cwiseProduct(t2).sum().real();
}

namespace {

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite())
    throw Error(ErrorKind::ParseError, std::string(what) + " has non-finite entries");
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m, bool normalized, const Tolerances& tol)
    : m_(std::move(m)), normalized_(normalized) {
  require_finite(m_, "density matrix");
  if (!is_hermitian(m_, tol.hermitian))
    throw Error(ErrorKind::NotHermitian, "density matrix is not hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  const double largest = es.eigenvalues().maxCoeff();
  if (largest <= 0.0 || es.eigenvalues().minCoeff() <= tol.positivity * largest)
    throw Error(ErrorKind::NotPositiveDefinite, "density matrix is not positive definite");
  if (normalized_ && std::abs(m_.trace().real() - 1.0) > tol.trace_one)
    throw Error(ErrorKind::NotNormalized, "density matrix trace differs from one");
}

Purification::Purification(Matrix w, bool normalized, const Tolerances& tol)
    : w_(std::move(w)), normalized_(normalized) {
  require_finite(w_, "purification");
  if (w_.rows() != w_.cols())
    throw Error(ErrorKind::DimensionMismatch, "purification must be square");
  Eigen::JacobiSVD<Matrix> svd(w_);
  const auto& sv = svd.singularValues();
  if (sv(0) <= 0.0 || sv(sv.size() - 1) <= tol.positivity * sv(0))
    throw Error(ErrorKind::NotPositiveDefinite, "purification is numerically singular");
  if (normalized_ && std::abs(w_.squaredNorm() - 1.0) > tol.trace_one)
    throw Error(ErrorKind::NotNormalized, "purification has Tr WW^* != 1");
}

SpectralData spectral_decompose(const Matrix& h, bool positive, const Tolerances& tol) {
  if (h.rows() != h.cols())
    throw Error(ErrorKind::DimensionMismatch, "spectral_decompose needs a square matrix");
  if (!is_hermitian(h, tol.hermitian))
    throw Error(ErrorKind::NotHermitian, "spectral_decompose input is not hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::NotHermitian, "eigendecomposition failed to converge");
  if (positive) {
    const double largest = es.eigenvalues().maxCoeff();
    if (largest <= 0.0 || es.eigenvalues().minCoeff() <= tol.positivity * largest)
      throw Error(ErrorKind::NotPositiveDefinite,
                  "spectral_decompose: spectrum is not strictly positive");
  }
  return SpectralData{es.eigenvalues(), es.eigenvectors()};
}

// ---------------------------------------------------------------------------
// Superoperator

Superoperator::Superoperator(Kind kind, SpectralData spectral,
                             std::function<double(double, double)> fn)
    : kind_(kind), spectral_(std::move(spectral)) {
  const Eigen::Index n = spectral_.dim();
  coeff_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      coeff_(i, j) = fn(spectral_.eigenvalues(i), spectral_.eigenvalues(j));
  if (!coeff_.allFinite())
    throw Error(ErrorKind::NotPositiveDefinite,
                "superoperator entry function diverges on this spectrum");
}

Superoperator Superoperator::x(SpectralData spectral) {
  return Superoperator(Kind::X, std::move(spectral),
                       [](double di, double dj) { return di / dj; });
}

Superoperator Superoperator::x_tilde(const Purification& w) {
  SpectralData spec = spectral_decompose(w.mat().adjoint() * w.mat(), true);
  return Superoperator(Kind::XTilde, std::move(spec),
                       [](double di, double dj) { return di / dj; });
}

Superoperator Superoperator::func_of_x(SpectralData spectral,
                                       std::function<double(double)> f) {
  return Superoperator(Kind::FuncOfX, std::move(spectral),
                       [f = std::move(f)](double di, double dj) { return f(di / dj); });
}

Superoperator Superoperator::inv_l_plus_r(SpectralData spectral) {
  return Superoperator(Kind::InvLPlusR, std::move(spectral),
                       [](double di, double dj) { return 1.0 / (di + dj); });
}

Superoperator Superoperator::inv_ltilde_plus_rtilde(const Purification& w) {
  SpectralData spec = spectral_decompose(w.mat().adjoint() * w.mat(), true);
  return Superoperator(Kind::InvLTildePlusRTilde, std::move(spec),
                       [](double di, double dj) { return 1.0 / (di + dj); });
}

Superoperator Superoperator::inv_one_plus_x(SpectralData spectral) {
  // 1/(1 + d_i/d_j) = d_j/(d_i + d_j)
  return Superoperator(Kind::FuncOfX, std::move(spectral),
                       [](double di, double dj) { return dj / (di + dj); });
}

Superoperator Superoperator::cayley_of_x(SpectralData spectral) {
  // (1 - d_i/d_j)/(1 + d_i/d_j) = (d_j - d_i)/(d_j + d_i)
  return Superoperator(Kind::FuncOfX, std::move(spectral),
                       [](double di, double dj) { return (dj - di) / (dj + di); });
}

Matrix Superoperator::apply(const Matrix& t) const {
  if (t.rows() != spectral_.dim() || t.cols() != spectral_.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "superoperator dimension does not match its argument");
  const Matrix& u = spectral_.eigenvectors;
  Matrix that = u.adjoint() * t * u;
  that.array() *= coeff_.array();
  return u * that * u.adjoint();
}

// ---------------------------------------------------------------------------
// Sylvester solve, Bartels-Stewart style on the complex Schur form

Matrix solve_sylvester(const DensityMatrix& d, const Matrix& y) {
  const Eigen::Index n = d.dim();
  if (y.rows() != n || y.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "solve_sylvester operands differ in size");

  Eigen::ComplexSchur<Matrix> schur(d.mat());
  if (schur.info() != Eigen::Success)
    throw Error(ErrorKind::NotPositiveDefinite, "Schur decomposition failed");
  const Matrix& q = schur.matrixU();
  const Matrix& t = schur.matrixT();  // upper triangular, diagonal = spectrum of D

  Matrix c = q.adjoint() * y * q;
  Matrix g(n, n);
  // T G + G T = C, solved column by column:
  // (T + t_kk I) g_k = c_k - sum_{j<k} T(j,k) g_j
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::VectorXcd rhs = c.col(k);
    for (Eigen::Index j = 0; j < k; ++j) rhs -= t(j, k) * g.col(j);
    Matrix shifted = t;
    shifted.diagonal().array() += t(k, k);
    g.col(k) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }
  return q * g * q.adjoint();
}

Matrix matrix_sqrt(const Matrix& p, const Tolerances& tol) {
  if (!is_hermitian(p, tol.hermitian))
    throw Error(ErrorKind::NotHermitian, "matrix_sqrt input is not hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(p);
  const double scale = frobenius(p);
  RealVector vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -tol.positivity * scale)
      throw Error(ErrorKind::NegativeEigenvalue,
                  "matrix_sqrt input has an eigenvalue below the clamp tolerance");
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace bym
