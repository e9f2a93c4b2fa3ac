#include "bym/metric.hpp"

#include <cmath>

namespace bym {

double bures_metric(const DensityMatrix& d, const Matrix& x, const Matrix& y) {
  if (!is_hermitian(x) || !is_hermitian(y))
    throw Error(ErrorKind::NotHermitian, "metric arguments must be hermitian");
  const Matrix g = solve_sylvester(d, y);
  return 0.5 * (x * g).trace().real();
}

double fidelity_root(const DensityMatrix& rho, const DensityMatrix& mu) {
  if (rho.dim() != mu.dim())
    throw Error(ErrorKind::DimensionMismatch, "states differ in dimension");
  const Matrix s = matrix_sqrt(rho.mat());
  Matrix inner = s * mu.mat() * s;
  inner = (inner + inner.adjoint()) / 2.0;
  return matrix_sqrt(inner).trace().real();
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& mu) {
  if (!rho.normalized() || !mu.normalized())
    throw Error(ErrorKind::NotNormalized, "Bures distance is defined between trace-one states");
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * fidelity_root(rho, mu)));
}

namespace {

double distance_squared_at(const DensityMatrix& rho, const Matrix& displaced) {
  DensityMatrix mu = [&] {
    try {
      return DensityMatrix(displaced, rho.normalized());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotPositiveDefinite)
        throw Error(ErrorKind::StepTooLarge,
                    "finite-difference step leaves the positive cone");
      throw;
    }
  }();
  const double d = bures_distance(rho, mu);
  return d * d;
}

}  // namespace

RealMatrix distance_squared_hessian(const DensityMatrix& rho,
                                    const std::vector<Matrix>& directions,
                                    double step) {
  const auto b = static_cast<Eigen::Index>(directions.size());
  for (const Matrix& x : directions) {
    if (!is_hermitian(x))
      throw Error(ErrorKind::NotHermitian, "hessian directions must be hermitian");
    if (std::abs(x.trace().real()) > kTolerances.trace_one * (1.0 + frobenius(x)))
      throw Error(ErrorKind::NotNormalized, "hessian directions must be traceless");
  }

  auto f = [&](const Matrix& offset) {
    return distance_squared_at(rho, rho.mat() + offset);
  };

  const double f0 = f(Matrix::Zero(rho.dim(), rho.dim()));
  RealMatrix hess(b, b);
  for (Eigen::Index i = 0; i < b; ++i) {
    const Matrix& xi = directions[i];
    hess(i, i) = (f(step * xi) - 2.0 * f0 + f(-step * xi)) / (step * step);
    for (Eigen::Index j = i + 1; j < b; ++j) {
      const Matrix& xj = directions[j];
      const double cross = (f(step * (xi + xj)) - f(step * (xi - xj)) -
                            f(-step * (xi - xj)) + f(-step * (xi + xj))) /
                           (4.0 * step * step);
      hess(i, j) = cross;
      hess(j, i) = cross;
    }
  }
  return hess;
}

RealMatrix metric_gram(const DensityMatrix& d, const std::vector<Matrix>& directions) {
  const auto b = static_cast<Eigen::Index>(directions.size());
  RealMatrix gram(b, b);
  for (Eigen::Index i = 0; i < b; ++i)
    for (Eigen::Index j = i; j < b; ++j) {
      gram(i, j) = bures_metric(d, directions[i], directions[j]);
      gram(j, i) = gram(i, j);
    }
  return gram;
}

std::vector<Matrix> traceless_hermitian_basis(Eigen::Index n) {
  std::vector<Matrix> basis;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      basis.push_back((matrix_unit(n, i, j) + matrix_unit(n, j, i)) * inv_sqrt2);
      basis.push_back(Complex(0.0, 1.0) *
                      (matrix_unit(n, i, j) - matrix_unit(n, j, i)) * inv_sqrt2);
    }
  for (Eigen::Index m = 1; m < n; ++m) {
    Matrix diag = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < m; ++j) diag(j, j) = 1.0;
    diag(m, m) = -static_cast<double>(m);
    basis.push_back(diag / std::sqrt(static_cast<double>(m * (m + 1))));
  }
  return basis;
}

}  // namespace bym
