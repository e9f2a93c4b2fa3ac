#pragma once

#include <vector>

#include "bym/core.hpp"

namespace bym {

/// Bures metric g^B(X, Y) = (1/2) Tr X G with DG + GD = Y. Symmetric and
/// positive definite on hermitian tangents.
double bures_metric(const DensityMatrix& d, const Matrix& x, const Matrix& y);

/// Tr (rho^{1/2} mu rho^{1/2})^{1/2}; the root-fidelity of the pair. Lies in
/// [0, 1] for trace-one inputs and is symmetric under swapping.
double fidelity_root(const DensityMatrix& rho, const DensityMatrix& mu);

/// Bures distance (2 - 2 fidelity_root)^{1/2} between trace-one states.
double bures_distance(const DensityMatrix& rho, const DensityMatrix& mu);

/// Matrix of second central differences of mu -> bures_distance(rho, mu)^2
/// at mu = rho over a list of traceless hermitian directions. One half of
/// this converges (O(step^2)) to the Gram matrix of the Bures metric.
RealMatrix distance_squared_hessian(const DensityMatrix& rho,
                                    const std::vector<Matrix>& directions,
                                    double step);

/// Gram matrix of the Bures metric on a list of tangent directions.
RealMatrix metric_gram(const DensityMatrix& d, const std::vector<Matrix>& directions);

/// Orthonormal (under Tr AB) basis of traceless hermitian n x n matrices:
/// generalized Gell-Mann matrices, n^2 - 1 of them.
std::vector<Matrix> traceless_hermitian_basis(Eigen::Index n);

}  // namespace bym
