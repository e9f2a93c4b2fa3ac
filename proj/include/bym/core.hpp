#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "bym/config.hpp"
#include "bym/errors.hpp"

namespace bym {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// small matrix helpers

inline double frobenius(const Matrix& m) { return m.norm(); }

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Standard matrix unit e_ij (1 at row i, column j).
Matrix matrix_unit(Eigen::Index n, Eigen::Index i, Eigen::Index j);

bool is_hermitian(const Matrix& m, double tol = kTolerances.hermitian);
bool is_antihermitian(const Matrix& m, double tol = kTolerances.hermitian);
bool is_diagonal(const Matrix& m, double tol = kTolerances.hermitian);

/// Real part of the Hilbert-Schmidt inner product, Re Tr T1^* T2.
double hs_metric(const Matrix& t1, const Matrix& t2);

// ---------------------------------------------------------------------------
// validated value types

/// Positive-definite hermitian matrix; `normalized` marks the trace-one case.
class DensityMatrix {
public:
  DensityMatrix(Matrix m, bool normalized, const Tolerances& tol = kTolerances);

  const Matrix& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  bool normalized() const { return normalized_; }

private:
  Matrix m_;
  bool normalized_;
};

/// Invertible matrix W, a purification of WW^*; `normalized` means Tr WW^* = 1.
class Purification {
public:
  Purification(Matrix w, bool normalized, const Tolerances& tol = kTolerances);

  const Matrix& mat() const { return w_; }
  Eigen::Index dim() const { return w_.rows(); }
  bool normalized() const { return normalized_; }

private:
  Matrix w_;
  bool normalized_;
};

/// Eigenvalues (ascending) and matching unitary eigenvectors of a hermitian
/// matrix. Backbone of every superoperator application.
struct SpectralData {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Eigen::Index dim() const { return eigenvalues.size(); }
};

/// Decompose a hermitian matrix; with `positive` set, eigenvalues must all
/// exceed the positivity tolerance (relative to the largest).
SpectralData spectral_decompose(const Matrix& h, bool positive,
                                const Tolerances& tol = kTolerances);

// ---------------------------------------------------------------------------
// superoperator calculus
//
// All operators here act in the eigenbasis of a positive matrix D: transform
// T into the eigenbasis, multiply entry (i,j) by a scalar function of the
// eigenvalue pair (d_i, d_j), transform back. They are never materialized as
// n^2 x n^2 matrices outside test oracles.

class Superoperator {
public:
  enum class Kind { X, XTilde, FuncOfX, InvLPlusR, InvLTildePlusRTilde };

  /// x = L R^{-1} = Ad D. Entry function d_i / d_j.
  static Superoperator x(SpectralData spectral);
  /// Same map built from D~ = W^* W instead of D = W W^*.
  static Superoperator x_tilde(const Purification& w);
  /// f(x) for a scalar function of the quotient d_i / d_j.
  static Superoperator func_of_x(SpectralData spectral,
                                 std::function<double(double)> f);
  /// (L + R)^{-1}: entry function 1 / (d_i + d_j).
  static Superoperator inv_l_plus_r(SpectralData spectral);
  /// (L~ + R~)^{-1} built from D~ = W^* W.
  static Superoperator inv_ltilde_plus_rtilde(const Purification& w);

  /// 1/(1+x) and (1-x)/(1+x), the two functions of x the curvature calculus
  /// uses throughout. Both are finite for any positive spectrum.
  static Superoperator inv_one_plus_x(SpectralData spectral);
  static Superoperator cayley_of_x(SpectralData spectral);

  Matrix apply(const Matrix& t) const;

  Kind kind() const { return kind_; }
  const SpectralData& spectral() const { return spectral_; }

private:
  Superoperator(Kind kind, SpectralData spectral,
                std::function<double(double, double)> fn);

  Kind kind_;
  SpectralData spectral_;
  RealMatrix coeff_;  // fn(d_i, d_j), precomputed
};

/// Unique hermitian G with DG + GD = Y, solved by Schur reduction and
/// back-substitution. Deliberately a different code path from
/// Superoperator::inv_l_plus_r; the two agree to ~1e-12 and are
/// cross-checked in the test suite.
Matrix solve_sylvester(const DensityMatrix& d, const Matrix& y);

/// Hermitian square root of a positive semidefinite matrix. Eigenvalues in
/// [-tol.positivity * ||P||_F, 0) are clamped to zero; anything lower throws.
Matrix matrix_sqrt(const Matrix& p, const Tolerances& tol = kTolerances);

}  // namespace bym
