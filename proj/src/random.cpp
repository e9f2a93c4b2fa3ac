#include "bym/random.hpp"

#include <cmath>
#include <numbers>

namespace bym {

double Rng::uniform() {
  const std::uint64_t raw = gen_();
  return (static_cast<double>(raw >> 11) + 0.5) * 0x1p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  have_spare_ = true;
  return r * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return Complex(r * std::cos(angle), r * std::sin(angle)) / std::sqrt(2.0);
}

Matrix Rng::ginibre(Eigen::Index n) {
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = complex_gaussian();
  return m;
}

Matrix Rng::hermitian(Eigen::Index n) {
  Matrix a = ginibre(n);
  return (a + a.adjoint()) / 2.0;
}

Matrix Rng::unitary(Eigen::Index n) {
  Matrix a = ginibre(n);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

Purification random_purification(Rng& rng, Eigen::Index n, bool normalized,
                                 double cond_cap) {
  if (n < 1) throw Error(ErrorKind::DimensionMismatch, "dimension must be >= 1");
  if (cond_cap < 1.0)
    throw Error(ErrorKind::ParseError, "cond_cap must be at least 1");
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Matrix w = rng.ginibre(n);
    Eigen::JacobiSVD<Matrix> svd(w);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > cond_cap) continue;
    if (normalized) w /= w.norm();
    return Purification(std::move(w), normalized);
  }
  throw Error(ErrorKind::ResampleLimitExceeded,
              "no draw met the conditioning cap in 1000 attempts");
}

Purification random_purification(Eigen::Index n, std::uint64_t seed, bool normalized,
                                 double cond_cap) {
  Rng rng(seed);
  return random_purification(rng, n, normalized, cond_cap);
}

DensityMatrix random_density(Rng& rng, Eigen::Index n, double cond_cap) {
  Purification w = random_purification(rng, n, false, cond_cap);
  Matrix d = w.mat() * w.mat().adjoint();
  d /= d.trace().real();
  return DensityMatrix((d + d.adjoint()) / 2.0, true);
}

}  // namespace bym
