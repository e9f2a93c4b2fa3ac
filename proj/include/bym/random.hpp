#pragma once

#include <cstdint>
#include <random>

#include "bym/core.hpp"

namespace bym {

/// Deterministic random source: MT19937-64 underneath, with the uniform and
/// gaussian maps implemented explicitly so the stream is bit-reproducible
/// across platforms (std::normal_distribution is not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in (0,1): ((raw >> 11) + 0.5) * 2^-53.
  double uniform();

  /// Standard normal via Box-Muller on the uniform stream; values are
  /// produced in pairs and the spare is cached.
  double gaussian();

  /// Standard complex gaussian, E|z|^2 = 1: one Box-Muller pair per entry.
  Complex complex_gaussian();

  /// n x n matrix of i.i.d. standard complex gaussians, row-major fill.
  Matrix ginibre(Eigen::Index n);

  /// Random hermitian matrix (A + A^*)/2 from a ginibre draw.
  Matrix hermitian(Eigen::Index n);

  /// Haar-distributed unitary: QR of a ginibre matrix with the R diagonal
  /// phases absorbed into Q.
  Matrix unitary(Eigen::Index n);

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Invertible W with i.i.d. complex gaussian entries, resampled until the
/// singular-value ratio is at most cond_cap; rescaled to Tr WW^* = 1 when
/// normalized. Deterministic in (n, seed).
Purification random_purification(Eigen::Index n, std::uint64_t seed, bool normalized,
                                 double cond_cap);

/// Same draw from a live stream (used by the verification driver so one seed
/// covers a whole campaign).
Purification random_purification(Rng& rng, Eigen::Index n, bool normalized,
                                 double cond_cap);

/// Trace-one positive density matrix obtained by projecting a conditioned
/// purification draw.
DensityMatrix random_density(Rng& rng, Eigen::Index n, double cond_cap);

}  // namespace bym
