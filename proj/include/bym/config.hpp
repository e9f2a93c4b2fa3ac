#pragma once

namespace bym {

/// Central record of all default tolerances. Norm-relative unless noted.
struct Tolerances {
  double hermitian = 1e-12;           // absolute, entrywise
  double positivity = 1e-12;          // relative to largest eigenvalue / singular value
  double trace_one = 1e-12;           // absolute on |Tr - 1|
  double reconstruction = 1e-12;      // spectral reconstruction, relative Frobenius
  double sqrt_residual = 1e-11;       // ||S^2 - P||_F relative to ||P||_F
  double split_consistency = 1e-11;   // internal horizontal/vertical cross-check
  double base_point = 1e-10;          // transport start-point match, relative Frobenius
  double cond_cap = 1e3;              // eigenvalue-ratio cap on D for verification entry points
  double ym_default = 1e-8;           // Yang-Mills residual, relative to curvature scale
  double ym_dim2 = 1e-10;             // tighter bound available for n = 2
};

inline constexpr Tolerances kTolerances{};

}  // namespace bym
