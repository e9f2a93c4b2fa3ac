#include "bym/yangmills.hpp"

#include <cmath>

#include "bym/random.hpp"

namespace bym {

namespace {

// Everything the summand needs at a fixed base point.
struct Context {
  Matrix wadj;
  Matrix wadj_inv;
  Superoperator inv1px;
  Superoperator cayley;
  Superoperator x;

  explicit Context(const Matrix& w)
      : wadj(w.adjoint()),
        wadj_inv(w.adjoint().inverse()),
        inv1px(Superoperator::inv_one_plus_x(density_spectrum(w))),
        cayley(Superoperator::cayley_of_x(inv1px.spectral())),
        x(Superoperator::x(inv1px.spectral())) {}

  static SpectralData density_spectrum(const Matrix& w) {
    Matrix d = w * w.adjoint();
    return spectral_decompose((d + d.adjoint()) / 2.0, true);
  }

  // [A, ((1-x)/(1+x))[A,G] - (1/(1+x))(GA + x(AG))] - [A^2, G]
  Matrix bracket(const Matrix& a, const Matrix& g) const {
    const Matrix t1 = cayley.apply(commutator(a, g));
    const Matrix t2 = inv1px.apply(g * a + x.apply(a * g));
    return commutator(a, t1 - t2) - commutator(a * a, g);
  }

  Matrix summand(const Matrix& a, const Matrix& g) const {
    return 2.0 * wadj * inv1px.apply(bracket(a, g)) * wadj_inv;
  }
};

void require_diagonal(const Purification& lambda) {
  if (!is_diagonal(lambda.mat()))
    throw Error(ErrorKind::NotDiagonal, "this operation expects a diagonal base point");
}

std::string probe_label(const char* family, Eigen::Index i, Eigen::Index j) {
  std::string s(family);
  s += '_';
  s += std::to_string(i);
  s += std::to_string(j);
  return s;
}

}  // namespace

Matrix divergence_summand(const Purification& lambda, const Matrix& g_alpha,
                          const Matrix& g) {
  require_diagonal(lambda);
  if (!is_hermitian(g_alpha) || !is_hermitian(g))
    throw Error(ErrorKind::NotHermitian, "divergence summand takes hermitian generators");
  return Context(lambda.mat()).summand(g_alpha, g);
}

Matrix curvature_flat_derivative(const Purification& w, const Matrix& g_alpha,
                                 const Matrix& g) {
  // Omega(t) = 2 W(t)^* Y(t) W(t)^{*-1} with Y(t) solving
  // Y D(t) + D(t) Y = [G_a, G] D(t) and D(t) = W(t) W(t)^*. Expanding to
  // first order in t gives dOmega = 2 W^* ([G_a, Y0] + Y1) W^{*-1}.
  const Matrix& wm = w.mat();
  Matrix d0 = wm * wm.adjoint();
  d0 = (d0 + d0.adjoint()) / 2.0;
  const DensityMatrix base(d0, false);
  const Matrix c = commutator(g_alpha, g);
  const Matrix d1 = g_alpha * d0 + d0 * g_alpha;
  const Matrix y0 = solve_sylvester(base, c * d0);
  const Matrix y1 = solve_sylvester(base, c * d1 - y0 * d1 - d1 * y0);
  return 2.0 * wm.adjoint() * (commutator(g_alpha, y0) + y1) * wm.adjoint().inverse();
}

Matrix divergence_summand_fd(const Purification& lambda, const Matrix& g_alpha,
                             const Matrix& g, double h) {
  require_diagonal(lambda);
  const Matrix shift = h * g_alpha * lambda.mat();
  auto displaced = [&](double sign) {
    try {
      return Purification(lambda.mat() + sign * shift, false);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotPositiveDefinite)
        throw Error(ErrorKind::StepTooLarge,
                    "finite-difference step makes the purification singular");
      throw;
    }
  };
  const Matrix deriv =
      (curvature_hh(displaced(+1.0), g_alpha, g) - curvature_hh(displaced(-1.0), g_alpha, g)) /
      (2.0 * h);
  const Matrix omega_first = curvature_hh(lambda, g_alpha * g_alpha, g);
  const Matrix omega_second = curvature(lambda, g_alpha, g * g_alpha * lambda.mat());
  return deriv - omega_first - omega_second;
}

Matrix codifferential(const Purification& lambda, const Matrix& g,
                      bool normalized_case) {
  require_diagonal(lambda);
  const HorizontalFrame frame = horizontal_frame(lambda, normalized_case);
  const Context ctx(lambda.mat());
  Matrix sum = Matrix::Zero(lambda.dim(), lambda.dim());
  for (const Matrix& g_alpha : frame.generators) sum += ctx.summand(g_alpha, g);
  return -sum;
}

Matrix sign_split_sum(const Purification& lambda, const Matrix& g, int sign) {
  require_diagonal(lambda);
  if (sign != 1 && sign != -1)
    throw Error(ErrorKind::ParseError, "sign branch must be +1 or -1");
  const Eigen::Index n = lambda.dim();
  const Context ctx(lambda.mat());
  const double s = static_cast<double>(sign);
  Matrix total = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double di = std::norm(lambda.mat()(i, i));
    for (Eigen::Index j = 0; j < n; ++j) {
      const double dj = std::norm(lambda.mat()(j, j));
      const Matrix a = matrix_unit(n, i, j) + s * matrix_unit(n, j, i);
      total += (s / (di + dj)) * ctx.bracket(a, g);
    }
  }
  return total;
}

Matrix normal_correction(const Purification& lambda, const Matrix& g_alpha,
                         const Matrix& g) {
  const Matrix identity = Matrix::Identity(lambda.dim(), lambda.dim());
  const Matrix lam = lambda.mat();
  const double coeff_first = hs_metric(g_alpha * g_alpha * lam, lam);
  const double coeff_second = hs_metric(g * g_alpha * lam, lam);
  return -coeff_first * curvature_hh(lambda, g, identity) +
         coeff_second * curvature_hh(lambda, g_alpha, identity);
}

double curvature_scale(const Purification& lambda, const HorizontalFrame& frame) {
  const Context ctx(lambda.mat());
  double scale = 0.0;
  const auto count = frame.generators.size();
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b) {
      const Matrix omega =
          2.0 * ctx.wadj *
          ctx.inv1px.apply(commutator(frame.generators[a], frame.generators[b])) *
          ctx.wadj_inv;
      scale = std::max(scale, frobenius(omega));
    }
  return scale;
}

namespace detail {

Matrix codifferential_at(const Matrix& w, const std::vector<Matrix>& frame,
                         const Matrix& g) {
  const Context ctx(w);
  Matrix sum = Matrix::Zero(w.rows(), w.cols());
  for (const Matrix& g_alpha : frame) sum += ctx.summand(g_alpha, g);
  return -sum;
}

}  // namespace detail

double resolve_ym_tolerance(int dim) {
  return dim <= 2 ? kTolerances.ym_dim2 : kTolerances.ym_default;
}

YmReport verify_yang_mills(const YmConfig& config) {
  if (config.dim < 1)
    throw Error(ErrorKind::DimensionMismatch, "verification dimension must be >= 1");
  if (config.samples < 1)
    throw Error(ErrorKind::ParseError, "at least one sample is required");

  const Eigen::Index n = config.dim;
  YmReport report;
  report.dim = config.dim;
  report.seed = config.seed;
  report.normalized = config.normalized;
  report.samples = config.samples;
  report.tolerance =
      config.tolerance > 0.0 ? config.tolerance : resolve_ym_tolerance(config.dim);

  Rng rng(config.seed);
  // cond_cap bounds the eigenvalue ratio of D; singular values of W carry
  // its square root.
  const double sv_cap = std::sqrt(config.cond_cap);

  for (int sample = 0; sample < config.samples; ++sample) {
    const Purification w = random_purification(rng, n, config.normalized, sv_cap);
    Eigen::JacobiSVD<Matrix> svd(w.mat(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix diag = Matrix::Zero(n, n);
    diag.diagonal() = svd.singularValues().cast<Complex>();
    const Purification lambda(diag, config.normalized);

    const HorizontalFrame frame = horizontal_frame(lambda, config.normalized);
    const double scale = curvature_scale(lambda, frame);
    report.scale = std::max(report.scale, scale);

    std::vector<std::pair<std::string, Matrix>> probes;
    for (Eigen::Index i = 0; i < n; ++i)
      probes.emplace_back(probe_label("e", i, i), matrix_unit(n, i, i));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        probes.emplace_back(probe_label("s", i, j),
                            matrix_unit(n, i, j) + matrix_unit(n, j, i));
        probes.emplace_back(probe_label("a", i, j),
                            Complex(0.0, 1.0) *
                                (matrix_unit(n, i, j) - matrix_unit(n, j, i)));
      }
    for (int r = 0; r < config.random_probes; ++r)
      probes.emplace_back("rand_" + std::to_string(r), rng.hermitian(n));

    for (const auto& [label, probe] : probes) {
      const double residual = frobenius(codifferential(lambda, probe, config.normalized));
      report.per_probe.push_back({sample, label, residual, scale});
      report.max_residual = std::max(report.max_residual, residual);
    }

    if (sample == 0) {
      // Re-verify once without the diagonal reduction: conjugate the frame
      // onto the fiber of W itself and evaluate there.
      const Matrix v = svd.matrixU();
      std::vector<Matrix> conjugated;
      conjugated.reserve(frame.generators.size());
      for (const Matrix& g_alpha : frame.generators)
        conjugated.push_back(v * g_alpha * v.adjoint());
      for (int r = 0; r < config.random_probes; ++r) {
        const Matrix probe = v * rng.hermitian(n) * v.adjoint();
        const double residual =
            frobenius(detail::codifferential_at(w.mat(), conjugated, probe));
        report.per_probe.push_back({sample, "full_rand_" + std::to_string(r), residual, scale});
        report.max_residual = std::max(report.max_residual, residual);
      }
    }

    if (config.on_sample) config.on_sample(sample, report.max_residual);
  }

  report.passed = report.max_residual <= report.tolerance * std::max(report.scale, 1.0);
  return report;
}

}  // namespace bym
