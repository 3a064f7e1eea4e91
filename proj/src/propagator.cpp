#include "qbaker/propagator.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qbaker {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// blockdiag(G, sign * G) embedded in an N x N matrix, G = dft(N/2).
ComplexMatrix half_dft_blocks(int n, double lower_sign) {
  const int half = n / 2;
  const ComplexMatrix g = dft(static_cast<std::size_t>(half));
  ComplexMatrix d(static_cast<std::size_t>(n));
  for (int i = 0; i < half; ++i) {
    for (int j = 0; j < half; ++j) {
      d(i, j) = g(i, j);
      d(i + half, j + half) = lower_sign * g(i, j);
    }
  }
  return d;
}

void scale_rows(ComplexMatrix& m, const std::vector<cplx>& factors) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) m(i, j) *= factors[i];
  }
}

void scale_cols(ComplexMatrix& m, const std::vector<cplx>& factors) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) m(i, j) *= factors[j];
  }
}

}  // namespace

std::string_view variant_name(PropagatorVariant v) {
  return v == PropagatorVariant::corrected ? "corrected" : "bv";
}

ComplexMatrix build_bv(const PlanckN& planck) {
  // Inverse DFT taken as the conjugate transpose, never by inversion.
  const ComplexMatrix inv_f = adjoint(dft(static_cast<std::size_t>(planck.n())));
  return inv_f * half_dft_blocks(planck.n(), +1.0);
}

ComplexMatrix build_corrected(const PlanckN& planck) {
  const int n = planck.n();
  const ComplexMatrix inv_f = adjoint(dft(static_cast<std::size_t>(n)));
  ComplexMatrix m = inv_f * half_dft_blocks(n, -1.0);
  const ComplexMatrix zdiag = z_matrix(planck);
  std::vector<cplx> z(static_cast<std::size_t>(n));
  std::vector<cplx> z_inv_sq(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const cplx zk = zdiag(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    z[static_cast<std::size_t>(k)] = zk;
    z_inv_sq[static_cast<std::size_t>(k)] = std::conj(zk) * std::conj(zk);
  }
  scale_rows(m, z);
  scale_cols(m, z_inv_sq);
  return m;
}

ComplexMatrix build(PropagatorVariant variant, const PlanckN& planck) {
  return variant == PropagatorVariant::corrected ? build_corrected(planck)
                                                 : build_bv(planck);
}

cplx closed_form_entry(const PlanckN& planck, int n, int m) {
  const int dim = planck.n();
  if (n < 0 || n >= dim || m < 0 || m >= dim) {
    throw std::invalid_argument("closed_form_entry: index out of range");
  }
  if (n % 2 == 0) {
    throw std::invalid_argument("closed_form_entry: row index must be odd");
  }
  const int zeta = n - 2 * m;
  if (zeta % dim == 0) {
    throw std::domain_error("closed_form_entry: cot pole at n - 2m = 0 mod N");
  }
  const double t = pi * zeta / dim;
  const double cot = std::cos(t) / std::sin(t);
  return std::polar(1.0, t) * (std::sqrt(2.0) / dim) * cplx{1.0, cot};
}

double VariantComparison::max_phase_residual() const {
  double m = 0.0;
  for (const auto& e : odd_entries) m = std::max(m, e.phase_residual);
  return m;
}

VariantComparison compare_variants(const PlanckN& planck) {
  const int dim = planck.n();
  const ComplexMatrix corrected = build_corrected(planck);
  const ComplexMatrix bv = build_bv(planck);
  VariantComparison cmp;
  cmp.odd_entries.reserve(static_cast<std::size_t>(dim) * dim / 2);
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) {
      const cplx c = corrected(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
      const cplx b = bv(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
      if (n % 2 == 0) {
        cmp.n_even_residual = std::max(cmp.n_even_residual, std::abs(c - b));
      } else {
        const int zeta = (m < dim / 2) ? n - 2 * m : n - 2 * (m - dim / 2);
        const double residual = std::abs(c - std::polar(1.0, pi * zeta / dim) * b);
        cmp.odd_entries.push_back(OddEntryPhase{n, m, zeta, residual});
      }
    }
  }
  return cmp;
}

// --- pipeline construction -------------------------------------------------
//
// The three stages below apply the operator factorization of the propagator
// to explicit comb coefficients on the doubled (periodic + momentum-
// antiperiodic) sector space. Composing them column by column rebuilds the
// matrix without ever forming the four matrix factors, which makes the
// result an independent cross-check of build_corrected.

namespace {

struct SectorTransforms {
  ComplexMatrix fwd;  // dft(N): position-comb -> momentum-comb coefficients
  ComplexMatrix inv;  // its adjoint
};

SectorTransforms make_transforms(int n) {
  SectorTransforms t{dft(static_cast<std::size_t>(n)), ComplexMatrix{}};
  t.inv = adjoint(t.fwd);
  return t;
}

// (B + Y^{-1} T): identity on the periodic sector (where Y acts trivially
// and B + T = I); on the antiperiodic sector Y^{-1} contributes a sign, so
// the lower momentum half keeps sign +1 and the upper half flips.
void momentum_half_projectors(const SectorTransforms& t, int n,
                              PipelineState& state) {
  std::vector<cplx> momentum = t.fwd * state.antiperiodic;
  for (int a = n / 2; a < n; ++a) momentum[static_cast<std::size_t>(a)] *= -1.0;
  state.antiperiodic = t.inv * momentum;
}

// (E_x + X^{-1/2} O_x): even comb indices are fixed within their sector;
// odd indices hop sectors carrying the phase e^{+-i pi m / N}.
void position_parity_merge(int n, PipelineState& state) {
  for (int m = 1; m < n; m += 2) {
    const cplx phase = std::polar(1.0, pi * m / n);
    const cplx from_periodic = state.periodic[static_cast<std::size_t>(m)];
    const cplx from_anti = state.antiperiodic[static_cast<std::size_t>(m)];
    state.periodic[static_cast<std::size_t>(m)] = phase * from_anti;
    state.antiperiodic[static_cast<std::size_t>(m)] = std::conj(phase) * from_periodic;
  }
}

}  // namespace

PipelineResult build_via_pipeline(const PlanckN& planck) {
  const int n = planck.n();
  const SectorTransforms transforms = make_transforms(n);
  PipelineResult result{ComplexMatrix(static_cast<std::size_t>(n)), 0.0};

  for (int m = 0; m < n; ++m) {
    PipelineState state(static_cast<std::size_t>(n));
    // Squeeze split: comb m lands on comb 2m (or 2m - N), half of the weight
    // in each sector. The halves carry the same algebra, written with the
    // in-range target index.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (m < n / 2) {
      const int target = 2 * m;
      state.periodic[static_cast<std::size_t>(target)] = inv_sqrt2;
      state.antiperiodic[static_cast<std::size_t>(target)] =
          inv_sqrt2 * std::polar(1.0, -two_pi * m / n);
    } else {
      const int target = 2 * m - n;
      state.periodic[static_cast<std::size_t>(target)] = inv_sqrt2;
      state.antiperiodic[static_cast<std::size_t>(target)] =
          -inv_sqrt2 * std::polar(1.0, -two_pi * (m - n / 2) / n);
    }

    momentum_half_projectors(transforms, n, state);
    position_parity_merge(n, state);

    for (int row = 0; row < n; ++row) {
      result.matrix(static_cast<std::size_t>(row), static_cast<std::size_t>(m)) =
          state.periodic[static_cast<std::size_t>(row)];
      result.sector_residual = std::max(
          result.sector_residual,
          std::abs(state.antiperiodic[static_cast<std::size_t>(row)]));
    }
  }
  return result;
}

std::vector<double> spectrum(const ComplexMatrix& m) {
  const double residual = unitarity_residual(m);
  if (residual > 1e-8) {
    std::ostringstream msg;
    msg << "spectrum: matrix is not unitary (residual " << residual << ")";
    throw std::invalid_argument(msg.str());
  }
  using EigenMat =
      Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const EigenMat> mapped(m.data(), static_cast<Eigen::Index>(m.dim()),
                                    static_cast<Eigen::Index>(m.dim()));
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(mapped, /*computeU=*/false);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("spectrum: Schur reduction failed");
  }

  // Phase extraction tolerance: eigenphases within 1e-10 of 2 pi wrap to 0.
  constexpr double phase_tol = 1e-10;
  std::vector<double> phases;
  phases.reserve(m.dim());
  for (Eigen::Index i = 0; i < schur.matrixT().rows(); ++i) {
    double phase = std::arg(schur.matrixT()(i, i));
    if (phase < 0.0) phase += two_pi;
    if (phase >= two_pi - phase_tol) phase = 0.0;
    phases.push_back(phase);
  }
  std::stable_sort(phases.begin(), phases.end());
  return phases;
}

double phase_decay_stat(const PlanckN& planck) {
  const int dim = planck.n();
  const ComplexMatrix corrected = build_corrected(planck);
  const double threshold = 1.0 / std::sqrt(2.0 * dim);
  double stat = 0.0;
  for (int n = 1; n < dim; n += 2) {
    for (int m = 0; m < dim; ++m) {
      if (std::abs(corrected(static_cast<std::size_t>(n),
                             static_cast<std::size_t>(m))) <= threshold) {
        continue;
      }
      int zeta = (n - 2 * m) % dim;
      if (zeta < 0) zeta += dim;
      if (zeta > dim / 2) zeta -= dim;  // symmetric residue
      stat = std::max(stat, std::abs(static_cast<double>(zeta)) / dim);
    }
  }
  return stat;
}

}  // namespace qbaker
