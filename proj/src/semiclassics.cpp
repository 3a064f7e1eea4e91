#include "qbaker/semiclassics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qbaker {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// Gaussian tail cutoff: e^{-(T/sqrt(hbar))^2 / 2} < 1e-16 for T = 9 sqrt(hbar),
// with margin. Lattice sums and quadrature windows both use this.
double tail_radius(double hbar) { return 9.0 * std::sqrt(hbar); }

template <typename F>
cplx simpson_slice(F&& f, double a, double b) {
  return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

template <typename F>
cplx adaptive_simpson(F&& f, double a, double b, double tol, int depth,
                      cplx whole) {
  const double mid = 0.5 * (a + b);
  const cplx left = simpson_slice(f, a, mid);
  const cplx right = simpson_slice(f, mid, b);
  const cplx refined = left + right;
  const double err = std::abs(refined - whole);
  if (err < 15.0 * tol) {
    return refined + (refined - whole) / 15.0;
  }
  if (depth <= 0) {
    throw std::runtime_error("quadrature failed to converge");
  }
  return adaptive_simpson(f, a, mid, tol / 2.0, depth - 1, left) +
         adaptive_simpson(f, mid, b, tol / 2.0, depth - 1, right);
}

template <typename F>
cplx integrate(F&& f, double a, double b, double tol) {
  return adaptive_simpson(f, a, b, tol, 48, simpson_slice(f, a, b));
}

// Integrated Gaussian probability of |phi|^2-type density centered at c:
// integral over [a, b] of (pi hbar)^{-1/2} e^{-(t-c)^2/hbar} dt.
double gaussian_mass(double a, double b, double c, double hbar) {
  const double s = std::sqrt(hbar);
  return 0.5 * (std::erf((b - c) / s) - std::erf((a - c) / s));
}

// Coset interval [lo, hi) + period * Z for a Region.
struct Coset {
  double lo;
  double hi;
  double period;
  bool on_momentum;  // cut the momentum Gaussian instead of the position one
};

Coset coset_of(Region r) {
  switch (r) {
    case Region::left:
      return {0.0, 0.5, 1.0, false};
    case Region::right:
      return {0.5, 1.0, 1.0, false};
    case Region::bottom:
      return {0.0, 0.5, 1.0, true};
    case Region::top:
      return {0.5, 1.0, 1.0, true};
    case Region::even_x:
      return {0.0, 1.0, 2.0, false};
    case Region::odd_x:
      return {1.0, 2.0, 2.0, false};
    case Region::even_p:
      return {0.0, 1.0, 2.0, true};
    case Region::odd_p:
      return {1.0, 2.0, 2.0, true};
  }
  throw std::invalid_argument("projection_norm: unknown projector");
}

}  // namespace

CoherentStateParams::CoherentStateParams(double x0_, double p0_, double hbar_)
    : x0(x0_), p0(p0_), hbar(hbar_) {
  if (!std::isfinite(x0) || !std::isfinite(p0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("CoherentStateParams: non-finite parameter");
  }
  if (hbar <= 0.0) {
    throw std::invalid_argument("CoherentStateParams: hbar must be positive");
  }
}

CoherentStateParams CoherentStateParams::for_planck(double x0, double p0,
                                                    const PlanckN& planck) {
  return CoherentStateParams(x0, p0, planck.hbar());
}

cplx coherent_wavefunction(const CoherentStateParams& params, double x) {
  const double dx = x - params.x0;
  const double amp = std::pow(pi * params.hbar, -0.25) *
                     std::exp(-dx * dx / (2.0 * params.hbar));
  const double phase =
      params.p0 * x / params.hbar - params.p0 * params.x0 / (2.0 * params.hbar);
  return std::polar(amp, phase);
}

cplx expect_harmonic_continuum(const CoherentStateParams& params, int a, int b) {
  if (std::abs(a) > 8 || std::abs(b) > 8) {
    throw std::invalid_argument("expect_harmonic_continuum: |a|, |b| <= 8");
  }
  // V^b translates the wavefunction argument by 2 pi b hbar.
  const double shift = two_pi * b * params.hbar;
  const auto integrand = [&](double x) {
    return std::conj(coherent_wavefunction(params, x)) *
           std::polar(1.0, two_pi * a * x) *
           coherent_wavefunction(params, x + shift);
  };
  const double center = params.x0 - 0.5 * shift;
  const double radius = tail_radius(params.hbar) + 0.5 * std::abs(shift);
  return integrate(integrand, center - radius, center + radius, 1e-11);
}

cplx expect_harmonic_closed_form(const CoherentStateParams& params, int a,
                                 int b) {
  const double decay =
      std::exp(-pi * pi * params.hbar * (static_cast<double>(a) * a + static_cast<double>(b) * b));
  const double angle = two_pi * (a * params.x0 + b * params.p0) -
                       2.0 * pi * pi * a * b * params.hbar;
  return std::polar(decay, angle);
}

double projection_norm(const CoherentStateParams& params, Region projector) {
  const Coset coset = coset_of(projector);
  const double center = coset.on_momentum ? params.p0 : params.x0;
  const double radius = tail_radius(params.hbar) + coset.period;
  const long k_lo =
      static_cast<long>(std::floor((center - radius - coset.hi) / coset.period));
  const long k_hi =
      static_cast<long>(std::ceil((center + radius - coset.lo) / coset.period));
  double total = 0.0;
  for (long k = k_lo; k <= k_hi; ++k) {
    const double shift = coset.period * static_cast<double>(k);
    total += gaussian_mass(coset.lo + shift, coset.hi + shift, center, params.hbar);
  }
  return total;
}

long noncommute_min_kmax(double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("noncommute_min_kmax: hbar must be positive");
  }
  long k = static_cast<long>(std::ceil(1.0 / (pi * hbar)));
  if (k % 2 == 0) ++k;
  while (pi * hbar * static_cast<double>(k) <= 1.0) k += 2;
  return k;
}

NoncommuteResult noncommute_demo(double hbar, long k_max) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("noncommute_demo: hbar must be positive");
  }
  if (k_max % 2 == 0 || k_max < 1 || pi * hbar * static_cast<double>(k_max) <= 1.0) {
    throw std::invalid_argument(
        "noncommute_demo: k_max must be odd with pi * hbar * k_max > 1");
  }
  // <psi| L E_p |phi> = -(i/pi) sum_{k odd} (1/k) |[1/2 - pi hbar k, 1 - pi
  // hbar k) intersect [0, 1/2)|. Negative k contributes nothing: the shifted
  // interval then lies entirely right of 1/2.
  double sum = 0.0;
  for (long k = 1; k <= k_max; k += 2) {
    const double s = pi * hbar * static_cast<double>(k);
    const double lo = std::max(0.0, 0.5 - s);
    const double hi = std::min(0.5, 1.0 - s);
    if (hi > lo) sum += (hi - lo) / static_cast<double>(k);
  }
  return NoncommuteResult{cplx{0.0, -sum / pi}, cplx{0.0, 0.0}};
}

std::vector<cplx> project_to_comb(const CoherentStateParams& params,
                                  const PlanckN& planck) {
  if (params.hbar != planck.hbar()) {
    throw std::invalid_argument(
        "project_to_comb: params.hbar must equal 1/(2 pi N); build the "
        "params with CoherentStateParams::for_planck");
  }
  if (!(params.x0 > 0.0 && params.x0 < 1.0)) {
    throw std::invalid_argument("project_to_comb: x0 must lie in (0, 1)");
  }
  const int n = planck.n();
  const double radius = tail_radius(params.hbar);
  const long k_lo = static_cast<long>(std::floor(params.x0 - radius)) - 1;
  const long k_hi = static_cast<long>(std::ceil(params.x0 + radius)) + 1;
  std::vector<cplx> coeffs(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    cplx sum{0.0, 0.0};
    for (long k = k_lo; k <= k_hi; ++k) {
      const double x = static_cast<double>(m) / n + static_cast<double>(k);
      if (std::abs(x - params.x0) <= radius) {
        sum += coherent_wavefunction(params, x);
      }
    }
    coeffs[static_cast<std::size_t>(m)] = sum;
  }
  const double norm = vector_norm(coeffs);
  if (!(norm > 0.0)) {
    throw std::invalid_argument("project_to_comb: packet has zero comb norm");
  }
  for (auto& c : coeffs) c /= norm;
  return coeffs;
}

std::vector<LimitScanRow> weak_limit_scan(double x0, double p0, int a, int b,
                                          const std::vector<int>& n_list,
                                          PropagatorVariant variant) {
  const TorusPoint start(x0, p0);  // validates range and finiteness
  if (x0 == 0.0 || x0 == 0.5 || p0 == 0.0 || p0 == 0.5) {
    throw std::invalid_argument(
        "weak_limit_scan: (x0, p0) lies on a region boundary");
  }
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw std::invalid_argument("weak_limit_scan: n_list must be ascending");
    }
  }

  const TorusPoint image = torus_baker(start);
  const cplx classical = std::polar(1.0, two_pi * (a * image.x + b * image.p));

  std::vector<LimitScanRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    const PlanckN planck(n);
    const auto params = CoherentStateParams::for_planck(x0, p0, planck);
    const std::vector<cplx> packet = project_to_comb(params, planck);
    const ComplexMatrix f = build(variant, planck);
    const std::vector<cplx> evolved = f * packet;
    // The shift matrix advances the comb index, which translates packets by
    // +1/N; as an exponential it is e^{-2 pi i p}. The quantized torus
    // harmonic for classical e^{2 pi i (a x + b p)} is therefore U^a V^{-b}.
    const std::vector<cplx> observed = harmonic(planck, a, -b) * evolved;
    const cplx quantum = dotc(evolved, observed);
    rows.push_back(LimitScanRow{n, quantum, classical, std::abs(quantum - classical)});
  }
  return rows;
}

}  // namespace qbaker
