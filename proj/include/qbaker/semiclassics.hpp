#pragma once

#include <vector>

#include "qbaker/classical_map.hpp"
#include "qbaker/complex_matrix.hpp"
#include "qbaker/propagator.hpp"
#include "qbaker/torus_kinematics.hpp"

namespace qbaker {

/// Minimal-uncertainty Gaussian packet of width sqrt(hbar) centered at
/// (x0, p0).
struct CoherentStateParams {
  double x0;
  double p0;
  double hbar;

  CoherentStateParams(double x0, double p0, double hbar);

  /// Packet whose hbar matches the lattice scale 1/(2 pi N).
  static CoherentStateParams for_planck(double x0, double p0,
                                        const PlanckN& planck);
};

/// (pi hbar)^{-1/4} e^{-(x-x0)^2 / 2 hbar} e^{i p0 x / hbar - i p0 x0 / 2 hbar}
cplx coherent_wavefunction(const CoherentStateParams& params, double x);

/// <phi| U^a V^b |phi> by adaptive quadrature of the shifted-Gaussian
/// overlap integral. Requires |a|, |b| <= 8. Throws std::runtime_error if
/// the quadrature fails to converge to the 1e-11 tolerance.
cplx expect_harmonic_continuum(const CoherentStateParams& params, int a, int b);

/// Closed form of the same expectation value by completing the square:
///   e^{2 pi i (a x0 + b p0)} e^{-pi^2 hbar (a^2 + b^2)} e^{-2 pi^2 i a b hbar}.
/// Kept as an independent cross-check of the quadrature (the two are compared
/// in the test suite; the quadrature result is the one reported).
cplx expect_harmonic_closed_form(const CoherentStateParams& params, int a,
                                 int b);

/// ||Pi |phi>||^2 where Pi is the coset projector named by `projector`.
/// left/right/even_x/odd_x cut the position Gaussian, bottom/top/even_p/odd_p
/// the momentum Gaussian; evaluated as an erf lattice sum truncated at
/// Gaussian tail mass 1e-16.
double projection_norm(const CoherentStateParams& params, Region projector);

struct NoncommuteResult {
  cplx le_p;  // <psi| L E_p |phi> for the box states below
  cplx ep_l;  // <psi| E_p L |phi>, exactly zero
};

/// The projector non-commutativity example: psi = indicator of [0, 1/2),
/// phi = indicator of [1/2, 1). <psi|L E_p|phi> is evaluated as the odd-k
/// overlap sum and tends to -i log(2)/pi as hbar -> 0, while <psi|E_p L|phi>
/// vanishes identically. Requires odd k_max with pi * hbar * k_max > 1 so
/// every nonzero term of the sum is included.
NoncommuteResult noncommute_demo(double hbar, long k_max);

/// Smallest admissible k_max for noncommute_demo at this hbar.
long noncommute_min_kmax(double hbar);

/// Coefficients of the packet on the N-comb position basis:
/// c_m proportional to sum_k phi(m/N + k), tail-truncated at 1e-16 and
/// normalized to unit norm. Requires params.hbar == 1/(2 pi N) (use
/// for_planck) and x0 in (0, 1).
std::vector<cplx> project_to_comb(const CoherentStateParams& params,
                                  const PlanckN& planck);

struct LimitScanRow {
  int n;
  cplx quantum_value;
  cplx classical_value;
  double abs_error;
};

/// One-step classical-limit scan: for each N in n_list compares the
/// expectation of the quantized harmonic e^{2 pi i (a x + b p)} in the
/// evolved packet against the classical harmonic at the baker image of
/// (x0, p0). The quantized harmonic is U^a V^{-b}: the shift matrix V
/// advances comb indices, i.e. acts as e^{-2 pi i p} on packets. (x0, p0)
/// must avoid the region boundaries x0, p0 in {0, 1/2}; n_list must be even
/// and ascending.
std::vector<LimitScanRow> weak_limit_scan(double x0, double p0, int a, int b,
                                          const std::vector<int>& n_list,
                                          PropagatorVariant variant);

}  // namespace qbaker
