// End-to-end acceptance suite. Each numbered criterion prints one PASS/FAIL
// line with its worst residual and tolerance; the process exits nonzero if
// any criterion fails. Runs in well under a minute at desk scale.

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qbaker/classical_map.hpp"
#include "qbaker/complex_matrix.hpp"
#include "qbaker/propagator.hpp"
#include "qbaker/semiclassics.hpp"
#include "qbaker/torus_kinematics.hpp"

using namespace qbaker;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// Frozen on the first oracle run: max |P F P - F| for the Balazs-Voros
// matrix at N = 4 (numerically 1/sqrt(2)). The corrected variant drives this
// residual to rounding level; the original quantization does not.
constexpr double kBvParityResidualN4 = 0.70710678118654746;

int failures = 0;

void report(int index, const char* name, bool passed, double residual,
            double tolerance) {
  std::printf("%s  %2d  %-28s (worst residual %.3e, tol %.3e)\n",
              passed ? "PASS" : "FAIL", index, name, residual, tolerance);
  if (!passed) ++failures;
}

void report_plain(int index, const char* name, bool passed,
                  const std::string& detail) {
  std::printf("%s  %2d  %-28s (%s)\n", passed ? "PASS" : "FAIL", index, name,
              detail.c_str());
  if (!passed) ++failures;
}

const std::vector<int> kPowerSizes = {2, 4, 8, 16, 32, 64, 128, 256};

// 1. Ground-truth matrices at N = 2.
void criterion_matrix_ground_truth() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix corrected(2), bv(2);
  corrected(0, 0) = s;
  corrected(0, 1) = s;
  corrected(1, 0) = cplx{0.0, s};
  corrected(1, 1) = cplx{0.0, -s};
  bv(0, 0) = s;
  bv(0, 1) = s;
  bv(1, 0) = s;
  bv(1, 1) = -s;
  const double residual =
      std::max(max_abs_diff(build_corrected(PlanckN(2)), corrected),
               max_abs_diff(build_bv(PlanckN(2)), bv));
  report(1, "matrix ground truth", residual < 1e-12, residual, 1e-12);
}

// 2. Unitarity of both variants across the size sweep.
void criterion_unitarity() {
  double worst = 0.0;
  for (int n : kPowerSizes) {
    const PlanckN planck(n);
    worst = std::max(worst, unitarity_residual(build_corrected(planck)));
    worst = std::max(worst, unitarity_residual(build_bv(planck)));
  }
  report(2, "unitarity", worst < 1e-11, worst, 1e-11);
}

// 3. Even rows identical, odd rows related by the e^{i pi zeta / N} phase.
void criterion_variant_relation() {
  double worst_even = 0.0;
  double worst_odd = 0.0;
  for (int n : kPowerSizes) {
    const VariantComparison cmp = compare_variants(PlanckN(n));
    worst_even = std::max(worst_even, cmp.n_even_residual);
    worst_odd = std::max(worst_odd, cmp.max_phase_residual());
  }
  const bool passed = worst_even < 1e-12 && worst_odd < 1e-10;
  report(3, "variant phase relation", passed, std::max(worst_even, worst_odd),
         1e-10);
}

// 4. Parity restored by the correction, broken by the original quantization.
void criterion_parity() {
  double worst = 0.0;
  for (int n : kPowerSizes) {
    if (n < 4) continue;
    const PlanckN planck(n);
    const ComplexMatrix f = build_corrected(planck);
    const ComplexMatrix p = parity_matrix(planck);
    worst = std::max(worst, max_abs_diff(p * (f * p), f));
  }
  const PlanckN planck4(4);
  const ComplexMatrix bv = build_bv(planck4);
  const ComplexMatrix p4 = parity_matrix(planck4);
  const double bv_residual = max_abs_diff(p4 * (bv * p4), bv);
  const bool passed = worst < 1e-12 && bv_residual > 1e-2 &&
                      std::abs(bv_residual - kBvParityResidualN4) < 1e-9;
  report_plain(4, "parity symmetry", passed,
               "corrected residual " + std::to_string(worst) +
                   " < 1e-12; bv residual at N=4 " + std::to_string(bv_residual) +
                   " pinned");
}

// 5. Time reversal: conjugation by the DFT plus complex conjugation maps
//    each propagator to its adjoint.
void criterion_time_reversal() {
  double worst = 0.0;
  for (int n : {2, 4, 8, 16, 32, 64}) {
    const PlanckN planck(n);
    for (PropagatorVariant variant :
         {PropagatorVariant::corrected, PropagatorVariant::balazs_voros}) {
      const ComplexMatrix f = build(variant, planck);
      worst = std::max(worst, max_abs_diff(time_reversal_image(f), adjoint(f)));
    }
  }
  report(5, "time reversal", worst < 1e-12, worst, 1e-12);
}

// 6. Stage-by-stage operator pipeline equals the matrix product, and the
//    antiperiodic sector empties out.
void criterion_pipeline_oracle() {
  double worst_entry = 0.0;
  double worst_sector = 0.0;
  for (int n : {2, 4, 8, 16, 32}) {
    const PlanckN planck(n);
    const PipelineResult result = build_via_pipeline(planck);
    worst_entry =
        std::max(worst_entry, max_abs_diff(result.matrix, build_corrected(planck)));
    worst_sector = std::max(worst_sector, result.sector_residual);
  }
  const bool passed = worst_entry < 1e-10 && worst_sector < 1e-12;
  report_plain(6, "pipeline oracle", passed,
               "entry diff " + std::to_string(worst_entry) +
                   " < 1e-10; sector residual " + std::to_string(worst_sector) +
                   " < 1e-12");
}

// 7. The projector products L E_p and E_p L separate in the limit.
void criterion_noncommutativity() {
  const cplx limit{0.0, -std::log(2.0) / pi};
  const auto at = [&](double hbar) {
    return noncommute_demo(hbar, noncommute_min_kmax(hbar));
  };
  const auto fine = at(1e-4);
  const double dev2 = std::abs(at(1e-2).le_p - limit);
  const double dev3 = std::abs(at(1e-3).le_p - limit);
  const double dev4 = std::abs(fine.le_p - limit);
  const double r23 = dev2 / dev3;
  const double r34 = dev3 / dev4;
  const bool passed = std::abs(fine.le_p - limit) < 0.01 &&
                      fine.ep_l == cplx{0.0, 0.0} && r23 >= 5.0 && r23 <= 20.0 &&
                      r34 >= 5.0 && r34 <= 20.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "|le_p - (-i log2/pi)| = %.2e at hbar=1e-4; decade ratios %.1f, %.1f",
                dev4, r23, r34);
  report_plain(7, "projector noncommutativity", passed, detail);
}

// 8. One-step weak classical limit: errors shrink from N = 16 to N = 256.
void criterion_weak_limit() {
  const double points[5][2] = {
      {0.3, 0.4}, {0.15, 0.85}, {0.65, 0.3}, {0.8, 0.7}, {0.45, 0.55}};
  const int harmonics[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  bool decreasing = true;
  double pinned_error = 1.0;
  double worst_fine = 0.0;
  for (PropagatorVariant variant :
       {PropagatorVariant::corrected, PropagatorVariant::balazs_voros}) {
    for (const auto& pt : points) {
      for (const auto& ab : harmonics) {
        const auto rows =
            weak_limit_scan(pt[0], pt[1], ab[0], ab[1], {16, 256}, variant);
        decreasing = decreasing && rows[1].abs_error < rows[0].abs_error;
        worst_fine = std::max(worst_fine, rows[1].abs_error);
        if (variant == PropagatorVariant::corrected && pt[0] == 0.3 &&
            ab[0] == 1 && ab[1] == 0) {
          pinned_error = rows[1].abs_error;
        }
      }
    }
  }
  const bool passed = decreasing && pinned_error < 0.05;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "all 30 scans decreasing: %s; corrected (0.3,0.4),(1,0) error at "
                "N=256: %.4f < 0.05",
                decreasing ? "yes" : "no", pinned_error);
  report_plain(8, "weak classical limit scan", passed, detail);
}

// 9. Classical covering-map identities on 1e5 random plane points.
void criterion_classical_identities() {
  std::mt19937_64 rng(0xbaceu);
  std::uniform_real_distribution<double> coord(-8.0, 8.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> coeff(-3, 3);
  double worst = 0.0;
  for (int trial = 0; trial < 100000; ++trial) {
    const PlanePoint pt(coord(rng), coord(rng));
    const PlanePoint image = cover_baker(pt);

    const TorusPoint reduced =
        torus_baker(TorusPoint(mod_unit(pt.x), mod_unit(pt.p)));
    worst = std::max(worst, std::abs(mod_unit(image.x) - reduced.x));
    worst = std::max(worst, std::abs(mod_unit(image.p) - reduced.p));

    const PlanePoint back = cover_baker_inverse(image);
    worst = std::max(worst, std::abs(back.x - pt.x));
    worst = std::max(worst, std::abs(back.p - pt.p));

    const int a = coeff(rng);
    const int b = coeff(rng);
    worst = std::max(worst, std::abs(pullback_harmonic(a, b, pt) -
                                     std::polar(1.0, two_pi * (a * image.x +
                                                               b * image.p))));

    const TorusPoint tp(unit(rng), unit(rng));
    const TorusPoint lhs = torus_baker(parity_point(tp));
    const TorusPoint rhs = parity_point(torus_baker(tp));
    worst = std::max(worst, std::abs(lhs.x - rhs.x));
    worst = std::max(worst, std::abs(lhs.p - rhs.p));
  }
  report(9, "classical identities", worst < 1e-12, worst, 1e-12);
}

// 10. Weyl algebra: commutation phase and central elements.
void criterion_weyl_algebra() {
  double worst = 0.0;
  for (int n = 2; n <= 64; n += 2) {
    const PlanckN planck(n);
    const ComplexMatrix u = u_matrix(planck);
    const ComplexMatrix v = v_matrix(planck);
    ComplexMatrix rhs = v * u;
    const cplx omega = std::polar(1.0, two_pi / n);
    for (std::size_t i = 0; i < rhs.dim(); ++i) {
      for (std::size_t j = 0; j < rhs.dim(); ++j) rhs(i, j) *= omega;
    }
    worst = std::max(worst, max_abs_diff(u * v, rhs));

    ComplexMatrix u_pow = ComplexMatrix::identity(u.dim());
    ComplexMatrix v_pow = ComplexMatrix::identity(v.dim());
    for (int e = 0; e < n; ++e) {
      u_pow = u_pow * u;
      v_pow = v_pow * v;
    }
    const ComplexMatrix eye = ComplexMatrix::identity(u.dim());
    worst = std::max(worst, max_abs_diff(u_pow, eye));
    worst = std::max(worst, max_abs_diff(v_pow, eye));
  }
  report(10, "weyl algebra", worst < 1e-13, worst, 1e-13);
}

}  // namespace

int main() {
  criterion_matrix_ground_truth();
  criterion_unitarity();
  criterion_variant_relation();
  criterion_parity();
  criterion_time_reversal();
  criterion_pipeline_oracle();
  criterion_noncommutativity();
  criterion_weak_limit();
  criterion_classical_identities();
  criterion_weyl_algebra();
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
