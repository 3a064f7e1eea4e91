#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qbaker/semiclassics.hpp"

using namespace qbaker;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// Plain fixed-grid Simpson rule; independent of the library quadrature.
template <typename F>
cplx simpson(F&& f, double a, double b, int intervals) {
  cplx acc = f(a) + f(b);
  const double h = (b - a) / intervals;
  for (int i = 1; i < intervals; ++i) {
    acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * (h / 3.0);
}

}  // namespace

TEST_CASE("coherent state parameter validation") {
  CHECK_THROWS_AS(CoherentStateParams(0.1, 0.2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(CoherentStateParams(0.1, 0.2, -1e-3), std::invalid_argument);
  CHECK_THROWS_AS(CoherentStateParams(std::nan(""), 0.2, 1e-3),
                  std::invalid_argument);
  const PlanckN planck(32);
  CHECK(CoherentStateParams::for_planck(0.3, 0.4, planck).hbar == planck.hbar());
}

TEST_CASE("coherent wavefunction peak and normalization") {
  for (double hbar : {1e-2, 1e-3, 1e-4}) {
    const CoherentStateParams params(0.4, 0.0, hbar);
    CHECK(std::abs(coherent_wavefunction(params, 0.4) -
                   cplx{std::pow(pi * hbar, -0.25), 0.0}) < 1e-12);

    const double radius = 10.0 * std::sqrt(hbar);
    const cplx norm_sq = simpson(
        [&](double x) { return cplx{std::norm(coherent_wavefunction(params, x)), 0.0}; },
        0.4 - radius, 0.4 + radius, 20000);
    CHECK(std::abs(norm_sq.real() - 1.0) < 1e-10);
  }

  // normalization is phase-space translation invariant
  const CoherentStateParams moving(0.3, 0.7, 1e-3);
  const double radius = 10.0 * std::sqrt(1e-3);
  const cplx norm_sq = simpson(
      [&](double x) { return cplx{std::norm(coherent_wavefunction(moving, x)), 0.0}; },
      0.3 - radius, 0.3 + radius, 20000);
  CHECK(std::abs(norm_sq.real() - 1.0) < 1e-10);
}

TEST_CASE("fourier transform peaks at p0 with the same amplitude") {
  const double hbar = 1e-3;
  const CoherentStateParams params(0.3, 0.4, hbar);
  const double radius = 10.0 * std::sqrt(hbar);
  const cplx ft_at_p0 =
      simpson(
          [&](double x) {
            return std::polar(1.0, -params.p0 * x / hbar) *
                   coherent_wavefunction(params, x);
          },
          0.3 - radius, 0.3 + radius, 20000) /
      std::sqrt(two_pi * hbar);
  CHECK(std::abs(std::abs(ft_at_p0) - std::pow(pi * hbar, -0.25)) < 1e-8);
}

TEST_CASE("harmonic expectation values") {
  const CoherentStateParams params(0.3, 0.4, 1e-3);
  CHECK(std::abs(expect_harmonic_continuum(params, 0, 0) - cplx{1.0, 0.0}) < 1e-10);

  // (1, 0): closed Gaussian integral e^{2 pi i x0} e^{-pi^2 hbar}
  const cplx expected_10 =
      std::polar(std::exp(-pi * pi * params.hbar), two_pi * params.x0);
  CHECK(std::abs(expect_harmonic_continuum(params, 1, 0) - expected_10) < 1e-10);

  // quadrature against the complete-the-square oracle
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      for (double hbar : {1e-2, 1e-3}) {
        const CoherentStateParams p(0.27, 0.81, hbar);
        const cplx q = expect_harmonic_continuum(p, a, b);
        CHECK(std::abs(q - expect_harmonic_closed_form(p, a, b)) < 1e-9);
        CHECK(std::abs(q) <= 1.0 + 1e-12);
      }
    }
  }

  // hbar = 1e-4 near the classical value
  const CoherentStateParams fine(0.3, 0.4, 1e-4);
  CHECK(std::abs(expect_harmonic_continuum(fine, 1, 1) -
                 std::polar(1.0, two_pi * 0.7)) < 0.01);

  CHECK_THROWS_AS(expect_harmonic_continuum(params, 9, 0), std::invalid_argument);
}

TEST_CASE("step-1 deviation decays monotonically in hbar") {
  const double x0 = 0.3, p0 = 0.4;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      double previous = -1.0;
      for (double hbar : {1e-2, 3e-3, 1e-3, 3e-4, 1e-4}) {
        const CoherentStateParams params(x0, p0, hbar);
        const double dev = std::abs(expect_harmonic_continuum(params, a, b) -
                                    std::polar(1.0, two_pi * (a * x0 + b * p0)));
        if (previous >= 0.0) {
          if (a == 0 && b == 0) {
            CHECK(dev <= previous + 1e-12);
          } else {
            CHECK(dev < previous);
          }
        }
        previous = dev;
      }
    }
  }
}

TEST_CASE("projection norms localize in the packet limit") {
  const double hbar = 1e-4;
  CHECK(projection_norm(CoherentStateParams(0.25, 0.0, hbar), Region::left) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(projection_norm(CoherentStateParams(0.75, 0.0, hbar), Region::left) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
  CHECK(projection_norm(CoherentStateParams(0.75, 0.0, hbar), Region::right) ==
        doctest::Approx(1.0).epsilon(1e-6));

  // momentum-side projectors read p0
  CHECK(projection_norm(CoherentStateParams(0.0, 0.25, hbar), Region::bottom) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(projection_norm(CoherentStateParams(0.0, 0.75, hbar), Region::top) ==
        doctest::Approx(1.0).epsilon(1e-6));

  // parity cosets have period 2
  CHECK(projection_norm(CoherentStateParams(0.5, 0.0, hbar), Region::even_x) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(projection_norm(CoherentStateParams(1.5, 0.0, hbar), Region::odd_x) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(projection_norm(CoherentStateParams(2.5, 0.0, hbar), Region::even_x) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("complementary projectors resolve the identity") {
  const std::pair<Region, Region> pairs[] = {
      {Region::left, Region::right},
      {Region::bottom, Region::top},
      {Region::even_x, Region::odd_x},
      {Region::even_p, Region::odd_p},
  };
  for (double hbar : {1e-2, 1e-3, 1e-4}) {
    for (double x0 : {0.1, 0.5, 0.9}) {
      const CoherentStateParams params(x0, 1.0 - x0, hbar);
      for (const auto& [first, second] : pairs) {
        const double total =
            projection_norm(params, first) + projection_norm(params, second);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("projector non-commutativity") {
  const cplx limit{0.0, -std::log(2.0) / pi};

  const auto fine = noncommute_demo(1e-4, noncommute_min_kmax(1e-4));
  CHECK(fine.ep_l == cplx{0.0, 0.0});
  CHECK(std::abs(fine.le_p - limit) < 0.01);
  CHECK(fine.le_p.real() == 0.0);
  CHECK(fine.le_p.imag() < 0.0);

  const auto coarse = noncommute_demo(1e-2, noncommute_min_kmax(1e-2));
  const auto mid = noncommute_demo(1e-3, noncommute_min_kmax(1e-3));
  const double dev_coarse = std::abs(coarse.le_p - limit);
  const double dev_mid = std::abs(mid.le_p - limit);
  const double dev_fine = std::abs(fine.le_p - limit);
  CHECK(dev_mid < dev_coarse);
  CHECK(dev_fine < dev_mid);
  // O(hbar) deviation: about a factor 10 per decade
  CHECK(dev_coarse / dev_mid > 5.0);
  CHECK(dev_coarse / dev_mid < 20.0);
  CHECK(dev_mid / dev_fine > 5.0);
  CHECK(dev_mid / dev_fine < 20.0);

  // a larger admissible cutoff must not change the sum (tail terms vanish)
  const auto larger = noncommute_demo(1e-3, noncommute_min_kmax(1e-3) + 200);
  CHECK(larger.le_p == mid.le_p);

  CHECK_THROWS_AS(noncommute_demo(1e-3, 2), std::invalid_argument);
  CHECK_THROWS_AS(noncommute_demo(1e-3, 11), std::invalid_argument);
  CHECK_THROWS_AS(noncommute_demo(-1e-3, 11), std::invalid_argument);
}

TEST_CASE("packet projection onto the comb basis") {
  const PlanckN planck(32);
  const auto params = CoherentStateParams::for_planck(0.3, 0.0, planck);
  const auto coeffs = project_to_comb(params, planck);
  REQUIRE(coeffs.size() == 32);
  CHECK(vector_norm(coeffs) == doctest::Approx(1.0).epsilon(1e-12));

  std::size_t argmax = 0;
  for (std::size_t m = 1; m < coeffs.size(); ++m) {
    if (std::abs(coeffs[m]) > std::abs(coeffs[argmax])) argmax = m;
  }
  CHECK(argmax == 10);  // round(0.3 * 32)

  // even Gaussian centered between combs 15 and 16
  const PlanckN planck2(32);
  const double x0 = 0.5 - 1.0 / 64.0;
  const auto sym = project_to_comb(CoherentStateParams::for_planck(x0, 0.0, planck2),
                                   planck2);
  for (int j = 0; j <= 5; ++j) {
    CHECK(std::abs(sym[static_cast<std::size_t>(15 - j)]) ==
          doctest::Approx(std::abs(sym[static_cast<std::size_t>(16 + j)]))
              .epsilon(1e-10));
  }

  // hbar must match the lattice scale, x0 the open unit interval
  CHECK_THROWS_AS(project_to_comb(CoherentStateParams(0.3, 0.0, 1e-3), planck),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      project_to_comb(CoherentStateParams::for_planck(-0.2, 0.0, planck), planck),
      std::invalid_argument);
}

TEST_CASE("weak limit scan") {
  // identity observable: quantum value is exactly the packet norm
  const auto trivial =
      weak_limit_scan(0.3, 0.4, 0, 0, {16, 32}, PropagatorVariant::corrected);
  REQUIRE(trivial.size() == 2);
  for (const auto& row : trivial) {
    CHECK(std::abs(row.quantum_value - cplx{1.0, 0.0}) < 1e-12);
    CHECK(row.abs_error < 1e-12);
    CHECK(std::abs(row.classical_value - cplx{1.0, 0.0}) == 0.0);
  }

  // errors shrink with N for a generic point
  for (PropagatorVariant variant :
       {PropagatorVariant::corrected, PropagatorVariant::balazs_voros}) {
    const auto rows = weak_limit_scan(0.3, 0.4, 1, 0, {16, 128}, variant);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].abs_error < rows[0].abs_error);
    CHECK(rows[0].abs_error ==
          doctest::Approx(std::abs(rows[0].quantum_value - rows[0].classical_value)));
  }

  CHECK_THROWS_AS(weak_limit_scan(0.5, 0.4, 1, 0, {16}, PropagatorVariant::corrected),
                  std::invalid_argument);
  CHECK_THROWS_AS(weak_limit_scan(0.3, 0.0, 1, 0, {16}, PropagatorVariant::corrected),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      weak_limit_scan(0.3, 0.4, 1, 0, {32, 16}, PropagatorVariant::corrected),
      std::invalid_argument);
  CHECK_THROWS_AS(
      weak_limit_scan(1.3, 0.4, 1, 0, {16}, PropagatorVariant::corrected),
      std::invalid_argument);
}
