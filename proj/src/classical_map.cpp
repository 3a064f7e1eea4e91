#include "qbaker/classical_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qbaker {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

TorusPoint::TorusPoint(double x_, double p_) : x(x_), p(p_) {
  require_finite(x, "TorusPoint.x");
  require_finite(p, "TorusPoint.p");
  if (x < 0.0 || x >= 1.0 || p < 0.0 || p >= 1.0) {
    throw std::invalid_argument("TorusPoint coordinates must lie in [0, 1)");
  }
}

PlanePoint::PlanePoint(double x_, double p_) : x(x_), p(p_) {
  require_finite(x, "PlanePoint.x");
  require_finite(p, "PlanePoint.p");
}

double mod_unit(double x) {
  const double r = x - std::floor(x);
  // floor rounding can return 1.0 for tiny negative x
  return r >= 1.0 ? r - 1.0 : r;
}

double mod_two(double x) {
  const double r = x - 2.0 * std::floor(x / 2.0);
  return r >= 2.0 ? r - 2.0 : r;
}

TorusPoint torus_baker(const TorusPoint& pt) {
  if (pt.x < 0.5) {
    return {2.0 * pt.x, pt.p / 2.0};
  }
  return {2.0 * pt.x - 1.0, pt.p / 2.0 + 0.5};
}

PlanePoint cover_baker(const PlanePoint& pt) {
  const bool in_left = mod_unit(pt.x) < 0.5;
  const bool in_even_p = mod_two(pt.p) < 1.0;
  if (in_left && in_even_p) return {2.0 * pt.x, pt.p / 2.0};
  if (!in_left && in_even_p) return {2.0 * pt.x - 1.0, pt.p / 2.0 + 0.5};
  if (in_left && !in_even_p) return {2.0 * pt.x + 1.0, pt.p / 2.0 + 0.5};
  return {2.0 * pt.x, pt.p / 2.0};
}

PlanePoint cover_baker_inverse(const PlanePoint& pt) {
  const bool in_even_x = mod_two(pt.x) < 1.0;
  const bool in_bottom = mod_unit(pt.p) < 0.5;
  if (in_even_x && in_bottom) return {pt.x / 2.0, 2.0 * pt.p};
  if (!in_even_x && in_bottom) return {pt.x / 2.0 - 0.5, 2.0 * pt.p - 1.0};
  if (in_even_x && !in_bottom) return {pt.x / 2.0 + 0.5, 2.0 * pt.p - 1.0};
  return {pt.x / 2.0, 2.0 * pt.p};
}

RegionClassification classify(const PlanePoint& pt) {
  return RegionClassification{
      mod_unit(pt.x) < 0.5 ? Region::left : Region::right,
      mod_unit(pt.p) < 0.5 ? Region::bottom : Region::top,
      mod_two(pt.x) < 1.0 ? Region::even_x : Region::odd_x,
      mod_two(pt.p) < 1.0 ? Region::even_p : Region::odd_p,
  };
}

std::complex<double> pullback_harmonic(int a, int b, const PlanePoint& pt) {
  const double xu = mod_unit(pt.x);
  const double p2 = mod_two(pt.p);
  if (xu == 0.0 || xu == 0.5 || p2 == 0.0 || p2 == 1.0) {
    throw std::domain_error(
        "pullback_harmonic: point lies on a region boundary");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double sign_b = (b % 2 == 0) ? 1.0 : -1.0;
  const double chi_x = (xu < 0.5) ? 1.0 : sign_b;   // chi_l + (-1)^b chi_r
  const double chi_p = (p2 < 1.0) ? 1.0 : sign_b;   // chi_ep + (-1)^b chi_op
  const std::complex<double> osc =
      std::polar(1.0, two_pi * 2.0 * a * pt.x + std::numbers::pi * b * pt.p);
  return osc * chi_x * chi_p;
}

TorusPoint parity_point(const TorusPoint& pt) {
  return {mod_unit(1.0 - pt.x), mod_unit(1.0 - pt.p)};
}

std::vector<TorusPoint> torus_orbit(const TorusPoint& start, int iters) {
  if (iters < 0) throw std::invalid_argument("torus_orbit: iters must be >= 0");
  std::vector<TorusPoint> orbit;
  orbit.reserve(static_cast<std::size_t>(iters) + 1);
  orbit.push_back(start);
  for (int i = 0; i < iters; ++i) {
    orbit.push_back(torus_baker(orbit.back()));
  }
  return orbit;
}

std::vector<PlanePoint> cover_orbit(const PlanePoint& start, int iters,
                                    bool inverse) {
  if (iters < 0) throw std::invalid_argument("cover_orbit: iters must be >= 0");
  std::vector<PlanePoint> orbit;
  orbit.reserve(static_cast<std::size_t>(iters) + 1);
  orbit.push_back(start);
  for (int i = 0; i < iters; ++i) {
    orbit.push_back(inverse ? cover_baker_inverse(orbit.back())
                            : cover_baker(orbit.back()));
  }
  return orbit;
}

}  // namespace qbaker
