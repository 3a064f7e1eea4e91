#pragma once

#include <complex>
#include <vector>

namespace qbaker {

/// Point on the unit torus; both coordinates in [0, 1).
struct TorusPoint {
  double x;
  double p;
  TorusPoint(double x, double p);
};

/// Point on the covering plane; unbounded but finite coordinates.
struct PlanePoint {
  double x;
  double p;
  PlanePoint(double x, double p);
};

/// Half-open coset regions of the plane. left/right partition by x mod 1,
/// bottom/top by p mod 1, even_x/odd_x by x mod 2, even_p/odd_p by p mod 2.
enum class Region {
  left,
  right,
  bottom,
  top,
  even_x,
  odd_x,
  even_p,
  odd_p,
};

/// A plane point belongs to exactly one region of each of the four pairs.
struct RegionClassification {
  Region x_half;    // left or right
  Region p_half;    // bottom or top
  Region x_parity;  // even_x or odd_x
  Region p_parity;  // even_p or odd_p

  bool contains(Region r) const {
    return r == x_half || r == p_half || r == x_parity || r == p_parity;
  }
};

/// x reduced into [0, 1) with floor-based reduction (negative inputs land in
/// the correct coset).
double mod_unit(double x);

/// x reduced into [0, 2).
double mod_two(double x);

/// One step of the baker's map on the torus: stretch in x, shrink in p,
/// chop and stack.
TorusPoint torus_baker(const TorusPoint& pt);

/// One step of the baker covering map on the plane; branch picked by
/// (left/right) x (even_p/odd_p) membership.
PlanePoint cover_baker(const PlanePoint& pt);

/// Inverse covering map; branch picked by (even_x/odd_x) x (bottom/top).
PlanePoint cover_baker_inverse(const PlanePoint& pt);

RegionClassification classify(const PlanePoint& pt);

/// Pullback of the harmonic e^{2 pi i (a x + b p)} through the covering map,
/// evaluated from the characteristic-function expansion (not by composing
/// with cover_baker). Throws std::domain_error on region boundaries, where
/// the expansion is ambiguous.
std::complex<double> pullback_harmonic(int a, int b, const PlanePoint& pt);

/// The antipodal symmetry (x, p) -> (1 - x mod 1, 1 - p mod 1).
TorusPoint parity_point(const TorusPoint& pt);

/// Orbit under the torus map: [pt, B(pt), ..., B^iters(pt)].
std::vector<TorusPoint> torus_orbit(const TorusPoint& start, int iters);

/// Orbit under the covering map (or its inverse when inverse = true).
std::vector<PlanePoint> cover_orbit(const PlanePoint& start, int iters,
                                    bool inverse = false);

}  // namespace qbaker
