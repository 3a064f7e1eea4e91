#pragma once

#include "qbaker/complex_matrix.hpp"

namespace qbaker {

/// Planck data for the finite-dimensional torus Hilbert space: h = 1/N with
/// N a positive even integer, hbar = h / (2 pi). Code that needs 2*pi*hbar
/// uses h() directly so the identity 2*pi*hbar = h never degrades.
class PlanckN {
 public:
  explicit PlanckN(int n);

  int n() const { return n_; }
  double h() const;
  double hbar() const;

 private:
  int n_;
};

/// Boundary-condition point of the theta-torus. Only the periodic sector
/// (0,0) and the momentum-antiperiodic sector (0,1/2) appear in this
/// artifact; the latter only inside the propagator pipeline.
class ThetaPoint {
 public:
  static ThetaPoint periodic() { return ThetaPoint(0.0, 0.0); }
  static ThetaPoint momentum_antiperiodic() { return ThetaPoint(0.0, 0.5); }

  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }

  bool operator==(const ThetaPoint&) const = default;

 private:
  ThetaPoint(double t1, double t2) : theta1_(t1), theta2_(t2) {}
  double theta1_;
  double theta2_;
};

/// Index into the delta-comb basis, reduced mod N (the combs are N-periodic
/// in their index).
class CombIndex {
 public:
  CombIndex(long m, int n);
  int value() const { return m_; }
  int modulus() const { return n_; }

 private:
  int m_;
  int n_;
};

/// Discrete Fourier transform matrix, entries e^{-2 pi i m n / dim} / sqrt(dim).
/// Also used at dim = N/2 for the propagator blocks.
ComplexMatrix dft(std::size_t dim);

/// Diagonal phase matrix diag(e^{i pi n / N}), n = 0..N-1.
ComplexMatrix z_matrix(const PlanckN& planck);

/// Clock matrix: diag(e^{2 pi i m / N}), the action of e^{2 pi i x} on the
/// position combs in the periodic sector.
ComplexMatrix u_matrix(const PlanckN& planck);

/// Shift matrix taking comb m to comb m+1 (mod N). With this orientation the
/// pair satisfies U V = e^{2 pi i / N} V U.
ComplexMatrix v_matrix(const PlanckN& planck);

/// U^a V^b with exponents reduced mod N (U^N = V^N = I in the periodic
/// sector, so reduction is exact, not approximate).
ComplexMatrix harmonic(const PlanckN& planck, long a, long b);

/// Permutation matrix sending comb index m to N - m (mod N); involutive,
/// real, orthogonal.
ComplexMatrix parity_matrix(const PlanckN& planck);

/// Matrix of Omega M Omega in the position-comb basis, where Omega is the
/// antilinear time-reversal operator (x <-> p plus complex conjugation).
/// Concretely A * conj(M) * A^{-1} with A = dft(N); the orientation of A is
/// calibrated so that Omega U Omega = V^{-1} and Omega V Omega = U^{-1}.
ComplexMatrix time_reversal_image(const ComplexMatrix& m);

}  // namespace qbaker
