#include "qbaker/torus_kinematics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qbaker {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// e^{2 pi i k / n} with the angle reduced through integer arithmetic, so that
// congruent exponents give bit-identical phases. Quarter-turn values are
// returned exactly; they carry the sign structure of every matrix here, and
// keeping them clean keeps the small-N matrices free of 1e-16 dirt.
cplx root_of_unity(long k, long n) {
  long r = k % n;
  if (r < 0) r += n;
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      case 3:
        return {0.0, -1.0};
    }
  }
  return std::polar(1.0, two_pi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

PlanckN::PlanckN(int n) : n_(n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("PlanckN: N must be an even integer >= 2");
  }
}

double PlanckN::h() const { return 1.0 / static_cast<double>(n_); }

double PlanckN::hbar() const { return h() / two_pi; }

CombIndex::CombIndex(long m, int n) : n_(n) {
  if (n <= 0) throw std::invalid_argument("CombIndex: modulus must be positive");
  long r = m % n;
  if (r < 0) r += n;
  m_ = static_cast<int>(r);
}

ComplexMatrix dft(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("dft: dimension must be >= 1");
  ComplexMatrix f(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t m = 0; m < dim; ++m) {
    for (std::size_t n = 0; n < dim; ++n) {
      f(m, n) = scale * root_of_unity(-static_cast<long>(m * n),
                                      static_cast<long>(dim));
    }
  }
  return f;
}

ComplexMatrix z_matrix(const PlanckN& planck) {
  const int n = planck.n();
  ComplexMatrix z(n);
  for (int k = 0; k < n; ++k) {
    z(k, k) = root_of_unity(k, 2L * n);  // e^{i pi k / N}
  }
  return z;
}

ComplexMatrix u_matrix(const PlanckN& planck) {
  const int n = planck.n();
  ComplexMatrix u(n);
  for (int m = 0; m < n; ++m) {
    u(m, m) = root_of_unity(m, n);
  }
  return u;
}

ComplexMatrix v_matrix(const PlanckN& planck) {
  const int n = planck.n();
  ComplexMatrix v(n);
  for (int m = 0; m < n; ++m) {
    v(CombIndex(m + 1, n).value(), m) = 1.0;
  }
  return v;
}

ComplexMatrix harmonic(const PlanckN& planck, long a, long b) {
  const int n = planck.n();
  const int ar = CombIndex(a, n).value();
  const int br = CombIndex(b, n).value();
  // (U^a V^b) comb_m = e^{2 pi i a (m + b) / N} comb_{m + b}
  ComplexMatrix m(n);
  for (int col = 0; col < n; ++col) {
    const int row = CombIndex(col + br, n).value();
    m(row, col) = root_of_unity(static_cast<long>(ar) * row, n);
  }
  return m;
}

ComplexMatrix parity_matrix(const PlanckN& planck) {
  const int n = planck.n();
  ComplexMatrix p(n);
  for (int m = 0; m < n; ++m) {
    p(CombIndex(n - m, n).value(), m) = 1.0;
  }
  return p;
}

ComplexMatrix time_reversal_image(const ComplexMatrix& m) {
  if (m.dim() == 0) {
    throw std::invalid_argument("time_reversal_image: empty matrix");
  }
  const ComplexMatrix a = dft(m.dim());
  // a is symmetric unitary, so its inverse is its entrywise conjugate.
  return a * (conjugate(m) * conjugate(a));
}

}  // namespace qbaker
