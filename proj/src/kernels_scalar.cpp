#include "qbaker/kernels.hpp"

#include <algorithm>
#include <cmath>

// Reference kernels. These are the semantics the SIMD variants are tested
// against; keep them obviously correct.

namespace qbaker::kernels::detail {
namespace {

void matmul_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  std::fill(c, c + n * n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const cplx* brow = b + k * n;
      cplx* crow = c + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += aik * brow[j];
      }
    }
  }
}

void matvec_scalar(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc{0.0, 0.0};
    const cplx* arow = a + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      acc += arow[j] * x[j];
    }
    y[i] = acc;
  }
}

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::conj(x[i]) * y[i];
  }
  return acc;
}

double max_abs_diff_scalar(const cplx* a, const cplx* b, std::size_t count) {
  double max_sq = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    max_sq = std::max(max_sq, dr * dr + di * di);
  }
  return std::sqrt(max_sq);
}

}  // namespace

const KernelTable scalar_table = {
    matmul_scalar,
    matvec_scalar,
    dotc_scalar,
    max_abs_diff_scalar,
};

}  // namespace qbaker::kernels::detail
