#include "qbaker/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__) || defined(_M_IX86)
#define QBAKER_X86 1
#else
#define QBAKER_X86 0
#endif

#if QBAKER_X86

#include <immintrin.h>

#include <algorithm>
#include <cmath>

// AVX2/FMA variants. One __m256d holds two interleaved complex<double>
// values (re0, im0, re1, im1). Complex products use the fmaddsub pattern:
// with ar/ai broadcast from one factor and b = (br, bi, ...),
//   fmaddsub(ar, b, ai * swap(b)) = (ar*br - ai*bi, ar*bi + ai*br, ...)
// which is exactly the interleaved complex product.

namespace qbaker::kernels::detail {
namespace {

inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0x5); }

inline double reduce_even_lanes(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return lanes[0] + lanes[2];
}

inline double reduce_odd_lanes(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return lanes[1] + lanes[3];
}

void matmul_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  std::fill(c, c + n * n, cplx{0.0, 0.0});
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const __m256d ar = _mm256_set1_pd(aik.real());
      const __m256d ai = _mm256_set1_pd(aik.imag());
      const double* brow = bd + 2 * k * n;
      double* crow = cd + 2 * i * n;
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d prod =
            _mm256_fmaddsub_pd(ar, bv, _mm256_mul_pd(ai, swap_pairs(bv)));
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(cv, prod));
      }
      for (; j < n; ++j) {
        c[i * n + j] += aik * b[k * n + j];
      }
    }
  }
}

void matvec_avx2(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* xd = reinterpret_cast<const double*>(x);
  for (std::size_t i = 0; i < n; ++i) {
    const double* arow = ad + 2 * i * n;
    __m256d acc_plain = _mm256_setzero_pd();  // lanes (Ar*xr, Ai*xi, ...)
    __m256d acc_cross = _mm256_setzero_pd();  // lanes (Ar*xi, Ai*xr, ...)
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
      const __m256d av = _mm256_loadu_pd(arow + 2 * j);
      const __m256d xv = _mm256_loadu_pd(xd + 2 * j);
      acc_plain = _mm256_fmadd_pd(av, xv, acc_plain);
      acc_cross = _mm256_fmadd_pd(av, swap_pairs(xv), acc_cross);
    }
    double re = reduce_even_lanes(acc_plain) - reduce_odd_lanes(acc_plain);
    double im = reduce_even_lanes(acc_cross) + reduce_odd_lanes(acc_cross);
    for (; j < n; ++j) {
      const cplx p = a[i * n + j] * x[j];
      re += p.real();
      im += p.imag();
    }
    y[i] = cplx{re, im};
  }
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_plain = _mm256_setzero_pd();  // (xr*yr, xi*yi, ...)
  __m256d acc_cross = _mm256_setzero_pd();  // (xr*yi, xi*yr, ...)
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_plain = _mm256_fmadd_pd(xv, yv, acc_plain);
    acc_cross = _mm256_fmadd_pd(xv, swap_pairs(yv), acc_cross);
  }
  double re = reduce_even_lanes(acc_plain) + reduce_odd_lanes(acc_plain);
  double im = reduce_even_lanes(acc_cross) - reduce_odd_lanes(acc_cross);
  for (; i < n; ++i) {
    const cplx p = std::conj(x[i]) * y[i];
    re += p.real();
    im += p.imag();
  }
  return cplx{re, im};
}

double max_abs_diff_avx2(const cplx* a, const cplx* b, std::size_t count) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  __m256d max_sq = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(ad + 2 * i), _mm256_loadu_pd(bd + 2 * i));
    const __m256d sq = _mm256_mul_pd(d, d);
    // hadd pairs re^2 + im^2 per complex (duplicated across lanes)
    max_sq = _mm256_max_pd(max_sq, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, max_sq);
  double m = std::max(lanes[0], lanes[2]);
  for (; i < count; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    m = std::max(m, dr * dr + di * di);
  }
  return std::sqrt(m);
}

const KernelTable table = {
    matmul_avx2,
    matvec_avx2,
    dotc_avx2,
    max_abs_diff_avx2,
};

}  // namespace

const KernelTable* const avx2_table = &table;

}  // namespace qbaker::kernels::detail

#else

namespace qbaker::kernels::detail {
const KernelTable* const avx2_table = nullptr;
}

#endif
