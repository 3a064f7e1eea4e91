#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Data-parallel inner loops used by the matrix layer. Every operation has a
// scalar reference implementation and may have SIMD variants; the variant is
// selected once at startup from CPU capabilities and can be overridden with
// force_isa() (tests) or the QBAKER_ISA environment variable (scalar|avx2).
//
// All matrices are dense, row-major, std::complex<double>.

namespace qbaker::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

// Currently selected instruction set.
Isa active_isa();

// Override the dispatch (throws std::invalid_argument if unavailable).
void force_isa(Isa isa);
void reset_isa();

// c = a * b for n x n matrices; c must not alias a or b.
void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n);

// y = a * x for an n x n matrix and length-n vector; y must not alias x.
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n);

// sum_i conj(x[i]) * y[i]
cplx dotc(const cplx* x, const cplx* y, std::size_t n);

// max_i |a[i] - b[i]| over `count` entries
double max_abs_diff(const cplx* a, const cplx* b, std::size_t count);

namespace detail {

struct KernelTable {
  void (*matmul)(const cplx*, const cplx*, cplx*, std::size_t);
  void (*matvec)(const cplx*, const cplx*, cplx*, std::size_t);
  cplx (*dotc)(const cplx*, const cplx*, std::size_t);
  double (*max_abs_diff)(const cplx*, const cplx*, std::size_t);
};

extern const KernelTable scalar_table;
// Null on platforms without AVX2 codegen support.
extern const KernelTable* const avx2_table;

}  // namespace detail

}  // namespace qbaker::kernels
