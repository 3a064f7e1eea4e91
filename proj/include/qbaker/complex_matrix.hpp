#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qbaker {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. The universal carrier for
/// propagators and operators; unitarity is asserted per operation, not here.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const cplx& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  cplx* data() { return entries_.data(); }
  const cplx* data() const { return entries_.data(); }

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> operator*(const ComplexMatrix& a, const std::vector<cplx>& x);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |(M^dagger M - I)_ij|
double unitarity_residual(const ComplexMatrix& m);

cplx dotc(const std::vector<cplx>& x, const std::vector<cplx>& y);

double vector_norm(const std::vector<cplx>& x);

}  // namespace qbaker
