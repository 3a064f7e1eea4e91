#include "qbaker/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "qbaker/kernels.hpp"

namespace qbaker {

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrix product: dimension mismatch");
  }
  ComplexMatrix c(a.dim());
  kernels::matmul(a.data(), b.data(), c.data(), a.dim());
  return c;
}

std::vector<cplx> operator*(const ComplexMatrix& a, const std::vector<cplx>& x) {
  if (a.dim() != x.size()) {
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  }
  std::vector<cplx> y(x.size());
  kernels::matvec(a.data(), x.data(), y.data(), a.dim());
  return y;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out(j, i) = std::conj(m(i, j));
    }
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out(i, j) = std::conj(m(i, j));
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  return kernels::max_abs_diff(a.data(), b.data(), a.dim() * a.dim());
}

double unitarity_residual(const ComplexMatrix& m) {
  const ComplexMatrix gram = adjoint(m) * m;
  return max_abs_diff(gram, ComplexMatrix::identity(m.dim()));
}

cplx dotc(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("dotc: length mismatch");
  }
  return kernels::dotc(x.data(), y.data(), x.size());
}

double vector_norm(const std::vector<cplx>& x) {
  return std::sqrt(std::abs(kernels::dotc(x.data(), x.data(), x.size())));
}

}  // namespace qbaker
