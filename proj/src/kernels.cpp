#include "qbaker/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qbaker::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__) || defined(_M_IX86)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const detail::KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &detail::scalar_table;
    case Isa::avx2:
      return detail::avx2_table;
  }
  return nullptr;
}

Isa detect_isa() {
  if (const char* env = std::getenv("QBAKER_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && detail::avx2_table && cpu_has_avx2()) return Isa::avx2;
    // Unknown or unavailable request falls through to autodetection.
  }
  if (detail::avx2_table && cpu_has_avx2()) return Isa::avx2;
  return Isa::scalar;
}

struct Dispatch {
  std::atomic<const detail::KernelTable*> table;
  std::atomic<Isa> isa;
  Dispatch() {
    const Isa detected = detect_isa();
    isa.store(detected);
    table.store(table_for(detected));
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  if (isa == Isa::scalar) return true;
  return table_for(isa) != nullptr && cpu_has_avx2();
}

Isa active_isa() { return dispatch().isa.load(); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel ISA not available on this machine: " +
                                std::string(isa_name(isa)));
  }
  dispatch().isa.store(isa);
  dispatch().table.store(table_for(isa));
}

void reset_isa() {
  const Isa detected = cpu_has_avx2() && detail::avx2_table ? Isa::avx2 : Isa::scalar;
  dispatch().isa.store(detected);
  dispatch().table.store(table_for(detected));
}

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  dispatch().table.load()->matmul(a, b, c, n);
}

void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  dispatch().table.load()->matvec(a, x, y, n);
}

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
  return dispatch().table.load()->dotc(x, y, n);
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t count) {
  return dispatch().table.load()->max_abs_diff(a, b, count);
}

}  // namespace qbaker::kernels
