#pragma once

#include <string_view>
#include <vector>

#include "qbaker/complex_matrix.hpp"
#include "qbaker/torus_kinematics.hpp"

namespace qbaker {

enum class PropagatorVariant { corrected, balazs_voros };

std::string_view variant_name(PropagatorVariant v);

/// Balazs-Voros quantization: (F^N)^{-1} . blockdiag(F^{N/2}, F^{N/2}).
ComplexMatrix build_bv(const PlanckN& planck);

/// Phase-corrected quantization:
/// Z . (F^N)^{-1} . blockdiag(F^{N/2}, -F^{N/2}) . Z^{-2}.
/// Differs from build_bv on odd rows by O(h) phases and restores the
/// antipodal parity symmetry.
ComplexMatrix build_corrected(const PlanckN& planck);

ComplexMatrix build(PropagatorVariant variant, const PlanckN& planck);

/// Closed form for the odd-row entries of the corrected matrix:
///   e^{i pi (n-2m)/N} * (sqrt(2)/N) * (1 + i cot(pi (n-2m)/N)).
/// The sqrt(2)/N prefactor is the one that matches build_corrected.
/// Throws std::domain_error at a cot pole (cannot occur for odd n, even N).
cplx closed_form_entry(const PlanckN& planck, int n, int m);

/// One odd-row entry of the variant comparison. zeta is n - 2m for the left
/// half of the columns and n - 2(m - N/2) for the right half; with that
/// convention corrected = e^{i pi zeta / N} * bv entrywise.
struct OddEntryPhase {
  int n;
  int m;
  int zeta;
  double phase_residual;
};

struct VariantComparison {
  double n_even_residual = 0.0;
  std::vector<OddEntryPhase> odd_entries;

  double max_phase_residual() const;
};

VariantComparison compare_variants(const PlanckN& planck);

/// Coefficients on the doubled comb basis used by the pipeline builder:
/// the periodic sector (theta = (0,0)) and the momentum-antiperiodic sector
/// (theta = (0,1/2)). Each unitary stage preserves the joint norm.
struct PipelineState {
  std::vector<cplx> periodic;
  std::vector<cplx> antiperiodic;

  explicit PipelineState(std::size_t n) : periodic(n), antiperiodic(n) {}
};

struct PipelineResult {
  ComplexMatrix matrix;        // periodic-sector matrix elements
  double sector_residual = 0;  // max coefficient left in the (0,1/2) sector
};

/// Independent construction of the corrected propagator: applies the
/// operator factorization (squeeze, momentum half-projectors, position
/// parity projectors) stage by stage to each basis comb on the doubled
/// sector space, instead of multiplying the four matrix factors.
PipelineResult build_via_pipeline(const PlanckN& planck);

/// Eigenphases in [0, 2 pi), ascending. Requires the input to be unitary
/// within 1e-8 (throws std::invalid_argument with the residual otherwise).
std::vector<double> spectrum(const ComplexMatrix& m);

/// Largest |zeta|/N over odd-row entries with modulus above 1/sqrt(2N),
/// with zeta reduced to the symmetric residue mod N. Measures how far the
/// odd-row correction phases sit from a pure sign; decays like 1/sqrt(N).
double phase_decay_stat(const PlanckN& planck);

}  // namespace qbaker
