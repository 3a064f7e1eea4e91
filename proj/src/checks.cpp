#include "qbaker/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qbaker {

namespace {

// Thresholds mirror the per-module invariants.
constexpr double kUnitarityTol = 1e-11;
constexpr double kParityTol = 1e-12;
constexpr double kTimeReversalTol = 1e-12;
constexpr double kBvPhaseTol = 1e-10;
constexpr double kPipelineTol = 1e-10;
constexpr double kWeylTol = 1e-13;
constexpr double kCenterTol = 1e-13;

ComplexMatrix matrix_power(const ComplexMatrix& m, int exponent) {
  ComplexMatrix acc = ComplexMatrix::identity(m.dim());
  for (int i = 0; i < exponent; ++i) acc = acc * m;
  return acc;
}

double check_residual(NamedCheck check, const PlanckN& planck,
                      PropagatorVariant variant) {
  switch (check) {
    case NamedCheck::unitarity:
      return unitarity_residual(build(variant, planck));
    case NamedCheck::parity: {
      const ComplexMatrix f = build(variant, planck);
      const ComplexMatrix p = parity_matrix(planck);
      return max_abs_diff(p * (f * p), f);
    }
    case NamedCheck::time_reversal: {
      const ComplexMatrix f = build(variant, planck);
      return max_abs_diff(time_reversal_image(f), adjoint(f));
    }
    case NamedCheck::bv_phase: {
      const VariantComparison cmp = compare_variants(planck);
      return std::max(cmp.n_even_residual, cmp.max_phase_residual());
    }
    case NamedCheck::pipeline_oracle: {
      const PipelineResult pipeline = build_via_pipeline(planck);
      const double entry_diff =
          max_abs_diff(pipeline.matrix, build_corrected(planck));
      return std::max(entry_diff, pipeline.sector_residual);
    }
    case NamedCheck::weyl: {
      const ComplexMatrix u = u_matrix(planck);
      const ComplexMatrix v = v_matrix(planck);
      const cplx omega =
          std::polar(1.0, 2.0 * std::numbers::pi / planck.n());
      ComplexMatrix rhs = v * u;
      for (std::size_t i = 0; i < rhs.dim(); ++i) {
        for (std::size_t j = 0; j < rhs.dim(); ++j) rhs(i, j) *= omega;
      }
      return max_abs_diff(u * v, rhs);
    }
    case NamedCheck::center: {
      const ComplexMatrix eye = ComplexMatrix::identity(
          static_cast<std::size_t>(planck.n()));
      const double u_res =
          max_abs_diff(matrix_power(u_matrix(planck), planck.n()), eye);
      const double v_res =
          max_abs_diff(matrix_power(v_matrix(planck), planck.n()), eye);
      return std::max(u_res, v_res);
    }
  }
  throw std::invalid_argument("unknown check");
}

}  // namespace

std::string_view check_name(NamedCheck check) {
  switch (check) {
    case NamedCheck::unitarity:
      return "unitarity";
    case NamedCheck::parity:
      return "parity";
    case NamedCheck::time_reversal:
      return "time-reversal";
    case NamedCheck::bv_phase:
      return "bv-phase";
    case NamedCheck::pipeline_oracle:
      return "pipeline-oracle";
    case NamedCheck::weyl:
      return "weyl";
    case NamedCheck::center:
      return "center";
  }
  return "unknown";
}

std::optional<NamedCheck> parse_check_name(std::string_view name) {
  for (NamedCheck check :
       {NamedCheck::unitarity, NamedCheck::parity, NamedCheck::time_reversal,
        NamedCheck::bv_phase, NamedCheck::pipeline_oracle, NamedCheck::weyl,
        NamedCheck::center}) {
    if (name == check_name(check)) return check;
  }
  return std::nullopt;
}

double check_threshold(NamedCheck check) {
  switch (check) {
    case NamedCheck::unitarity:
      return kUnitarityTol;
    case NamedCheck::parity:
      return kParityTol;
    case NamedCheck::time_reversal:
      return kTimeReversalTol;
    case NamedCheck::bv_phase:
      return kBvPhaseTol;
    case NamedCheck::pipeline_oracle:
      return kPipelineTol;
    case NamedCheck::weyl:
      return kWeylTol;
    case NamedCheck::center:
      return kCenterTol;
  }
  return 0.0;
}

bool check_uses_variant(NamedCheck check) {
  switch (check) {
    case NamedCheck::unitarity:
    case NamedCheck::parity:
    case NamedCheck::time_reversal:
      return true;
    case NamedCheck::bv_phase:
    case NamedCheck::pipeline_oracle:
    case NamedCheck::weyl:
    case NamedCheck::center:
      return false;
  }
  return false;
}

CheckReport run_check(NamedCheck check, const PlanckN& planck,
                      PropagatorVariant variant) {
  CheckReport report;
  report.check_name = std::string(check_name(check));
  report.n = planck.n();
  report.residual = check_residual(check, planck, variant);
  report.threshold = check_threshold(check);
  report.passed = report.residual <= report.threshold;
  if (check_uses_variant(check)) {
    report.context.emplace_back("variant", std::string(variant_name(variant)));
  }
  return report;
}

std::vector<CheckReport> run_checks(
    const std::vector<NamedCheck>& checks, const std::vector<int>& n_list,
    const std::vector<PropagatorVariant>& variants) {
  std::vector<CheckReport> reports;
  for (NamedCheck check : checks) {
    for (int n : n_list) {
      const PlanckN planck(n);
      if (check_uses_variant(check)) {
        for (PropagatorVariant variant : variants) {
          reports.push_back(run_check(check, planck, variant));
        }
      } else {
        reports.push_back(run_check(check, planck, PropagatorVariant::corrected));
      }
    }
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     if (a.check_name != b.check_name)
                       return a.check_name < b.check_name;
                     if (a.n != b.n) return a.n < b.n;
                     return a.context < b.context;
                   });
  return reports;
}

}  // namespace qbaker
