#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbaker/propagator.hpp"
#include "qbaker/torus_kinematics.hpp"

namespace qbaker {

/// Named verification result. passed is residual <= threshold by
/// construction; context carries the (key, value) pairs that identify the
/// run (N, variant, ...).
struct CheckReport {
  std::string check_name;
  int n = 0;
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> context;
};

enum class NamedCheck {
  unitarity,
  parity,
  time_reversal,
  bv_phase,
  pipeline_oracle,
  weyl,
  center,
};

std::string_view check_name(NamedCheck check);
std::optional<NamedCheck> parse_check_name(std::string_view name);

/// Built-in threshold the check is judged against.
double check_threshold(NamedCheck check);

/// True for checks whose result depends on the propagator variant.
bool check_uses_variant(NamedCheck check);

CheckReport run_check(NamedCheck check, const PlanckN& planck,
                      PropagatorVariant variant);

/// Runs every (check, N, variant) combination and returns the reports sorted
/// by (check_name, N, variant). Variant-independent checks are run once per N.
std::vector<CheckReport> run_checks(const std::vector<NamedCheck>& checks,
                                    const std::vector<int>& n_list,
                                    const std::vector<PropagatorVariant>& variants);

}  // namespace qbaker
