#pragma once

#include <vector>

#include "majortrans/trace.hpp"

namespace majortrans {

/// Per-major eligibility caps announced before the program runs.
struct Cap {
  int out = 0;  // max students granted transfer-out eligibility
  int in = 0;   // max students granted transfer-in eligibility
  friend bool operator==(const Cap&, const Cap&) = default;
};

/// Indexed by MajorId::value.
struct CapProfile {
  std::vector<Cap> caps;
  friend bool operator==(const CapProfile&, const CapProfile&) = default;
};

/// Floor/ceiling implied by the caps: floor = max(0, |omega_m| - out),
/// ceiling = |omega_m| + in. Throws invalid_config on a size mismatch or a
/// negative cap.
std::vector<Constraint> derive_constraints(const Problem& problem, const CapProfile& caps);
std::vector<Constraint> derive_constraints(std::span<const int> initial_counts, const CapProfile& caps);

/// Two-stage cap allocation. Transfer-out eligibility goes to the top
/// min(out, |omega_m|) students of each major; transfer-in eligibility then goes
/// to the top `in` applicants among those holding transfer-out eligibility.
/// Throws cap_mismatch unless the problem's bounds equal derive_constraints.
/// The trace has one transfer-out step and one transfer-in step.
MechanismRun run_cmt_ec(const Problem& problem, const CapProfile& caps, const RunOptions& options = {});

/// Extends each A_m to the shortest in-priority prefix containing it. Students
/// added this way lack transfer-out eligibility, so the assignment is unchanged.
/// Used to restate a cap outcome whose transfer-in stage skipped over
/// applicants without transfer-out eligibility.
Outcome close_in_priority_gaps(const Problem& problem, const Outcome& outcome);

}  // namespace majortrans
