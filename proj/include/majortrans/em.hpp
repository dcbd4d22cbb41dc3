#pragma once

#include <vector>

#include "majortrans/trace.hpp"

namespace majortrans {

/// M^in+: majors with an unserved applicant whose top unserved applicant
/// lacks transfer-out eligibility or who still has room under the ceiling.
std::vector<MajorId> transfer_in_expandable(const Problem& problem, const Outcome& outcome);

/// M^out-: majors below their floor.
std::vector<MajorId> floor_violated(const Problem& problem, const Outcome& outcome);

/// M^out+: majors with an unserved leaver whose top unserved leaver lacks
/// transfer-in eligibility or who is still above the floor.
std::vector<MajorId> transfer_out_expandable(const Problem& problem, const Outcome& outcome);

/// M^in-: majors above their ceiling.
std::vector<MajorId> ceiling_violated(const Problem& problem, const Outcome& outcome);

/// EM mechanism. Starts from (I, {}); each step either lets every transfer-in
/// expandable major admit its best unserved applicant, or (when none is) lets
/// every major under its floor revoke its lowest transfer-out holder. One
/// trace step per k, plus a final stop step.
MechanismRun run_em(const Problem& problem, const RunOptions& options = {});

/// The dual EM mechanism: starts from ({}, I), expands transfer-out
/// eligibility and repairs ceilings by revoking transfer-in eligibility.
MechanismRun run_alt_em(const Problem& problem, const RunOptions& options = {});

}  // namespace majortrans
