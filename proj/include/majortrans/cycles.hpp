#pragma once

#include <span>
#include <vector>

#include "majortrans/trace.hpp"

namespace majortrans {

struct PointingResult {
  std::vector<PointerEdge> pointers;  // one per live major, ascending by major
  std::vector<MajorId> removed;       // live majors that cannot take part in a cycle
};

/// Each live major points to its best applicant who lacks transfer-in
/// eligibility but holds transfer-out eligibility. A major is removed when it
/// has no such applicant or the applicant's initial major is not live.
PointingResult tie_pointing(const Problem& problem, const Outcome& outcome, std::span<const MajorId> live);

/// Dual: each live major points to its best initial student who lacks
/// transfer-out eligibility but holds transfer-in eligibility; removal checks
/// the applicant's applied major.
PointingResult toe_pointing(const Problem& problem, const Outcome& outcome, std::span<const MajorId> live);

/// Cycles of the pointing graph where a major points to the major of its
/// pointee (initial major for transfer-in cycles, applied major for
/// transfer-out ones). Each cycle starts at its smallest major; cycles are
/// listed by that major.
std::vector<ExchangeCycle> find_cycles(const Problem& problem, CycleKind kind, std::span<const PointerEdge> pointers);

/// Transfer-in exchange process. Throws not_permissible on a non-permissible start.
MechanismRun tie_process(const Problem& problem, const Outcome& start, const RunOptions& options = {});

/// Transfer-out exchange process. Throws not_permissible on a non-permissible start.
MechanismRun toe_process(const Problem& problem, const Outcome& start, const RunOptions& options = {});

/// tie_process followed by toe_process. Throws not_permissible_em unless the
/// start is permissible and EM. The trace concatenates both stages.
MechanismRun eaem_tie(const Problem& problem, const Outcome& em_start, const RunOptions& options = {});

/// toe_process followed by tie_process.
MechanismRun eaem_toe(const Problem& problem, const Outcome& em_start, const RunOptions& options = {});

}  // namespace majortrans
