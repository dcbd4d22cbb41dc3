#pragma once

#include <optional>
#include <string>
#include <vector>

#include "majortrans/problem.hpp"

namespace majortrans {

enum class ViolationRule {
  duplicate_name,
  unknown_major,
  unknown_student,
  applied_equals_initial,
  out_priority_not_permutation,
  in_priority_not_permutation,
  negative_floor,
  floor_exceeds_ceiling,
  floor_exceeds_initial_count,
  initial_count_exceeds_ceiling,
};

const char* to_string(ViolationRule rule);

struct Violation {
  std::string field;  // e.g. "majors[m2].floor"
  ViolationRule rule;
  std::string message;
};

std::vector<Violation> validate_problem(const Problem& problem);

/// Throws Error(invalid_problem) listing every violation.
void require_valid(const Problem& problem);

/// Student -> assigned major, indexed by StudentId::value.
using Assignment = std::vector<MajorId>;

Assignment corresponding_assignment(const Problem& problem, const Outcome& outcome);

/// |mu_m(E, A)| for every major, indexed by MajorId::value.
std::vector<int> headcounts(const Problem& problem, const Outcome& outcome);
int headcount(const Problem& problem, const Outcome& outcome, MajorId m);

bool respects_distributional(const Problem& problem, const Outcome& outcome, MajorId m);
bool respects_dual_priority(const Problem& problem, const Outcome& outcome, MajorId m);
bool is_permissible(const Problem& problem, const Outcome& outcome);

/// True iff base's transferable set is a strict subset of candidate's.
bool pareto_dominates(const Outcome& candidate, const Outcome& base);

/// A major's enlarged eligibility sets.
struct Expansion {
  MajorId major;
  std::vector<StudentId> transfer_out;  // the new E'_m
  std::vector<StudentId> transfer_in;   // the new A'_m
};

/// Smallest strict prefix extension of m's eligibility sets that respects m's
/// own dual priority and bounds, if any. Ordered by total number of added
/// students, then by transfer-out additions.
std::optional<Expansion> can_permissibly_expand(const Problem& problem, const Outcome& outcome, MajorId m);

bool is_em(const Problem& problem, const Outcome& outcome);

struct MajorClassification {
  std::vector<MajorId> overdemanded;
  std::vector<MajorId> underdemanded;
  std::vector<MajorId> balanced;
};

/// Throws Error(not_permissible_em) unless the outcome is permissible and EM.
MajorClassification classify_majors(const Problem& problem, const Outcome& em_outcome);

/// The students of m holding each eligibility, best priority first.
std::vector<StudentId> out_holders(const Problem& problem, const Outcome& outcome, MajorId m);
std::vector<StudentId> in_holders(const Problem& problem, const Outcome& outcome, MajorId m);

}  // namespace majortrans
