#include "majortrans/model.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace majortrans {

const char* to_string(ViolationRule rule) {
  switch (rule) {
    case ViolationRule::duplicate_name: return "duplicate_name";
    case ViolationRule::unknown_major: return "unknown_major";
    case ViolationRule::unknown_student: return "unknown_student";
    case ViolationRule::applied_equals_initial: return "applied_equals_initial";
    case ViolationRule::out_priority_not_permutation: return "out_priority_not_permutation";
    case ViolationRule::in_priority_not_permutation: return "in_priority_not_permutation";
    case ViolationRule::negative_floor: return "negative_floor";
    case ViolationRule::floor_exceeds_ceiling: return "floor_exceeds_ceiling";
    case ViolationRule::floor_exceeds_initial_count: return "floor_exceeds_initial_count";
    case ViolationRule::initial_count_exceeds_ceiling: return "initial_count_exceeds_ceiling";
  }
  return "unknown";
}

namespace {

void check_priority(const Problem& problem, std::uint32_t m, bool out, std::vector<Violation>& found) {
  const auto& major = problem.majors()[m];
  const auto& list = out ? major.out_priority : major.in_priority;
  const std::string field = "majors[" + major.name + "]." + (out ? "out_priority" : "in_priority");
  const ViolationRule rule =
      out ? ViolationRule::out_priority_not_permutation : ViolationRule::in_priority_not_permutation;
  const std::size_t n = problem.student_count();

  std::unordered_set<std::uint32_t> seen;
  for (StudentId i : list) {
    if (i.value >= n) {
      found.push_back({field, ViolationRule::unknown_student,
                       "priority of " + major.name + " lists unknown student index " + std::to_string(i.value)});
      continue;
    }
    const auto& s = problem.students()[i.value];
    const MajorId owner = out ? s.initial : s.applied;
    if (owner.value != m) {
      found.push_back({field, rule,
                       "priority of " + major.name + " lists " + s.name + ", whose " +
                           (out ? "initial" : "applied") + " major is not " + major.name});
    } else if (!seen.insert(i.value).second) {
      found.push_back({field, rule, "priority of " + major.name + " lists " + s.name + " twice"});
    }
  }
  const auto members = out ? problem.initial_members(MajorId{m}) : problem.applicants(MajorId{m});
  for (StudentId i : members) {
    if (!seen.contains(i.value))
      found.push_back({field, rule,
                       "priority of " + major.name + " is missing " + problem.students()[i.value].name});
  }
}

}  // namespace

std::vector<Violation> validate_problem(const Problem& problem) {
  std::vector<Violation> found;
  const std::size_t majors = problem.major_count();

  {
    std::unordered_set<std::string> names;
    for (const auto& s : problem.students())
      if (!names.insert(s.name).second)
        found.push_back({"students[" + s.name + "].id", ViolationRule::duplicate_name,
                         "student id " + s.name + " appears more than once"});
    names.clear();
    for (const auto& m : problem.majors())
      if (!names.insert(m.name).second)
        found.push_back({"majors[" + m.name + "].id", ViolationRule::duplicate_name,
                         "major id " + m.name + " appears more than once"});
  }

  for (const auto& s : problem.students()) {
    const std::string field = "students[" + s.name + "]";
    bool known = true;
    if (s.initial.value >= majors) {
      found.push_back({field + ".initial", ViolationRule::unknown_major, s.name + " has an unknown initial major"});
      known = false;
    }
    if (s.applied.value >= majors) {
      found.push_back({field + ".applied", ViolationRule::unknown_major, s.name + " has an unknown applied major"});
      known = false;
    }
    if (known && s.initial == s.applied)
      found.push_back({field + ".applied", ViolationRule::applied_equals_initial,
                       s.name + " applies to their initial major " + problem.majors()[s.initial.value].name});
  }

  for (std::uint32_t m = 0; m < majors; ++m) {
    const auto& major = problem.majors()[m];
    const std::string field = "majors[" + major.name + "]";
    const int initial = static_cast<int>(problem.initial_members(MajorId{m}).size());
    const auto [floor, ceiling] = major.bounds;
    if (floor < 0)
      found.push_back({field + ".floor", ViolationRule::negative_floor, major.name + " has a negative floor"});
    if (floor > ceiling)
      found.push_back({field + ".floor", ViolationRule::floor_exceeds_ceiling,
                       major.name + " has floor " + std::to_string(floor) + " above ceiling " +
                           std::to_string(ceiling)});
    if (floor > initial)
      found.push_back({field + ".floor", ViolationRule::floor_exceeds_initial_count,
                       major.name + " has floor " + std::to_string(floor) + " above its " +
                           std::to_string(initial) + " initial students"});
    if (initial > ceiling)
      found.push_back({field + ".ceiling", ViolationRule::initial_count_exceeds_ceiling,
                       major.name + " has " + std::to_string(initial) + " initial students, above ceiling " +
                           std::to_string(ceiling)});
    check_priority(problem, m, true, found);
    check_priority(problem, m, false, found);
  }
  return found;
}

void require_valid(const Problem& problem) {
  const auto violations = validate_problem(problem);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid problem:";
  for (const auto& v : violations) msg << "\n  " << v.field << ": " << v.message;
  throw Error(ErrorCode::invalid_problem, msg.str());
}

Assignment corresponding_assignment(const Problem& problem, const Outcome& outcome) {
  require_universe(problem, outcome);
  Assignment mu(problem.student_count());
  for (std::uint32_t k = 0; k < mu.size(); ++k) {
    const StudentId i{k};
    const bool moves = outcome.transfer_out.contains(i) && outcome.transfer_in.contains(i);
    mu[k] = moves ? problem.applied(i) : problem.initial(i);
  }
  return mu;
}

std::vector<int> headcounts(const Problem& problem, const Outcome& outcome) {
  std::vector<int> count(problem.major_count(), 0);
  for (MajorId m : corresponding_assignment(problem, outcome))
    if (m.value < count.size()) ++count[m.value];
  return count;
}

int headcount(const Problem& problem, const Outcome& outcome, MajorId m) {
  problem.major(m);
  return headcounts(problem, outcome)[m.value];
}

bool respects_distributional(const Problem& problem, const Outcome& outcome, MajorId m) {
  const auto [floor, ceiling] = problem.bounds(m);
  const int n = headcount(problem, outcome, m);
  return floor <= n && n <= ceiling;
}

namespace {

bool is_prefix(std::span<const StudentId> priority, const StudentSet& holders) {
  bool gap = false;
  for (StudentId i : priority) {
    if (!holders.contains(i))
      gap = true;
    else if (gap)
      return false;
  }
  return true;
}

}  // namespace

bool respects_dual_priority(const Problem& problem, const Outcome& outcome, MajorId m) {
  require_universe(problem, outcome);
  return is_prefix(problem.out_priority(m), outcome.transfer_out) &&
         is_prefix(problem.in_priority(m), outcome.transfer_in);
}

bool is_permissible(const Problem& problem, const Outcome& outcome) {
  require_universe(problem, outcome);
  const auto count = headcounts(problem, outcome);
  for (MajorId m : problem.major_ids()) {
    const auto [floor, ceiling] = problem.bounds(m);
    if (count[m.value] < floor || count[m.value] > ceiling) return false;
    if (!is_prefix(problem.out_priority(m), outcome.transfer_out)) return false;
    if (!is_prefix(problem.in_priority(m), outcome.transfer_in)) return false;
  }
  return true;
}

bool pareto_dominates(const Outcome& candidate, const Outcome& base) {
  return base.transferable().is_strict_subset_of(candidate.transferable());
}

std::vector<StudentId> out_holders(const Problem& problem, const Outcome& outcome, MajorId m) {
  std::vector<StudentId> out;
  for (StudentId i : problem.out_priority(m))
    if (outcome.transfer_out.contains(i)) out.push_back(i);
  return out;
}

std::vector<StudentId> in_holders(const Problem& problem, const Outcome& outcome, MajorId m) {
  std::vector<StudentId> out;
  for (StudentId i : problem.in_priority(m))
    if (outcome.transfer_in.contains(i)) out.push_back(i);
  return out;
}

std::optional<Expansion> can_permissibly_expand(const Problem& problem, const Outcome& outcome, MajorId m) {
  require_universe(problem, outcome);
  const auto out_list = problem.out_priority(m);
  const auto in_list = problem.in_priority(m);
  const auto [floor, ceiling] = problem.bounds(m);

  // Shortest prefixes containing the current sets.
  std::size_t e_min = 0, e_held = 0;
  for (std::size_t r = 0; r < out_list.size(); ++r)
    if (outcome.transfer_out.contains(out_list[r])) e_min = r + 1, ++e_held;
  std::size_t a_min = 0, a_held = 0;
  for (std::size_t r = 0; r < in_list.size(); ++r)
    if (outcome.transfer_in.contains(in_list[r])) a_min = r + 1, ++a_held;

  // Leaving through the first e out-slots / arriving through the first a in-slots.
  std::vector<int> leaving(out_list.size() + 1, 0);
  for (std::size_t r = 0; r < out_list.size(); ++r)
    leaving[r + 1] = leaving[r] + (outcome.transfer_in.contains(out_list[r]) ? 1 : 0);
  std::vector<int> arriving(in_list.size() + 1, 0);
  for (std::size_t r = 0; r < in_list.size(); ++r)
    arriving[r + 1] = arriving[r] + (outcome.transfer_out.contains(in_list[r]) ? 1 : 0);

  const int initial = static_cast<int>(out_list.size());
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> best;  // (total, de, e, a)
  for (std::size_t e = e_min; e <= out_list.size(); ++e) {
    for (std::size_t a = a_min; a <= in_list.size(); ++a) {
      if (e == e_held && a == a_held) continue;  // no strict superset
      const int n = initial - leaving[e] + arriving[a];
      if (n < floor || n > ceiling) continue;
      const std::size_t de = e - e_held;
      const std::size_t key_total = de + (a - a_held);
      const auto key = std::make_tuple(key_total, de, e, a);
      if (!best || key < *best) best = key;
    }
  }
  if (!best) return std::nullopt;
  const auto [total, de, e, a] = *best;
  Expansion x{m, {out_list.begin(), out_list.begin() + static_cast<std::ptrdiff_t>(e)},
              {in_list.begin(), in_list.begin() + static_cast<std::ptrdiff_t>(a)}};
  std::sort(x.transfer_out.begin(), x.transfer_out.end());
  std::sort(x.transfer_in.begin(), x.transfer_in.end());
  return x;
}

bool is_em(const Problem& problem, const Outcome& outcome) {
  for (MajorId m : problem.major_ids())
    if (can_permissibly_expand(problem, outcome, m)) return false;
  return true;
}

MajorClassification classify_majors(const Problem& problem, const Outcome& em_outcome) {
  if (!is_permissible(problem, em_outcome) || !is_em(problem, em_outcome))
    throw Error(ErrorCode::not_permissible_em, "major classification requires a permissible EM outcome");
  MajorClassification c;
  for (MajorId m : problem.major_ids()) {
    const bool out_full = out_holders(problem, em_outcome, m).size() == problem.initial_members(m).size();
    const bool in_full = in_holders(problem, em_outcome, m).size() == problem.applicants(m).size();
    if (out_full && in_full)
      c.balanced.push_back(m);
    else if (out_full)
      c.overdemanded.push_back(m);
    else if (in_full)
      c.underdemanded.push_back(m);
    else  // every permissible EM outcome saturates at least one side
      throw Error(ErrorCode::not_permissible_em,
                  "major " + problem.major(m).name + " has neither eligibility side saturated");
  }
  return c;
}

}  // namespace majortrans
