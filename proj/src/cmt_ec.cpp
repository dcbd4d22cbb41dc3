#include "majortrans/cmt_ec.hpp"

#include <algorithm>
#include <string>

namespace majortrans {

std::vector<Constraint> derive_constraints(std::span<const int> initial_counts, const CapProfile& caps) {
  if (caps.caps.size() != initial_counts.size())
    throw Error(ErrorCode::invalid_config, "cap profile has " + std::to_string(caps.caps.size()) +
                                               " entries for " + std::to_string(initial_counts.size()) + " majors");
  std::vector<Constraint> out;
  out.reserve(initial_counts.size());
  for (std::size_t m = 0; m < initial_counts.size(); ++m) {
    const Cap c = caps.caps[m];
    if (c.out < 0 || c.in < 0) throw Error(ErrorCode::invalid_config, "negative cap");
    out.push_back({std::max(0, initial_counts[m] - c.out), initial_counts[m] + c.in});
  }
  return out;
}

std::vector<Constraint> derive_constraints(const Problem& problem, const CapProfile& caps) {
  std::vector<int> counts;
  for (MajorId m : problem.major_ids()) counts.push_back(static_cast<int>(problem.initial_members(m).size()));
  return derive_constraints(counts, caps);
}

MechanismRun run_cmt_ec(const Problem& problem, const CapProfile& caps, const RunOptions& options) {
  const auto derived = derive_constraints(problem, caps);
  for (MajorId m : problem.major_ids()) {
    const Constraint have = problem.bounds(m);
    const Constraint want = derived[m.value];
    if (have != want)
      throw Error(ErrorCode::cap_mismatch, "major " + problem.major(m).name + " has bounds (" +
                                               std::to_string(have.floor) + "," + std::to_string(have.ceiling) +
                                               ") but its caps imply (" + std::to_string(want.floor) + "," +
                                               std::to_string(want.ceiling) + ")");
  }

  MechanismRun run;
  run.trace.mechanism = "cmt-ec";
  Outcome current = Outcome::empty(problem.student_count());
  run.trace.initial = current;

  TraceStep out_step;
  out_step.index = 1;
  out_step.process = "cmt-ec";
  out_step.phase = Phase::transfer_out;
  out_step.state = current;
  for (MajorId m : problem.major_ids()) {
    const auto list = problem.out_priority(m);
    const std::size_t take = std::min<std::size_t>(caps.caps[m.value].out, list.size());
    for (std::size_t r = 0; r < take; ++r) {
      current.transfer_out.insert(list[r]);
      out_step.events.push_back({list[r], m, Side::transfer_out, Action::grant});
    }
  }
  out_step.result = current;

  TraceStep in_step;
  in_step.index = 2;
  in_step.process = "cmt-ec";
  in_step.phase = Phase::transfer_in;
  in_step.state = current;
  for (MajorId m : problem.major_ids()) {
    std::size_t left = static_cast<std::size_t>(caps.caps[m.value].in);
    for (StudentId i : problem.in_priority(m)) {
      if (left == 0) break;
      if (!current.transfer_out.contains(i)) continue;  // never applied
      current.transfer_in.insert(i);
      in_step.events.push_back({i, m, Side::transfer_in, Action::grant});
      --left;
    }
  }
  in_step.result = current;

  run.outcome = current;
  if (options.record_trace) {
    run.trace.steps.push_back(std::move(out_step));
    run.trace.steps.push_back(std::move(in_step));
  } else {
    run.trace.initial = Outcome{};
  }
  return run;
}

Outcome close_in_priority_gaps(const Problem& problem, const Outcome& outcome) {
  require_universe(problem, outcome);
  Outcome closed = outcome;
  for (MajorId m : problem.major_ids()) {
    const auto list = problem.in_priority(m);
    std::size_t last = 0;
    for (std::size_t r = 0; r < list.size(); ++r)
      if (outcome.transfer_in.contains(list[r])) last = r + 1;
    for (std::size_t r = 0; r < last; ++r) closed.transfer_in.insert(list[r]);
  }
  return closed;
}

}  // namespace majortrans
