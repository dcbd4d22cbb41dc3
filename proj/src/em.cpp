#include "majortrans/em.hpp"

#include <stdexcept>

#include "detail/prefix_state.hpp"
#include "majortrans/model.hpp"

namespace majortrans {

namespace {

// First student of `list` outside `holders`, if any.
std::optional<StudentId> top_unserved(std::span<const StudentId> list, const StudentSet& holders) {
  for (StudentId i : list)
    if (!holders.contains(i)) return i;
  return std::nullopt;
}

}  // namespace

std::vector<MajorId> transfer_in_expandable(const Problem& problem, const Outcome& outcome) {
  const auto count = headcounts(problem, outcome);
  std::vector<MajorId> out;
  for (MajorId m : problem.major_ids()) {
    const auto top = top_unserved(problem.in_priority(m), outcome.transfer_in);
    if (!top) continue;
    if (!outcome.transfer_out.contains(*top) || count[m.value] < problem.bounds(m).ceiling) out.push_back(m);
  }
  return out;
}

std::vector<MajorId> floor_violated(const Problem& problem, const Outcome& outcome) {
  const auto count = headcounts(problem, outcome);
  std::vector<MajorId> out;
  for (MajorId m : problem.major_ids())
    if (count[m.value] < problem.bounds(m).floor) out.push_back(m);
  return out;
}

std::vector<MajorId> transfer_out_expandable(const Problem& problem, const Outcome& outcome) {
  const auto count = headcounts(problem, outcome);
  std::vector<MajorId> out;
  for (MajorId m : problem.major_ids()) {
    const auto top = top_unserved(problem.out_priority(m), outcome.transfer_out);
    if (!top) continue;
    if (!outcome.transfer_in.contains(*top) || count[m.value] > problem.bounds(m).floor) out.push_back(m);
  }
  return out;
}

std::vector<MajorId> ceiling_violated(const Problem& problem, const Outcome& outcome) {
  const auto count = headcounts(problem, outcome);
  std::vector<MajorId> out;
  for (MajorId m : problem.major_ids())
    if (count[m.value] > problem.bounds(m).ceiling) out.push_back(m);
  return out;
}

namespace {

enum class Direction { em, alt_em };

MechanismRun run_expansion(const Problem& problem, Direction dir, const RunOptions& options) {
  using detail::PrefixState;
  const std::size_t majors = problem.major_count();
  const bool em = dir == Direction::em;

  std::vector<std::size_t> out_len(majors, 0), in_len(majors, 0);
  for (MajorId m : problem.major_ids()) {
    if (em)
      out_len[m.value] = problem.out_priority(m).size();
    else
      in_len[m.value] = problem.in_priority(m).size();
  }
  PrefixState state(problem, std::move(out_len), std::move(in_len));

  MechanismRun run;
  run.trace.mechanism = em ? "em" : "alt-em";
  if (options.record_trace) run.trace.initial = state.to_outcome();

  std::vector<MajorId> expandable, violated;
  for (std::size_t k = 1;; ++k) {
    expandable.clear();
    violated.clear();
    for (MajorId m : problem.major_ids()) {
      const auto [floor, ceiling] = problem.bounds(m);
      const int head = state.headcount(m);
      if (em) {
        if (state.in_len(m) < state.in_size(m)) {
          const StudentId top = problem.in_priority(m)[state.in_len(m)];
          if (!state.has_out(top) || head < ceiling) expandable.push_back(m);
        }
        if (head < floor) violated.push_back(m);
      } else {
        if (state.out_len(m) < state.out_size(m)) {
          const StudentId top = problem.out_priority(m)[state.out_len(m)];
          if (!state.has_in(top) || head > floor) expandable.push_back(m);
        }
        if (head > ceiling) violated.push_back(m);
      }
    }

    TraceStep step;
    if (options.record_trace) {
      step.index = k;
      step.process = run.trace.mechanism;
      step.state = state.to_outcome();
      step.expandable = expandable;
      step.violated = violated;
    }
    std::vector<EligibilityEvent>* events = options.record_trace ? &step.events : nullptr;

    if (!expandable.empty()) {
      // Expansion first: EM admits applicants, alt-EM releases leavers.
      step.phase = em ? Phase::transfer_in : Phase::transfer_out;
      for (MajorId m : expandable) {
        const StudentId s = em ? state.grant_in(m) : state.grant_out(m);
        if (events) events->push_back({s, m, em ? Side::transfer_in : Side::transfer_out, Action::grant});
      }
    } else if (!violated.empty()) {
      step.phase = em ? Phase::transfer_out : Phase::transfer_in;
      for (MajorId m : violated) {
        if ((em ? state.out_len(m) : state.in_len(m)) == 0)
          throw std::logic_error("bound violation with nothing left to revoke");
        const StudentId s = em ? state.revoke_out(m) : state.revoke_in(m);
        if (events) events->push_back({s, m, em ? Side::transfer_out : Side::transfer_in, Action::revoke});
      }
    } else {
      step.phase = Phase::stop;
    }

    const bool done = step.phase == Phase::stop;
    if (options.record_trace) {
      step.result = state.to_outcome();
      run.trace.steps.push_back(std::move(step));
    }
    if (done) break;
  }
  run.outcome = state.to_outcome();
  return run;
}

}  // namespace

MechanismRun run_em(const Problem& problem, const RunOptions& options) {
  return run_expansion(problem, Direction::em, options);
}

MechanismRun run_alt_em(const Problem& problem, const RunOptions& options) {
  return run_expansion(problem, Direction::alt_em, options);
}

}  // namespace majortrans
