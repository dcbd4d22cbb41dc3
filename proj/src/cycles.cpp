#include "majortrans/cycles.hpp"

#include <algorithm>

#include "detail/prefix_state.hpp"
#include "majortrans/model.hpp"

namespace majortrans {

namespace {

// Shared shape of both pointing rules. `candidates` is the major's list on the
// pointing side, `served` its holders on that side, `needed` the set the
// pointee must hold, `next` maps a pointee to the major it leads to.
template <typename List, typename Next>
PointingResult point(const Problem& problem, std::span<const MajorId> live, List list, const StudentSet& served,
                     const StudentSet& needed, Next next) {
  std::vector<bool> is_live(problem.major_count(), false);
  for (MajorId m : live) is_live.at(m.value) = true;

  PointingResult r;
  for (MajorId m : problem.major_ids()) {
    if (!is_live[m.value]) continue;
    PointerEdge edge{m, std::nullopt};
    for (StudentId i : list(m)) {
      if (!served.contains(i) && needed.contains(i)) {
        edge.student = i;
        break;
      }
    }
    if (!edge.student || !is_live[next(*edge.student).value]) r.removed.push_back(m);
    r.pointers.push_back(edge);
  }
  return r;
}

}  // namespace

PointingResult tie_pointing(const Problem& problem, const Outcome& outcome, std::span<const MajorId> live) {
  require_universe(problem, outcome);
  return point(
      problem, live, [&](MajorId m) { return problem.in_priority(m); }, outcome.transfer_in, outcome.transfer_out,
      [&](StudentId i) { return problem.initial(i); });
}

PointingResult toe_pointing(const Problem& problem, const Outcome& outcome, std::span<const MajorId> live) {
  require_universe(problem, outcome);
  return point(
      problem, live, [&](MajorId m) { return problem.out_priority(m); }, outcome.transfer_out, outcome.transfer_in,
      [&](StudentId i) { return problem.applied(i); });
}

std::vector<ExchangeCycle> find_cycles(const Problem& problem, CycleKind kind, std::span<const PointerEdge> pointers) {
  const std::size_t n = problem.major_count();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> succ(n, none);
  std::vector<std::optional<StudentId>> pointee(n);
  for (const auto& e : pointers) {
    if (!e.student) continue;
    pointee[e.major.value] = e.student;
    succ[e.major.value] =
        (kind == CycleKind::transfer_in ? problem.initial(*e.student) : problem.applied(*e.student)).value;
  }

  // 0 = unseen, 1 = on the current walk, 2 = finished
  std::vector<char> color(n, 0);
  std::vector<ExchangeCycle> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start]) continue;
    std::vector<std::size_t> walk;
    std::size_t v = start;
    while (v != none && color[v] == 0) {
      color[v] = 1;
      walk.push_back(v);
      v = succ[v];
    }
    if (v != none && color[v] == 1) {
      auto from = std::find(walk.begin(), walk.end(), v);
      auto low = std::min_element(from, walk.end());
      std::rotate(from, low, walk.end());
      ExchangeCycle c{kind, {}};
      for (auto it = from; it != walk.end(); ++it)
        c.links.push_back({MajorId{static_cast<std::uint32_t>(*it)}, *pointee[*it]});
      cycles.push_back(std::move(c));
    }
    for (std::size_t w : walk) color[w] = 2;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const ExchangeCycle& a, const ExchangeCycle& b) { return a.links.front().major < b.links.front().major; });
  return cycles;
}

namespace {

enum class Kind { tie, toe };

// Runs one exchange process on a prefix state, appending to `trace` when given.
void run_process(const Problem& problem, detail::PrefixState& state, Kind kind, MechanismTrace* trace) {
  const bool tie = kind == Kind::tie;
  const std::size_t n = problem.major_count();
  std::vector<bool> live(n, true);
  std::size_t live_count = n;

  // Candidate scan positions only move forward: the side being revoked
  // (E in TiE, A in ToE) never grows during a process.
  std::vector<std::size_t> scan(n, 0);
  std::vector<std::optional<StudentId>> pointee(n);
  std::vector<std::size_t> pointee_pos(n, 0);

  for (std::size_t k = 1;; ++k) {
    TraceStep step;
    if (trace) {
      step.index = k;
      step.process = tie ? "tie" : "toe";
      step.state = state.to_outcome();
      for (MajorId m : problem.major_ids())
        if (live[m.value]) step.live.push_back(m);
    }
    if (live_count == 0) {
      if (trace) {
        step.phase = Phase::stop;
        step.result = step.state;
        trace->steps.push_back(std::move(step));
      }
      return;
    }

    std::vector<MajorId> removed;
    std::vector<PointerEdge> edges;
    for (MajorId m : problem.major_ids()) {
      if (!live[m.value]) continue;
      const auto list = tie ? problem.in_priority(m) : problem.out_priority(m);
      std::size_t& p = scan[m.value];
      p = std::max(p, tie ? state.in_len(m) : state.out_len(m));
      while (p < list.size() && !(tie ? state.has_out(list[p]) : state.has_in(list[p]))) ++p;
      pointee[m.value] = p < list.size() ? std::optional<StudentId>(list[p]) : std::nullopt;
      pointee_pos[m.value] = p;
      edges.push_back({m, pointee[m.value]});
      if (!pointee[m.value]) {
        removed.push_back(m);
      } else {
        const MajorId next = tie ? problem.initial(list[p]) : problem.applied(list[p]);
        if (!live[next.value]) removed.push_back(m);
      }
    }
    std::vector<EligibilityEvent>* events = trace ? &step.events : nullptr;

    if (!removed.empty()) {
      step.phase = Phase::pointing;
      for (MajorId m : removed) {
        // keep the prefix up to the lowest holder that is transferable; all of
        // it goes when no holder is
        const auto own = tie ? problem.out_priority(m) : problem.in_priority(m);
        std::size_t keep = tie ? state.out_len(m) : state.in_len(m);
        while (keep > 0 && !(tie ? state.has_in(own[keep - 1]) : state.has_out(own[keep - 1]))) --keep;
        if (tie)
          state.set_out_len(m, keep, events);
        else
          state.set_in_len(m, keep, events);
      }
      for (MajorId m : removed) {
        live[m.value] = false;
        --live_count;
      }
    } else {
      step.phase = Phase::cycle_execution;
      auto cycles = find_cycles(problem, tie ? CycleKind::transfer_in : CycleKind::transfer_out, edges);
      for (const auto& c : cycles)
        for (const auto& link : c.links) {
          if (tie)
            state.set_in_len(link.major, pointee_pos[link.major.value] + 1, events);
          else
            state.set_out_len(link.major, pointee_pos[link.major.value] + 1, events);
        }
      if (trace) step.cycles = std::move(cycles);
    }

    if (trace) {
      step.pointers = std::move(edges);
      step.removed = std::move(removed);
      step.result = state.to_outcome();
      trace->steps.push_back(std::move(step));
    }
  }
}

void require_permissible(const Problem& problem, const Outcome& start) {
  require_universe(problem, start);
  if (!is_permissible(problem, start)) throw Error(ErrorCode::not_permissible, "start outcome is not permissible");
}

void require_permissible_em(const Problem& problem, const Outcome& start) {
  require_universe(problem, start);
  if (!is_permissible(problem, start) || !is_em(problem, start))
    throw Error(ErrorCode::not_permissible_em, "start outcome is not permissible and eligibility-maximal");
}

MechanismRun run_sequence(const Problem& problem, const Outcome& start, std::initializer_list<Kind> kinds,
                          const char* name, const RunOptions& options) {
  auto state = detail::PrefixState::from_outcome(problem, start);
  MechanismRun run;
  run.trace.mechanism = name;
  MechanismTrace* trace = options.record_trace ? &run.trace : nullptr;
  if (trace) run.trace.initial = start;
  for (Kind k : kinds) run_process(problem, state, k, trace);
  run.outcome = state.to_outcome();
  return run;
}

}  // namespace

MechanismRun tie_process(const Problem& problem, const Outcome& start, const RunOptions& options) {
  require_permissible(problem, start);
  return run_sequence(problem, start, {Kind::tie}, "tie", options);
}

MechanismRun toe_process(const Problem& problem, const Outcome& start, const RunOptions& options) {
  require_permissible(problem, start);
  return run_sequence(problem, start, {Kind::toe}, "toe", options);
}

MechanismRun eaem_tie(const Problem& problem, const Outcome& em_start, const RunOptions& options) {
  require_permissible_em(problem, em_start);
  return run_sequence(problem, em_start, {Kind::tie, Kind::toe}, "eaem-tie", options);
}

MechanismRun eaem_toe(const Problem& problem, const Outcome& em_start, const RunOptions& options) {
  require_permissible_em(problem, em_start);
  return run_sequence(problem, em_start, {Kind::toe, Kind::tie}, "eaem-toe", options);
}

}  // namespace majortrans
