#include "majortrans/trace.hpp"

namespace majortrans {

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::transfer_in: return "transfer-in";
    case Phase::transfer_out: return "transfer-out";
    case Phase::pointing: return "pointing";
    case Phase::cycle_execution: return "cycle-execution";
    case Phase::stop: return "stop";
  }
  return "unknown";
}

bool is_well_formed(const Problem& problem, const ExchangeCycle& cycle) {
  const auto& links = cycle.links;
  if (links.empty()) return false;
  for (std::size_t l = 0; l < links.size(); ++l) {
    const CycleLink& here = links[l];
    const CycleLink& next = links[(l + 1) % links.size()];
    if (here.student.value >= problem.student_count()) return false;
    const auto& s = problem.student(here.student);
    if (cycle.kind == CycleKind::transfer_in) {
      if (s.applied != here.major || s.initial != next.major) return false;
    } else {
      if (s.initial != here.major || s.applied != next.major) return false;
    }
  }
  // each major appears once
  for (std::size_t a = 0; a < links.size(); ++a)
    for (std::size_t b = a + 1; b < links.size(); ++b)
      if (links[a].major == links[b].major) return false;
  return true;
}

Outcome apply_events(Outcome outcome, const std::vector<EligibilityEvent>& events) {
  for (const auto& e : events) {
    StudentSet& set = e.side == Side::transfer_out ? outcome.transfer_out : outcome.transfer_in;
    if (e.action == Action::grant)
      set.insert(e.student);
    else
      set.erase(e.student);
  }
  return outcome;
}

std::optional<Outcome> replay(const MechanismTrace& trace) {
  Outcome current = trace.initial;
  for (const auto& step : trace.steps) {
    if (step.state != current) return std::nullopt;
    current = apply_events(current, step.events);
    if (step.result != current) return std::nullopt;
  }
  return current;
}

}  // namespace majortrans
