#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "majortrans/problem.hpp"

namespace majortrans {

enum class CycleKind { transfer_in, transfer_out };

/// One link of an exchange cycle: `major` points to `student`.
/// transfer-in cycles: major == applied(student), next link's major == initial(student).
/// transfer-out cycles: major == initial(student), next link's major == applied(student).
struct CycleLink {
  MajorId major;
  StudentId student;
  friend bool operator==(const CycleLink&, const CycleLink&) = default;
};

struct ExchangeCycle {
  CycleKind kind;
  std::vector<CycleLink> links;
  friend bool operator==(const ExchangeCycle&, const ExchangeCycle&) = default;
};

/// Checks the alternating major/student adjacency of a cycle.
bool is_well_formed(const Problem& problem, const ExchangeCycle& cycle);

enum class Phase {
  transfer_in,      // grants of transfer-in eligibility (EM k.1) or cap stage
  transfer_out,     // revocations (EM k.2) or grants (alt-EM k.1, cap stage)
  pointing,         // TiE/ToE step (a): removed majors revoke eligibility
  cycle_execution,  // TiE/ToE step (b)
  stop,
};

const char* to_string(Phase phase);

enum class Side { transfer_out, transfer_in };
enum class Action { grant, revoke };

struct EligibilityEvent {
  StudentId student;
  MajorId major;  // the major granting or revoking
  Side side;
  Action action;
  friend bool operator==(const EligibilityEvent&, const EligibilityEvent&) = default;
};

struct PointerEdge {
  MajorId major;
  std::optional<StudentId> student;
};

struct TraceStep {
  std::size_t index = 0;  // 1-based, matching step k
  std::string process;    // "em", "alt-em", "tie", "toe", "cmt-ec"
  Phase phase = Phase::stop;
  Outcome state;  // (E^k, A^k) before the step's actions

  // EM / alt-EM: expandable majors (M^in+ or M^out+) and bound violations
  // (M^out- or M^in-).
  std::vector<MajorId> expandable;
  std::vector<MajorId> violated;

  // TiE / ToE: live majors J^k, pointers, removed majors N^k, executed cycles.
  std::vector<MajorId> live;
  std::vector<PointerEdge> pointers;
  std::vector<MajorId> removed;
  std::vector<ExchangeCycle> cycles;

  std::vector<EligibilityEvent> events;
  Outcome result;  // snapshot after applying events
};

struct MechanismTrace {
  std::string mechanism;
  Outcome initial;
  std::vector<TraceStep> steps;
};

struct MechanismRun {
  Outcome outcome;
  MechanismTrace trace;
};

struct RunOptions {
  bool record_trace = true;
};

/// Applies grant/revoke events to an outcome.
Outcome apply_events(Outcome outcome, const std::vector<EligibilityEvent>& events);

/// Replays every step's events from the initial outcome; returns the final
/// outcome or nullopt if some snapshot does not match.
std::optional<Outcome> replay(const MechanismTrace& trace);

}  // namespace majortrans
