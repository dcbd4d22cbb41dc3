#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "majortrans/cmt_ec.hpp"
#include "majortrans/model.hpp"
#include "majortrans/sim.hpp"
#include "majortrans/trace.hpp"

namespace majortrans::io {

inline constexpr int schema_version = 1;

struct Instance {
  Problem problem;
  std::optional<CapProfile> caps;
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Parses and validates an instance document:
///   {"schema_version": 1,
///    "majors": [{"id", "floor", "ceiling", "out_priority": [...], "in_priority": [...]}],
///    "students": [{"id", "initial", "applied"}],
///    "caps": {"<major id>": {"out", "in"}}}      (optional)
/// Schema problems throw Error(parse_error) naming the JSON path; rule
/// violations throw Error(invalid_problem).
Instance parse_instance(std::string_view text);
Instance read_instance(const std::string& path);

/// Canonical JSON: sorted keys, majors and students in instance order.
nlohmann::json instance_to_json(const Instance& instance);
std::string render_instance(const Instance& instance);

/// Accepts {"E": [...], "A": [...]} (other keys ignored) or the inline form
/// "(E={i1,i2},A={})". Throws parse_error or unknown_student.
Outcome parse_outcome(const Problem& problem, std::string_view text);

/// {"schema_version", "E", "A", "mu"}; id arrays follow instance order.
nlohmann::json outcome_to_json(const Problem& problem, const Outcome& outcome);
std::string render_outcome(const Problem& problem, const Outcome& outcome);

/// "(E={i1,i3},A={i4})"
std::string inline_outcome(const Problem& problem, const Outcome& outcome);

nlohmann::json trace_to_json(const Problem& problem, const MechanismTrace& trace);
MechanismTrace trace_from_json(const Problem& problem, const nlohmann::json& doc);

/// One row per step: state, students away from their initial major, the
/// expandable and violated sets (EM-style steps) or pointers, removed majors
/// and cycles (exchange steps), then the step's actions.
std::string render_trace_table(const Problem& problem, const MechanismTrace& trace);

nlohmann::json report_to_json(const Problem& problem, const Outcome& outcome, bool permissible, bool em);

/// Scenario file:
///   {"schema_version": 1,
///    "base": {"n_majors", "capacity", "trials", "master_seed", "threads",
///             "floor_frac", "ceiling_frac"},             (all optional)
///    "grid": "default"  |  "cells": [{"regime", "beta1", "beta2"}]}
std::vector<sim::ScenarioConfig> parse_scenarios(std::string_view text);

/// Header: regime,beta1,beta2,mechanism,mean_str,std_str,trials,mean_applicants
std::string results_csv(const std::vector<sim::SimResult>& results);

nlohmann::json error_to_json(const Error& error);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace majortrans::io
