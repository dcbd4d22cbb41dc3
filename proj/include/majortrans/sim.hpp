#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "majortrans/problem.hpp"

namespace majortrans::sim {

enum class Regime { balanced, band };

const char* to_string(Regime regime);

struct ScenarioConfig {
  int n_majors = 10;
  int capacity = 100;  // students initially enrolled in each major
  double beta1 = 0.5;  // weight on individual taste
  double beta2 = 0.1;  // weight on common taste
  Regime regime = Regime::balanced;
  double floor_frac = 0.9;    // band regime only
  double ceiling_frac = 1.1;  // band regime only
  int trials = 200;
  std::uint64_t master_seed = 20240501;
  int threads = 1;
};

/// Throws Error(invalid_config) describing the first problem found.
void validate(const ScenarioConfig& config);

/// Weight on the initial major, 1 - beta1 - beta2.
double own_weight(const ScenarioConfig& config);

/// Headcount bounds over all students of a major (before removing non-applicants).
Constraint raw_bounds(const ScenarioConfig& config);

struct GeneratedInstance {
  Problem problem;                  // applicants only
  std::vector<int> non_applicants;  // per major
  int total_students = 0;
};

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);

/// Deterministic in (config, seed). Draw order: common taste per major, then
/// individual taste per student and major, then out priorities per major, then
/// in priorities per major.
GeneratedInstance generate_instance(const ScenarioConfig& config, std::uint64_t seed);

/// Transferable students over students; 0 when there are none.
double compute_str(const Problem& problem, const Outcome& outcome);

enum class Mechanism { cmt_ec, em, eaem_tie, eaem_toe };
inline constexpr Mechanism all_mechanisms[] = {Mechanism::cmt_ec, Mechanism::em, Mechanism::eaem_tie,
                                               Mechanism::eaem_toe};
const char* to_string(Mechanism mechanism);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  int applicants = 0;
  double str[4] = {0, 0, 0, 0};  // indexed by Mechanism
};

struct MechanismStats {
  double mean = 0;
  double std_dev = 0;  // population standard deviation over trials
  int trials = 0;
};

struct SimResult {
  ScenarioConfig config;
  MechanismStats stats[4];  // indexed by Mechanism
  double mean_applicants = 0;
  std::vector<TrialRecord> records;                // ascending by trial
  std::vector<std::uint64_t> efficient_mismatch;   // trials where the two efficient mechanisms differ in STR
  std::vector<std::uint64_t> em_exceeds_efficient; // trials where EM beats an efficient mechanism

  const MechanismStats& operator[](Mechanism m) const { return stats[static_cast<int>(m)]; }
};

/// Runs every trial of the scenario. Results do not depend on `threads`.
SimResult run_scenario(const ScenarioConfig& config);

/// Runs one trial and returns its record.
TrialRecord run_trial(const ScenarioConfig& config, std::uint64_t trial);

/// Both regimes over the own-major weights 0.4 (beta1 0.3..0.6), 0.3 and 0.2
/// (beta1 0.4..0.7); beta1 steps by 0.1 and beta2 takes the remainder.
std::vector<ScenarioConfig> default_grid(const ScenarioConfig& base);

std::vector<SimResult> run_scenario_suite(const std::vector<ScenarioConfig>& grid);

}  // namespace majortrans::sim
