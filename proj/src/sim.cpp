#include "majortrans/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "majortrans/cmt_ec.hpp"
#include "majortrans/cycles.hpp"
#include "majortrans/em.hpp"

namespace majortrans::sim {

const char* to_string(Regime regime) { return regime == Regime::balanced ? "balanced" : "band"; }

const char* to_string(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::cmt_ec: return "cmt-ec";
    case Mechanism::em: return "em";
    case Mechanism::eaem_tie: return "eaem-tie";
    case Mechanism::eaem_toe: return "eaem-toe";
  }
  return "unknown";
}

void validate(const ScenarioConfig& c) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::invalid_config, what); };
  if (c.n_majors < 2) fail("n_majors must be at least 2");
  if (c.capacity < 1) fail("capacity must be positive");
  if (!(c.beta1 >= 0 && c.beta1 <= 1)) fail("beta1 must lie in [0,1]");
  if (!(c.beta2 >= 0 && c.beta2 <= 1)) fail("beta2 must lie in [0,1]");
  if (c.beta1 + c.beta2 > 1 + 1e-12) fail("beta1 + beta2 must not exceed 1");
  if (c.trials < 1) fail("trials must be at least 1");
  if (c.threads < 1) fail("threads must be at least 1");
  if (c.regime == Regime::band) {
    if (!(c.floor_frac >= 0 && c.floor_frac <= 1)) fail("floor_frac must lie in [0,1]");
    if (!(c.ceiling_frac >= 1)) fail("ceiling_frac must be at least 1");
  }
}

double own_weight(const ScenarioConfig& c) { return std::max(0.0, 1.0 - c.beta1 - c.beta2); }

Constraint raw_bounds(const ScenarioConfig& c) {
  if (c.regime == Regime::balanced) return {c.capacity, c.capacity};
  return {static_cast<int>(std::lround(c.floor_frac * c.capacity)),
          static_cast<int>(std::lround(c.ceiling_frac * c.capacity))};
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 53-bit uniform in [0,1); spelled out so draws match across standard libraries
double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<StudentId> ranked(const std::vector<StudentId>& members, std::mt19937_64& rng) {
  std::vector<std::pair<double, StudentId>> scored;
  scored.reserve(members.size());
  for (StudentId i : members) scored.emplace_back(u01(rng), i);
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<StudentId> out;
  out.reserve(scored.size());
  for (const auto& s : scored) out.push_back(s.second);
  return out;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
  return splitmix(splitmix(master_seed) ^ splitmix(trial + 0x632be59bd9b4e019ULL));
}

GeneratedInstance generate_instance(const ScenarioConfig& config, std::uint64_t seed) {
  validate(config);
  std::mt19937_64 rng(seed);
  const int n = config.n_majors;
  const double w = own_weight(config);

  std::vector<double> common(n);
  for (double& b : common) b = u01(rng);

  std::vector<StudentSpec> students;
  std::vector<int> non_applicants(n, 0);
  std::vector<double> taste(n);
  for (int m0 = 0; m0 < n; ++m0) {
    for (int k = 0; k < config.capacity; ++k) {
      for (double& a : taste) a = u01(rng);
      int best = 0;
      double best_u = -1;
      for (int m = 0; m < n; ++m) {
        const double u = config.beta1 * taste[m] + config.beta2 * common[m] + (m == m0 ? w : 0.0);
        if (u > best_u) best_u = u, best = m;  // ties keep the smaller major
      }
      if (best == m0) {
        ++non_applicants[m0];
        continue;
      }
      const int global = m0 * config.capacity + k;
      students.push_back({"i" + std::to_string(global + 1), MajorId{static_cast<std::uint32_t>(m0)},
                          MajorId{static_cast<std::uint32_t>(best)}});
    }
  }

  std::vector<std::vector<StudentId>> leaving(n), arriving(n);
  for (std::size_t s = 0; s < students.size(); ++s) {
    const StudentId id{static_cast<std::uint32_t>(s)};
    leaving[students[s].initial.value].push_back(id);
    arriving[students[s].applied.value].push_back(id);
  }

  const Constraint raw = raw_bounds(config);
  std::vector<MajorSpec> majors(n);
  for (int m = 0; m < n; ++m) {
    majors[m].name = "m" + std::to_string(m + 1);
    majors[m].bounds = {std::max(0, raw.floor - non_applicants[m]), raw.ceiling - non_applicants[m]};
  }
  for (int m = 0; m < n; ++m) majors[m].out_priority = ranked(leaving[m], rng);
  for (int m = 0; m < n; ++m) majors[m].in_priority = ranked(arriving[m], rng);

  return {Problem(std::move(students), std::move(majors)), std::move(non_applicants), n * config.capacity};
}

double compute_str(const Problem& problem, const Outcome& outcome) {
  require_universe(problem, outcome);
  if (problem.student_count() == 0) return 0.0;
  return static_cast<double>(outcome.transferable().size()) / static_cast<double>(problem.student_count());
}

namespace {

CapProfile sim_caps(const ScenarioConfig& config, const Problem& problem) {
  const Constraint raw = raw_bounds(config);
  CapProfile caps;
  for (MajorId m : problem.major_ids()) {
    const int initial = static_cast<int>(problem.initial_members(m).size());
    caps.caps.push_back({std::min(config.capacity - raw.floor, initial), raw.ceiling - config.capacity});
  }
  return caps;
}

}  // namespace

TrialRecord run_trial(const ScenarioConfig& config, std::uint64_t trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = trial_seed(config.master_seed, trial);
  const auto inst = generate_instance(config, rec.seed);
  const Problem& p = inst.problem;
  rec.applicants = static_cast<int>(p.student_count());

  const RunOptions quiet{false};
  const auto cmt = run_cmt_ec(p, sim_caps(config, p), quiet);
  const auto em = run_em(p, quiet);
  const auto tie = eaem_tie(p, em.outcome, quiet);
  const auto toe = eaem_toe(p, em.outcome, quiet);
  rec.str[static_cast<int>(Mechanism::cmt_ec)] = compute_str(p, cmt.outcome);
  rec.str[static_cast<int>(Mechanism::em)] = compute_str(p, em.outcome);
  rec.str[static_cast<int>(Mechanism::eaem_tie)] = compute_str(p, tie.outcome);
  rec.str[static_cast<int>(Mechanism::eaem_toe)] = compute_str(p, toe.outcome);
  return rec;
}

SimResult run_scenario(const ScenarioConfig& config) {
  validate(config);
  SimResult result;
  result.config = config;
  result.records.resize(config.trials);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t; (t = next.fetch_add(1)) < config.trials;)
      result.records[t] = run_trial(config, static_cast<std::uint64_t>(t));
  };
  const int workers = std::min(config.threads, config.trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < workers; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // aggregate in trial order so sums are bit-identical for any thread count
  const double n = config.trials;
  double applicants = 0;
  for (int k = 0; k < 4; ++k) {
    double sum = 0, sq = 0;
    for (const auto& r : result.records) {
      sum += r.str[k];
      sq += r.str[k] * r.str[k];
    }
    const double mean = sum / n;
    result.stats[k] = {mean, std::sqrt(std::max(0.0, sq / n - mean * mean)), config.trials};
  }
  for (const auto& r : result.records) {
    applicants += r.applicants;
    const double em = r.str[static_cast<int>(Mechanism::em)];
    const double tie = r.str[static_cast<int>(Mechanism::eaem_tie)];
    const double toe = r.str[static_cast<int>(Mechanism::eaem_toe)];
    if (tie != toe) result.efficient_mismatch.push_back(r.trial);
    if (em > tie || em > toe) result.em_exceeds_efficient.push_back(r.trial);
  }
  result.mean_applicants = applicants / n;
  return result;
}

std::vector<ScenarioConfig> default_grid(const ScenarioConfig& base) {
  struct Group {
    double own;
    double beta1[4];
  };
  const Group groups[] = {{0.4, {0.3, 0.4, 0.5, 0.6}}, {0.3, {0.4, 0.5, 0.6, 0.7}}, {0.2, {0.4, 0.5, 0.6, 0.7}}};
  std::vector<ScenarioConfig> grid;
  for (Regime regime : {Regime::balanced, Regime::band})
    for (const auto& g : groups)
      for (double b1 : g.beta1) {
        ScenarioConfig c = base;
        c.regime = regime;
        c.beta1 = b1;
        // round to two decimals so 1 - own - b1 prints cleanly
        c.beta2 = std::round((1.0 - g.own - b1) * 100.0) / 100.0;
        grid.push_back(c);
      }
  return grid;
}

std::vector<SimResult> run_scenario_suite(const std::vector<ScenarioConfig>& grid) {
  std::vector<SimResult> out;
  out.reserve(grid.size());
  for (const auto& c : grid) out.push_back(run_scenario(c));
  return out;
}

}  // namespace majortrans::sim
