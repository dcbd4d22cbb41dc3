#include <doctest.h>

#include <cmath>

#include "majortrans/cycles.hpp"
#include "majortrans/em.hpp"
#include "majortrans/model.hpp"
#include "majortrans/oracle.hpp"
#include "majortrans/sim.hpp"
#include "support.hpp"

using namespace majortrans;
using namespace majortrans::sim;

namespace {

ScenarioConfig small(Regime regime, double beta1, double beta2) {
  ScenarioConfig c;
  c.n_majors = 4;
  c.capacity = 2;
  c.regime = regime;
  c.beta1 = beta1;
  c.beta2 = beta2;
  c.floor_frac = 0.5;
  c.ceiling_frac = 1.5;
  c.trials = 40;
  return c;
}

}  // namespace

TEST_CASE("own-major weight alone keeps everyone home") {
  ScenarioConfig c;
  c.beta1 = c.beta2 = 0;
  for (std::uint64_t t = 0; t < 5; ++t) {
    const auto g = generate_instance(c, trial_seed(c.master_seed, t));
    CHECK(g.problem.student_count() == 0);
    CHECK(g.total_students == 1000);
  }
  c.trials = 3;
  const auto r = run_scenario(c);
  CHECK(r.mean_applicants == 0);
  for (Mechanism m : all_mechanisms) CHECK(r[m].mean == 0);
}

TEST_CASE("pure individual taste: about nine in ten apply") {
  ScenarioConfig c;
  c.beta1 = 1;
  c.beta2 = 0;
  double applicants = 0;
  const int trials = 20;
  for (int t = 0; t < trials; ++t)
    applicants += generate_instance(c, trial_seed(c.master_seed, t)).problem.student_count();
  const double frac = applicants / (trials * 1000.0);
  CHECK(frac == doctest::Approx(0.9).epsilon(0.02));
}

TEST_CASE("generated instances are valid and reproducible") {
  for (Regime regime : {Regime::balanced, Regime::band}) {
    ScenarioConfig c;
    c.regime = regime;
    c.beta1 = 0.5;
    c.beta2 = 0.2;
    const auto a = generate_instance(c, 42);
    const auto b = generate_instance(c, 42);
    CHECK(a.problem == b.problem);
    CHECK(a.non_applicants == b.non_applicants);
    CHECK(validate_problem(a.problem).empty());
    int total = static_cast<int>(a.problem.student_count());
    for (int n : a.non_applicants) total += n;
    CHECK(total == a.total_students);
    const Constraint raw = raw_bounds(c);
    for (MajorId m : a.problem.major_ids()) {
      const Constraint b = a.problem.bounds(m);
      const int n = a.non_applicants[m.value];
      CHECK(b.ceiling == raw.ceiling - n);
      CHECK(b.floor == std::max(0, raw.floor - n));
    }
    CHECK_FALSE(generate_instance(c, 43).problem == a.problem);
  }
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("transition rate") {
  const Problem p = fixtures::example3();
  CHECK(compute_str(p, fixtures::example3_em(p)) == 0);
  CHECK(compute_str(p, fixtures::example3_star(p)) == doctest::Approx(2.0 / 7));
  const auto everyone = fixtures::all_students(p);
  CHECK(compute_str(p, fixtures::outcome(p, everyone, everyone)) == 1);
  CHECK(compute_str(Problem{}, Outcome::empty(0)) == 0);
}

TEST_CASE("config validation") {
  auto code = [](ScenarioConfig c) {
    try {
      validate(c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::parse_error;
  };
  ScenarioConfig c;
  CHECK_NOTHROW(validate(c));
  c.beta1 = 0.8;
  c.beta2 = 0.3;
  CHECK(code(c) == ErrorCode::invalid_config);
  c = {};
  c.trials = 0;
  CHECK(code(c) == ErrorCode::invalid_config);
  c = {};
  c.beta1 = -0.1;
  CHECK(code(c) == ErrorCode::invalid_config);
  c = {};
  c.regime = Regime::band;
  c.ceiling_frac = 0.9;
  CHECK(code(c) == ErrorCode::invalid_config);
}

TEST_CASE("results do not depend on thread count") {
  ScenarioConfig c;
  c.regime = Regime::band;
  c.beta1 = 0.5;
  c.beta2 = 0.1;
  c.trials = 12;
  const auto one = run_scenario(c);
  c.threads = 3;
  const auto three = run_scenario(c);
  REQUIRE(one.records.size() == three.records.size());
  for (std::size_t t = 0; t < one.records.size(); ++t) {
    CHECK(one.records[t].seed == three.records[t].seed);
    for (int m = 0; m < 4; ++m) CHECK(one.records[t].str[m] == three.records[t].str[m]);
  }
  for (Mechanism m : all_mechanisms) {
    CHECK(one[m].mean == three[m].mean);
    CHECK(one[m].std_dev == three[m].std_dev);
  }
  CHECK(run_trial(c, 5).str[1] == one.records[5].str[1]);
}

TEST_CASE("grid shape and singleton suite") {
  ScenarioConfig base;
  base.trials = 2;
  const auto grid = default_grid(base);
  CHECK(grid.size() == 24);
  for (const auto& g : grid) {
    const double w = own_weight(g);
    CHECK((std::abs(w - 0.4) < 1e-9 || std::abs(w - 0.3) < 1e-9 || std::abs(w - 0.2) < 1e-9));
    CHECK(g.beta1 + g.beta2 <= 1 + 1e-12);
  }
  base.beta1 = 0.6;
  base.beta2 = 0.0;
  base.regime = Regime::band;
  const auto suite = run_scenario_suite({base});
  const auto single = run_scenario(base);
  REQUIRE(suite.size() == 1);
  for (Mechanism m : all_mechanisms) CHECK(suite[0][m].mean == single[m].mean);
}

TEST_CASE("per-trial relations at full scale") {
  for (Regime regime : {Regime::balanced, Regime::band}) {
    ScenarioConfig c;
    c.regime = regime;
    c.beta1 = 0.6;
    c.beta2 = 0.1;
    c.trials = 10;
    const auto r = run_scenario(c);
    CHECK(r.efficient_mismatch.empty());
    CHECK(r.em_exceeds_efficient.empty());
    for (const auto& t : r.records) {
      for (double s : t.str) CHECK((s >= 0 && s <= 1));
      CHECK(t.str[0] <= t.str[1] + 1e-12);
      if (regime == Regime::balanced) {
        CHECK(t.str[0] == 0);
        CHECK(t.str[1] == 0);
      }
    }
  }
}

TEST_CASE("reduced-size instances: efficient outputs certified by the oracle") {
  int checked = 0;
  for (Regime regime : {Regime::balanced, Regime::band}) {
    for (double beta1 : {0.3, 0.6, 0.9}) {
      const ScenarioConfig c = small(regime, beta1, 0.1);
      for (int t = 0; t < c.trials; ++t) {
        const Problem p = generate_instance(c, trial_seed(c.master_seed, t)).problem;
        REQUIRE(validate_problem(p).empty());
        const Outcome em = run_em(p).outcome;
        const Outcome e1 = eaem_tie(p, em).outcome;
        const Outcome e2 = eaem_toe(p, em).outcome;
        CHECK(certify(p, e1).efficient);
        CHECK(certify(p, e2).efficient);
        CHECK(compute_str(p, em) <= compute_str(p, e1));
        ++checked;
      }
    }
  }
  CHECK(checked == 240);
}
