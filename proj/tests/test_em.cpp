#include <doctest.h>

#include <random>

#include "majortrans/em.hpp"
#include "majortrans/model.hpp"
#include "support.hpp"

using namespace majortrans;
using fixtures::outcome;

namespace {

std::vector<MajorId> ids(const Problem& p, std::initializer_list<const char*> names) {
  std::vector<MajorId> out;
  for (const char* n : names) out.push_back(p.major_id(n));
  return out;
}

}  // namespace

TEST_CASE("EM reproduces the seven-step run on example 3") {
  const Problem p = fixtures::example3();
  const auto run = run_em(p);
  const auto& s = run.trace.steps;
  REQUIRE(s.size() == 7);
  const std::vector<std::vector<MajorId>> in_plus = {ids(p, {"m5"}), ids(p, {"m4"}), ids(p, {"m3"}), {}, {}, {}, {}};
  const std::vector<std::vector<MajorId>> out_minus = {{}, ids(p, {"m4"}), ids(p, {"m3"}), ids(p, {"m4"}),
                                                       ids(p, {"m3"}), ids(p, {"m4"}), {}};
  for (std::size_t k = 0; k < 7; ++k) {
    CAPTURE(k);
    CHECK(s[k].index == k + 1);
    CHECK(s[k].expandable == in_plus[k]);
    CHECK(s[k].violated == out_minus[k]);
    // recorded sets agree with evaluating the definitions on the snapshot
    CHECK(transfer_in_expandable(p, s[k].state) == s[k].expandable);
    CHECK(floor_violated(p, s[k].state) == s[k].violated);
  }
  CHECK(s[6].phase == Phase::stop);
  CHECK(s[3].state == outcome(p, fixtures::all_students(p), {"i4", "i5", "i6"}));
  CHECK(run.outcome == fixtures::example3_em(p));
  CHECK(replay(run.trace) == run.outcome);
}

TEST_CASE("expandability and violation sets") {
  const Problem p = fixtures::example3();
  const auto everyone = fixtures::all_students(p);
  CHECK(transfer_in_expandable(p, outcome(p, everyone, {})) == ids(p, {"m5"}));
  CHECK(transfer_in_expandable(p, outcome(p, {}, everyone)).empty());
  CHECK(transfer_out_expandable(p, outcome(p, everyone, {})).empty());
  const auto out_plus = transfer_out_expandable(p, outcome(p, {}, everyone));
  CHECK(std::find(out_plus.begin(), out_plus.end(), p.major_id("m5")) != out_plus.end());
  CHECK(floor_violated(p, fixtures::example3_em(p)).empty());
  CHECK(ceiling_violated(p, fixtures::example3_em(p)).empty());

  const Problem q = fixtures::example2();
  CHECK(transfer_out_expandable(q, outcome(q, {}, {"i"})).empty());
  CHECK(ceiling_violated(q, outcome(q, {"i"}, {"i"})).empty());
  CHECK(floor_violated(q, outcome(q, {"i"}, {"i"})) == ids(q, {"m1"}));
}

TEST_CASE("small instances") {
  const Problem two = fixtures::example2();
  CHECK(run_em(two).outcome == outcome(two, {}, {"i"}));
  CHECK(run_alt_em(two).outcome == outcome(two, {}, {"i"}));

  // pinned at (1,1): neither major can admit while its own student is still there
  const Problem swap = fixtures::example5();
  CHECK(transfer_in_expandable(swap, outcome(swap, {"i1", "i2"}, {})).empty());
  CHECK(run_em(swap).outcome == outcome(swap, {"i1", "i2"}, {}));
  CHECK(run_alt_em(swap).outcome == outcome(swap, {}, {"i1", "i2"}));

  const Constraint roomy[] = {{0, 2}, {0, 2}};
  const Problem loose = swap.with_bounds(roomy);
  CHECK(run_em(loose).outcome == outcome(loose, {"i1", "i2"}, {"i1", "i2"}));
  CHECK(run_alt_em(loose).outcome == outcome(loose, {"i1", "i2"}, {"i1", "i2"}));
}

TEST_CASE("dual mechanism stays put when every major is pinned at its size") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const Problem p = fixtures::random_problem(rng, fixtures::Shape::balanced);
    const auto everyone = fixtures::all_students(p);
    CHECK(run_alt_em(p).outcome == outcome(p, {}, everyone));
    CHECK(run_em(p).outcome == outcome(p, everyone, {}));
  }
}

TEST_CASE("trace properties on random instances") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    const Problem p = fixtures::random_problem(rng, fixtures::Shape::general, 5, 10);
    for (bool em : {true, false}) {
      const auto run = em ? run_em(p) : run_alt_em(p);
      const auto& steps = run.trace.steps;
      CHECK(steps.size() <= 2 * p.student_count() + 1);
      CHECK(replay(run.trace) == run.outcome);
      CHECK(is_permissible(p, run.outcome));
      CHECK(is_em(p, run.outcome));
      for (const auto& s : steps) {
        for (MajorId m : p.major_ids()) CHECK(respects_dual_priority(p, s.result, m));
        // one side only grows, the other only shrinks
        const Outcome& a = s.state;
        const Outcome& b = s.result;
        if (em) {
          CHECK(b.transfer_out.is_subset_of(a.transfer_out));
          CHECK(a.transfer_in.is_subset_of(b.transfer_in));
        } else {
          CHECK(a.transfer_out.is_subset_of(b.transfer_out));
          CHECK(b.transfer_in.is_subset_of(a.transfer_in));
        }
      }
    }
  }
}
