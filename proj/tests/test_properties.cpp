// Invariants over random small instances, checked against the raw-subset oracle.
// Seeds differ from the acceptance suite's.

#include <doctest.h>

#include <random>

#include "checks.hpp"
#include "support.hpp"

using namespace majortrans;
using fixtures::Shape;

namespace {

template <typename Check>
void sweep(std::uint64_t seed, int count, Shape shape, Check&& check, int max_majors = 4, int max_students = 8) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    const Problem p = fixtures::random_problem(rng, shape, max_majors, max_students);
    const auto v = check(p);
    if (!v.empty()) FAIL_CHECK(v.front() << " in " << checks::dump(p));
  }
}

}  // namespace

TEST_CASE("EM and dual EM outputs are permissible and EM") {
  sweep(501, 200, Shape::general, checks::em_outputs_are_permissible_em);
  sweep(502, 100, Shape::general, checks::em_outputs_are_permissible_em, 2, 10);
}

TEST_CASE("efficient mechanisms land on the frontier from every EM start") {
  sweep(503, 200, Shape::general, checks::eaem_outputs_on_frontier);
  sweep(504, 60, Shape::ceiling_only, checks::eaem_outputs_on_frontier);
  sweep(505, 60, Shape::floor_only, checks::eaem_outputs_on_frontier);
}

TEST_CASE("every permissible EM outcome saturates one side of each major") {
  sweep(506, 200, Shape::general, checks::em_outcomes_saturate_a_side);
}

TEST_CASE("improvements over EM outcomes keep demand classes") {
  sweep(507, 200, Shape::general, checks::improvements_respect_classes);
}

TEST_CASE("exchange outputs cannot be improved on their fixed side") {
  sweep(508, 200, Shape::general, checks::exchange_outputs_fix_their_side);
}

TEST_CASE("one process suffices without floors or without ceilings") {
  sweep(509, 150, Shape::ceiling_only, [](const Problem& p) { return checks::single_process_collapse(p, true); });
  sweep(510, 150, Shape::floor_only, [](const Problem& p) { return checks::single_process_collapse(p, false); });
}

TEST_CASE("pinned headcounts") {
  sweep(511, 150, Shape::balanced, checks::balanced_collapse);
}

TEST_CASE("the checks catch a planted defect") {
  // a non-EM outcome must not pass as EM
  const Problem p = fixtures::example3();
  CHECK_FALSE(brute::is_em(p, brute::to_mask(fixtures::example3_star(p).transfer_out),
                           brute::to_mask(fixtures::example3_star(p).transfer_in)));
  const auto front = brute::frontier(p);
  CHECK_FALSE(front.count(brute::to_mask(fixtures::example3_em(p).transferable())));
}
