#pragma once
// Fixtures and random instance generators shared by the test binaries.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "majortrans/model.hpp"
#include "majortrans/problem.hpp"

namespace fixtures {

using namespace majortrans;

inline Outcome outcome(const Problem& p, std::vector<std::string> e, std::vector<std::string> a) {
  return outcome_from_names(p, e, a);
}

inline std::vector<std::string> all_students(const Problem& p) {
  std::vector<std::string> out;
  for (const auto& s : p.students()) out.push_back(s.name);
  return out;
}

inline Problem example1() {
  return build_problem({{"m1", 1, 3, {"i1", "i2"}, {"i3", "i4"}}, {"m2", 0, 2, {"i3"}, {"i1"}}, {"m3", 0, 2, {"i4"}, {"i2"}}},
                       {{"i1", "m1", "m2"}, {"i2", "m1", "m3"}, {"i3", "m2", "m1"}, {"i4", "m3", "m1"}});
}

inline Problem example2() {
  return build_problem({{"m1", 1, 1, {"i"}, {}}, {"m2", 0, 1, {}, {"i"}}}, {{"i", "m1", "m2"}});
}

inline Problem example3() {
  return build_problem({{"m1", 0, 1, {"i1"}, {"i3", "i2"}},
                        {"m2", 0, 1, {"i2"}, {"i7", "i1"}},
                        {"m3", 2, 2, {"i3", "i4"}, {"i6"}},
                        {"m4", 2, 2, {"i5", "i6"}, {"i4"}},
                        {"m5", 0, 2, {"i7"}, {"i5"}}},
                       {{"i1", "m1", "m2"},
                        {"i2", "m2", "m1"},
                        {"i3", "m3", "m1"},
                        {"i4", "m3", "m4"},
                        {"i5", "m4", "m5"},
                        {"i6", "m4", "m3"},
                        {"i7", "m5", "m2"}});
}

inline Problem example5() {
  return build_problem({{"m1", 1, 1, {"i1"}, {"i2"}}, {"m2", 1, 1, {"i2"}, {"i1"}}},
                       {{"i1", "m1", "m2"}, {"i2", "m2", "m1"}});
}

// Neither single exchange process reaches the frontier here.
inline Problem two_sided_counterexample() {
  return build_problem({{"m1", 0, 1, {"i1"}, {"i3", "i2"}},
                        {"m2", 0, 1, {"i2"}, {"i1"}},
                        {"m3", 2, 2, {"i4", "i3"}, {"i6"}},
                        {"m4", 2, 2, {"i5", "i6"}, {"i4"}},
                        {"m5", 0, 1, {}, {"i5"}}},
                       {{"i1", "m1", "m2"},
                        {"i2", "m2", "m1"},
                        {"i3", "m3", "m1"},
                        {"i4", "m3", "m4"},
                        {"i5", "m4", "m5"},
                        {"i6", "m4", "m3"}});
}

inline Problem ceiling_only_incompatibility() {
  return build_problem({{"m1", 0, 1, {"i1"}, {"i2"}}, {"m2", 0, 1, {"i2"}, {"i3", "i1"}}, {"m3", 0, 1, {"i3"}, {}}},
                       {{"i1", "m1", "m2"}, {"i2", "m2", "m1"}, {"i3", "m3", "m2"}});
}

inline Problem floor_only_incompatibility() {
  return build_problem({{"m1", 2, 3, {"i1", "i2"}, {"i3"}}, {"m2", 1, 3, {"i3"}, {"i2"}}, {"m3", 0, 3, {}, {"i1"}}},
                       {{"i1", "m1", "m3"}, {"i2", "m1", "m2"}, {"i3", "m2", "m1"}});
}

// Example 3's EM outcome and the two efficient outcomes named in its analysis.
inline Outcome example3_em(const Problem& p) { return outcome(p, {"i1", "i2", "i3", "i7"}, {"i4", "i5", "i6"}); }
inline Outcome example3_star(const Problem& p) { return outcome(p, {"i1", "i2"}, all_students(p)); }
inline Outcome example3_diamond(const Problem& p) { return outcome(p, all_students(p), {"i4", "i6"}); }

enum class Shape { general, ceiling_only, floor_only, balanced };

inline const char* to_string(Shape s) {
  switch (s) {
    case Shape::general: return "general";
    case Shape::ceiling_only: return "ceiling-only";
    case Shape::floor_only: return "floor-only";
    case Shape::balanced: return "balanced";
  }
  return "?";
}

// Random valid problem with 2..max_majors majors and 0..max_students students.
inline Problem random_problem(std::mt19937_64& rng, Shape shape, int max_majors = 4, int max_students = 8) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n_majors = pick(2, max_majors);
  const int n_students = pick(0, max_students);

  std::vector<StudentSpec> students;
  for (int k = 0; k < n_students; ++k) {
    const int from = pick(0, n_majors - 1);
    int to = pick(0, n_majors - 2);
    if (to >= from) ++to;
    students.push_back({"i" + std::to_string(k + 1), MajorId{static_cast<std::uint32_t>(from)},
                        MajorId{static_cast<std::uint32_t>(to)}});
  }
  std::vector<MajorSpec> majors(n_majors);
  for (int m = 0; m < n_majors; ++m) majors[m].name = "m" + std::to_string(m + 1);
  for (int k = 0; k < n_students; ++k) {
    const StudentId id{static_cast<std::uint32_t>(k)};
    majors[students[k].initial.value].out_priority.push_back(id);
    majors[students[k].applied.value].in_priority.push_back(id);
  }
  for (auto& m : majors) {
    std::shuffle(m.out_priority.begin(), m.out_priority.end(), rng);
    std::shuffle(m.in_priority.begin(), m.in_priority.end(), rng);
    const int initial = static_cast<int>(m.out_priority.size());
    const int applicants = static_cast<int>(m.in_priority.size());
    switch (shape) {
      case Shape::general:
        m.bounds = {pick(0, initial), pick(initial, initial + applicants + 1)};
        break;
      case Shape::ceiling_only:
        m.bounds = {0, pick(initial, initial + applicants + 1)};
        break;
      case Shape::floor_only:
        m.bounds = {pick(0, initial), initial + applicants + pick(0, 1)};
        break;
      case Shape::balanced:
        m.bounds = {initial, initial};
        break;
    }
  }
  return Problem(std::move(students), std::move(majors));
}

}  // namespace fixtures
