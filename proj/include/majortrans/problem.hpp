#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "majortrans/core.hpp"

namespace majortrans {

struct StudentSpec {
  std::string name;
  MajorId initial;
  MajorId applied;
};

struct Constraint {
  int floor = 0;
  int ceiling = 0;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct MajorSpec {
  std::string name;
  Constraint bounds;
  std::vector<StudentId> out_priority;  // best first, over the major's initial students
  std::vector<StudentId> in_priority;   // best first, over the major's applicants
};

/// A major transition problem. Construction never throws on rule violations
/// so that validate_problem can report them; mechanisms assume a valid problem.
/// Priority ranks are precomputed and every priority comparison goes through them.
class Problem {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Problem() = default;
  Problem(std::vector<StudentSpec> students, std::vector<MajorSpec> majors);

  std::size_t student_count() const noexcept { return students_.size(); }
  std::size_t major_count() const noexcept { return majors_.size(); }

  std::span<const StudentSpec> students() const noexcept { return students_; }
  std::span<const MajorSpec> majors() const noexcept { return majors_; }

  const StudentSpec& student(StudentId i) const;
  const MajorSpec& major(MajorId m) const;

  MajorId initial(StudentId i) const { return student(i).initial; }
  MajorId applied(StudentId i) const { return student(i).applied; }
  Constraint bounds(MajorId m) const { return major(m).bounds; }

  std::span<const StudentId> out_priority(MajorId m) const { return major(m).out_priority; }
  std::span<const StudentId> in_priority(MajorId m) const { return major(m).in_priority; }

  /// omega_m and alpha_m, ascending by id.
  std::span<const StudentId> initial_members(MajorId m) const { return initial_members_.at(m.value); }
  std::span<const StudentId> applicants(MajorId m) const { return applicants_.at(m.value); }

  /// Position of i in the out (resp. in) priority list of its initial (resp.
  /// applied) major; 0 is the highest priority; npos when unlisted.
  std::size_t out_rank(StudentId i) const { return out_rank_.at(i.value); }
  std::size_t in_rank(StudentId i) const { return in_rank_.at(i.value); }

  std::optional<StudentId> find_student(std::string_view name) const;
  std::optional<MajorId> find_major(std::string_view name) const;
  StudentId student_id(std::string_view name) const;  // throws unknown_student
  MajorId major_id(std::string_view name) const;      // throws unknown_major

  std::vector<MajorId> major_ids() const;
  std::vector<StudentId> student_ids() const;

  /// Same students, majors and priorities with replaced floor/ceiling pairs.
  Problem with_bounds(std::span<const Constraint> bounds) const;

  friend bool operator==(const Problem& a, const Problem& b);

 private:
  void index();

  std::vector<StudentSpec> students_;
  std::vector<MajorSpec> majors_;
  std::vector<std::vector<StudentId>> initial_members_;
  std::vector<std::vector<StudentId>> applicants_;
  std::vector<std::size_t> out_rank_;
  std::vector<std::size_t> in_rank_;
  std::unordered_map<std::string, StudentId> student_by_name_;
  std::unordered_map<std::string, MajorId> major_by_name_;
};

struct NamedMajor {
  std::string name;
  int floor = 0;
  int ceiling = 0;
  std::vector<std::string> out_priority;
  std::vector<std::string> in_priority;
};

struct NamedStudent {
  std::string name;
  std::string initial;
  std::string applied;
};

/// Builds a problem from name-keyed records. Students keep the given order.
/// Throws Error(unknown_major / unknown_student) for dangling names; does not
/// run validate_problem.
Problem build_problem(const std::vector<NamedMajor>& majors, const std::vector<NamedStudent>& students);

/// Outcome from student names; throws unknown_student.
Outcome outcome_from_names(const Problem& problem, const std::vector<std::string>& transfer_out,
                           const std::vector<std::string>& transfer_in);

std::vector<std::string> names_of(const Problem& problem, const StudentSet& set);

/// Throws universe_mismatch when the outcome is not over this problem's students.
void require_universe(const Problem& problem, const Outcome& outcome);

}  // namespace majortrans
