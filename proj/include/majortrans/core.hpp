#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace majortrans {

/// Dense index of a student inside a Problem.
struct StudentId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(StudentId, StudentId) = default;
};

/// Dense index of a major inside a Problem.
struct MajorId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(MajorId, MajorId) = default;
};

enum class ErrorCode {
  invalid_problem,
  unknown_student,
  unknown_major,
  universe_mismatch,
  not_permissible,
  not_permissible_em,
  cap_mismatch,
  guard_exceeded,
  invalid_config,
  parse_error,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Membership set over the students of one problem. Equality, hashing and
/// ordering are structural; ordering compares the sorted member lists
/// lexicographically.
class StudentSet {
 public:
  StudentSet() = default;
  explicit StudentSet(std::size_t universe, bool full = false)
      : bits_(universe, full), count_(full ? universe : 0) {}

  static StudentSet of(std::size_t universe, const std::vector<StudentId>& members);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(StudentId i) const { return i.value < bits_.size() && bits_[i.value]; }
  void insert(StudentId i);
  void erase(StudentId i);

  std::vector<StudentId> members() const;

  bool is_subset_of(const StudentSet& other) const;
  bool is_strict_subset_of(const StudentSet& other) const {
    return count_ < other.count_ && is_subset_of(other);
  }

  friend StudentSet operator&(const StudentSet& a, const StudentSet& b);
  friend StudentSet operator|(const StudentSet& a, const StudentSet& b);
  friend StudentSet operator-(const StudentSet& a, const StudentSet& b);

  friend bool operator==(const StudentSet& a, const StudentSet& b) {
    return a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(const StudentSet& a, const StudentSet& b);

  std::size_t hash() const { return std::hash<std::vector<bool>>{}(bits_); }

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// An eligibility outcome: who holds transfer-out eligibility from their
/// initial major and who holds transfer-in eligibility from their applied major.
struct Outcome {
  StudentSet transfer_out;
  StudentSet transfer_in;

  Outcome() = default;
  Outcome(StudentSet out, StudentSet in);

  /// Students holding both eligibilities.
  StudentSet transferable() const { return transfer_out & transfer_in; }
  std::size_t universe() const { return transfer_out.universe(); }

  static Outcome empty(std::size_t universe) {
    return {StudentSet(universe), StudentSet(universe)};
  }

  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend std::strong_ordering operator<=>(const Outcome& a, const Outcome& b) {
    if (auto c = a.transfer_out <=> b.transfer_out; c != 0) return c;
    return a.transfer_in <=> b.transfer_in;
  }
};

}  // namespace majortrans

template <>
struct std::hash<majortrans::StudentId> {
  std::size_t operator()(majortrans::StudentId id) const noexcept { return id.value; }
};

template <>
struct std::hash<majortrans::MajorId> {
  std::size_t operator()(majortrans::MajorId id) const noexcept { return id.value; }
};

template <>
struct std::hash<majortrans::StudentSet> {
  std::size_t operator()(const majortrans::StudentSet& s) const { return s.hash(); }
};

template <>
struct std::hash<majortrans::Outcome> {
  std::size_t operator()(const majortrans::Outcome& o) const {
    return o.transfer_out.hash() * 1000003u ^ o.transfer_in.hash();
  }
};
