#pragma once

#include <vector>

#include "majortrans/problem.hpp"
#include "majortrans/trace.hpp"

namespace majortrans::detail {

/// Working outcome for mechanisms whose eligibility sets stay priority
/// prefixes: each major's E_m / A_m is stored as a prefix length of its
/// out / in priority list. Headcounts are maintained incrementally.
class PrefixState {
 public:
  PrefixState(const Problem& problem, std::vector<std::size_t> out_len, std::vector<std::size_t> in_len);

  /// Throws Error(not_permissible) if some E_m or A_m is not a priority prefix.
  static PrefixState from_outcome(const Problem& problem, const Outcome& outcome);

  const Problem& problem() const { return *problem_; }

  bool has_out(StudentId i) const {
    return problem_->out_rank(i) < out_len_[problem_->initial(i).value];
  }
  bool has_in(StudentId i) const {
    return problem_->in_rank(i) < in_len_[problem_->applied(i).value];
  }
  bool transferable(StudentId i) const { return has_out(i) && has_in(i); }

  std::size_t out_len(MajorId m) const { return out_len_[m.value]; }
  std::size_t in_len(MajorId m) const { return in_len_[m.value]; }
  std::size_t out_size(MajorId m) const { return problem_->out_priority(m).size(); }
  std::size_t in_size(MajorId m) const { return problem_->in_priority(m).size(); }
  int headcount(MajorId m) const { return head_[m.value]; }

  /// Grow or shrink m's prefix by one; return the student affected.
  StudentId grant_out(MajorId m);
  StudentId revoke_out(MajorId m);
  StudentId grant_in(MajorId m);
  StudentId revoke_in(MajorId m);

  /// Set a prefix length, appending one event per affected student when
  /// `events` is given.
  void set_out_len(MajorId m, std::size_t len, std::vector<EligibilityEvent>* events);
  void set_in_len(MajorId m, std::size_t len, std::vector<EligibilityEvent>* events);

  Outcome to_outcome() const;

 private:
  const Problem* problem_;
  std::vector<std::size_t> out_len_;
  std::vector<std::size_t> in_len_;
  std::vector<int> head_;
};

}  // namespace majortrans::detail
