#include "detail/prefix_state.hpp"

namespace majortrans::detail {

PrefixState::PrefixState(const Problem& problem, std::vector<std::size_t> out_len, std::vector<std::size_t> in_len)
    : problem_(&problem), out_len_(std::move(out_len)), in_len_(std::move(in_len)) {
  head_.assign(problem.major_count(), 0);
  for (StudentId i : problem.student_ids()) {
    const MajorId at = transferable(i) ? problem.applied(i) : problem.initial(i);
    ++head_[at.value];
  }
}

PrefixState PrefixState::from_outcome(const Problem& problem, const Outcome& outcome) {
  require_universe(problem, outcome);
  auto prefix_length = [](std::span<const StudentId> list, const StudentSet& holders) {
    std::size_t len = 0;
    while (len < list.size() && holders.contains(list[len])) ++len;
    for (std::size_t r = len; r < list.size(); ++r)
      if (holders.contains(list[r]))
        throw Error(ErrorCode::not_permissible, "eligibility set skips a higher-priority student");
    return len;
  };
  std::vector<std::size_t> out(problem.major_count()), in(problem.major_count());
  for (MajorId m : problem.major_ids()) {
    out[m.value] = prefix_length(problem.out_priority(m), outcome.transfer_out);
    in[m.value] = prefix_length(problem.in_priority(m), outcome.transfer_in);
  }
  return PrefixState(problem, std::move(out), std::move(in));
}

StudentId PrefixState::grant_out(MajorId m) {
  const StudentId s = problem_->out_priority(m)[out_len_[m.value]];
  if (has_in(s)) {
    --head_[m.value];
    ++head_[problem_->applied(s).value];
  }
  ++out_len_[m.value];
  return s;
}

StudentId PrefixState::revoke_out(MajorId m) {
  const StudentId s = problem_->out_priority(m)[--out_len_[m.value]];
  if (has_in(s)) {
    ++head_[m.value];
    --head_[problem_->applied(s).value];
  }
  return s;
}

StudentId PrefixState::grant_in(MajorId m) {
  const StudentId s = problem_->in_priority(m)[in_len_[m.value]];
  if (has_out(s)) {
    ++head_[m.value];
    --head_[problem_->initial(s).value];
  }
  ++in_len_[m.value];
  return s;
}

StudentId PrefixState::revoke_in(MajorId m) {
  const StudentId s = problem_->in_priority(m)[--in_len_[m.value]];
  if (has_out(s)) {
    --head_[m.value];
    ++head_[problem_->initial(s).value];
  }
  return s;
}

void PrefixState::set_out_len(MajorId m, std::size_t len, std::vector<EligibilityEvent>* events) {
  while (out_len_[m.value] < len) {
    const StudentId s = grant_out(m);
    if (events) events->push_back({s, m, Side::transfer_out, Action::grant});
  }
  while (out_len_[m.value] > len) {
    const StudentId s = revoke_out(m);
    if (events) events->push_back({s, m, Side::transfer_out, Action::revoke});
  }
}

void PrefixState::set_in_len(MajorId m, std::size_t len, std::vector<EligibilityEvent>* events) {
  while (in_len_[m.value] < len) {
    const StudentId s = grant_in(m);
    if (events) events->push_back({s, m, Side::transfer_in, Action::grant});
  }
  while (in_len_[m.value] > len) {
    const StudentId s = revoke_in(m);
    if (events) events->push_back({s, m, Side::transfer_in, Action::revoke});
  }
}

Outcome PrefixState::to_outcome() const {
  Outcome o = Outcome::empty(problem_->student_count());
  for (MajorId m : problem_->major_ids()) {
    const auto out = problem_->out_priority(m);
    for (std::size_t r = 0; r < out_len_[m.value]; ++r) o.transfer_out.insert(out[r]);
    const auto in = problem_->in_priority(m);
    for (std::size_t r = 0; r < in_len_[m.value]; ++r) o.transfer_in.insert(in[r]);
  }
  return o;
}

}  // namespace majortrans::detail
