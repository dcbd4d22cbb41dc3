#include "majortrans/problem.hpp"

#include <algorithm>

namespace majortrans {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_problem: return "invalid_problem";
    case ErrorCode::unknown_student: return "unknown_student";
    case ErrorCode::unknown_major: return "unknown_major";
    case ErrorCode::universe_mismatch: return "universe_mismatch";
    case ErrorCode::not_permissible: return "not_permissible";
    case ErrorCode::not_permissible_em: return "not_permissible_em";
    case ErrorCode::cap_mismatch: return "cap_mismatch";
    case ErrorCode::guard_exceeded: return "guard_exceeded";
    case ErrorCode::invalid_config: return "invalid_config";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

// ---- StudentSet ------------------------------------------------------------

StudentSet StudentSet::of(std::size_t universe, const std::vector<StudentId>& members) {
  StudentSet s(universe);
  for (StudentId i : members) s.insert(i);
  return s;
}

void StudentSet::insert(StudentId i) {
  if (i.value >= bits_.size())
    throw Error(ErrorCode::unknown_student, "student index " + std::to_string(i.value) + " out of range");
  if (!bits_[i.value]) {
    bits_[i.value] = true;
    ++count_;
  }
}

void StudentSet::erase(StudentId i) {
  if (i.value < bits_.size() && bits_[i.value]) {
    bits_[i.value] = false;
    --count_;
  }
}

std::vector<StudentId> StudentSet::members() const {
  std::vector<StudentId> out;
  out.reserve(count_);
  for (std::uint32_t k = 0; k < bits_.size(); ++k)
    if (bits_[k]) out.push_back(StudentId{k});
  return out;
}

bool StudentSet::is_subset_of(const StudentSet& other) const {
  if (count_ > other.count_) return false;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] && !(k < other.bits_.size() && other.bits_[k])) return false;
  return true;
}

namespace {

template <typename Op>
StudentSet combine(const StudentSet& a, const StudentSet& b, Op op) {
  const std::size_t n = std::max(a.universe(), b.universe());
  StudentSet out(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const StudentId i{k};
    if (op(a.contains(i), b.contains(i))) out.insert(i);
  }
  return out;
}

}  // namespace

StudentSet operator&(const StudentSet& a, const StudentSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}
StudentSet operator|(const StudentSet& a, const StudentSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}
StudentSet operator-(const StudentSet& a, const StudentSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

std::strong_ordering operator<=>(const StudentSet& a, const StudentSet& b) {
  const auto am = a.members();
  const auto bm = b.members();
  return std::lexicographical_compare_three_way(am.begin(), am.end(), bm.begin(), bm.end());
}

Outcome::Outcome(StudentSet out, StudentSet in) : transfer_out(std::move(out)), transfer_in(std::move(in)) {
  if (transfer_out.universe() != transfer_in.universe())
    throw Error(ErrorCode::universe_mismatch, "outcome sets are over different student universes");
}

// ---- Problem ---------------------------------------------------------------

Problem::Problem(std::vector<StudentSpec> students, std::vector<MajorSpec> majors)
    : students_(std::move(students)), majors_(std::move(majors)) {
  index();
}

void Problem::index() {
  const std::size_t n = students_.size();
  initial_members_.assign(majors_.size(), {});
  applicants_.assign(majors_.size(), {});
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto& s = students_[k];
    if (s.initial.value < majors_.size()) initial_members_[s.initial.value].push_back(StudentId{k});
    if (s.applied.value < majors_.size()) applicants_[s.applied.value].push_back(StudentId{k});
  }
  out_rank_.assign(n, npos);
  in_rank_.assign(n, npos);
  for (std::uint32_t m = 0; m < majors_.size(); ++m) {
    const auto& major = majors_[m];
    for (std::size_t r = 0; r < major.out_priority.size(); ++r) {
      const StudentId i = major.out_priority[r];
      if (i.value < n && students_[i.value].initial.value == m && out_rank_[i.value] == npos)
        out_rank_[i.value] = r;
    }
    for (std::size_t r = 0; r < major.in_priority.size(); ++r) {
      const StudentId i = major.in_priority[r];
      if (i.value < n && students_[i.value].applied.value == m && in_rank_[i.value] == npos)
        in_rank_[i.value] = r;
    }
  }
  student_by_name_.clear();
  major_by_name_.clear();
  for (std::uint32_t k = 0; k < n; ++k) student_by_name_.emplace(students_[k].name, StudentId{k});
  for (std::uint32_t m = 0; m < majors_.size(); ++m) major_by_name_.emplace(majors_[m].name, MajorId{m});
}

const StudentSpec& Problem::student(StudentId i) const {
  if (i.value >= students_.size())
    throw Error(ErrorCode::unknown_student, "student index " + std::to_string(i.value) + " out of range");
  return students_[i.value];
}

const MajorSpec& Problem::major(MajorId m) const {
  if (m.value >= majors_.size())
    throw Error(ErrorCode::unknown_major, "major index " + std::to_string(m.value) + " out of range");
  return majors_[m.value];
}

std::optional<StudentId> Problem::find_student(std::string_view name) const {
  if (auto it = student_by_name_.find(std::string(name)); it != student_by_name_.end()) return it->second;
  return std::nullopt;
}

std::optional<MajorId> Problem::find_major(std::string_view name) const {
  if (auto it = major_by_name_.find(std::string(name)); it != major_by_name_.end()) return it->second;
  return std::nullopt;
}

StudentId Problem::student_id(std::string_view name) const {
  if (auto id = find_student(name)) return *id;
  throw Error(ErrorCode::unknown_student, "unknown student '" + std::string(name) + "'");
}

MajorId Problem::major_id(std::string_view name) const {
  if (auto id = find_major(name)) return *id;
  throw Error(ErrorCode::unknown_major, "unknown major '" + std::string(name) + "'");
}

std::vector<MajorId> Problem::major_ids() const {
  std::vector<MajorId> out(majors_.size());
  for (std::uint32_t m = 0; m < out.size(); ++m) out[m] = MajorId{m};
  return out;
}

std::vector<StudentId> Problem::student_ids() const {
  std::vector<StudentId> out(students_.size());
  for (std::uint32_t k = 0; k < out.size(); ++k) out[k] = StudentId{k};
  return out;
}

Problem Problem::with_bounds(std::span<const Constraint> bounds) const {
  if (bounds.size() != majors_.size())
    throw Error(ErrorCode::unknown_major, "bounds must cover every major exactly once");
  Problem copy = *this;
  for (std::size_t m = 0; m < bounds.size(); ++m) copy.majors_[m].bounds = bounds[m];
  return copy;
}

bool operator==(const Problem& a, const Problem& b) {
  if (a.students_.size() != b.students_.size() || a.majors_.size() != b.majors_.size()) return false;
  for (std::size_t k = 0; k < a.students_.size(); ++k) {
    const auto& x = a.students_[k];
    const auto& y = b.students_[k];
    if (x.name != y.name || x.initial != y.initial || x.applied != y.applied) return false;
  }
  for (std::size_t m = 0; m < a.majors_.size(); ++m) {
    const auto& x = a.majors_[m];
    const auto& y = b.majors_[m];
    if (x.name != y.name || x.bounds != y.bounds || x.out_priority != y.out_priority ||
        x.in_priority != y.in_priority)
      return false;
  }
  return true;
}

// ---- name-based construction -----------------------------------------------

Problem build_problem(const std::vector<NamedMajor>& majors, const std::vector<NamedStudent>& students) {
  std::unordered_map<std::string, MajorId> major_ids;
  for (std::uint32_t m = 0; m < majors.size(); ++m) major_ids.emplace(majors[m].name, MajorId{m});
  std::unordered_map<std::string, StudentId> student_ids;
  for (std::uint32_t k = 0; k < students.size(); ++k) student_ids.emplace(students[k].name, StudentId{k});

  auto major_of = [&](const std::string& name) {
    auto it = major_ids.find(name);
    if (it == major_ids.end()) throw Error(ErrorCode::unknown_major, "unknown major '" + name + "'");
    return it->second;
  };
  auto student_of = [&](const std::string& name) {
    auto it = student_ids.find(name);
    if (it == student_ids.end()) throw Error(ErrorCode::unknown_student, "unknown student '" + name + "'");
    return it->second;
  };

  std::vector<StudentSpec> specs;
  specs.reserve(students.size());
  for (const auto& s : students) specs.push_back({s.name, major_of(s.initial), major_of(s.applied)});

  std::vector<MajorSpec> mspecs;
  mspecs.reserve(majors.size());
  for (const auto& m : majors) {
    MajorSpec spec{m.name, {m.floor, m.ceiling}, {}, {}};
    for (const auto& n : m.out_priority) spec.out_priority.push_back(student_of(n));
    for (const auto& n : m.in_priority) spec.in_priority.push_back(student_of(n));
    mspecs.push_back(std::move(spec));
  }
  return Problem(std::move(specs), std::move(mspecs));
}

Outcome outcome_from_names(const Problem& problem, const std::vector<std::string>& transfer_out,
                           const std::vector<std::string>& transfer_in) {
  Outcome o = Outcome::empty(problem.student_count());
  for (const auto& n : transfer_out) o.transfer_out.insert(problem.student_id(n));
  for (const auto& n : transfer_in) o.transfer_in.insert(problem.student_id(n));
  return o;
}

std::vector<std::string> names_of(const Problem& problem, const StudentSet& set) {
  std::vector<std::string> out;
  for (StudentId i : set.members()) out.push_back(problem.student(i).name);
  return out;
}

void require_universe(const Problem& problem, const Outcome& outcome) {
  if (outcome.transfer_out.universe() != problem.student_count() ||
      outcome.transfer_in.universe() != problem.student_count())
    throw Error(ErrorCode::universe_mismatch, "outcome refers to students outside the problem");
}

}  // namespace majortrans
