#include "majortrans/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "detail/prefix_state.hpp"
#include "majortrans/model.hpp"

namespace majortrans {

std::uint64_t search_space_size(const Problem& problem) {
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (MajorId m : problem.major_ids()) {
    for (std::uint64_t f : {problem.out_priority(m).size() + 1, problem.in_priority(m).size() + 1}) {
      if (total > top / f) return top;
      total *= f;
    }
  }
  return total;
}

std::vector<Outcome> enumerate_permissible(const Problem& problem, const OracleOptions& options) {
  const std::uint64_t space = search_space_size(problem);
  if (space > options.max_search_space)
    throw Error(ErrorCode::guard_exceeded, "search space " + std::to_string(space) + " exceeds guard " +
                                               std::to_string(options.max_search_space));

  const std::size_t n = problem.major_count();
  detail::PrefixState state(problem, std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0));
  auto within = [&] {
    for (MajorId m : problem.major_ids()) {
      const auto b = problem.bounds(m);
      const int h = state.headcount(m);
      if (h < b.floor || h > b.ceiling) return false;
    }
    return true;
  };

  // odometer over 2n digits: out length of m at 2m, in length at 2m+1
  std::vector<Outcome> found;
  const auto ids = problem.major_ids();
  for (;;) {
    if (within()) found.push_back(state.to_outcome());
    std::size_t d = 0;
    for (; d < 2 * n; ++d) {
      const MajorId m = ids[d / 2];
      const bool out = d % 2 == 0;
      const std::size_t len = out ? state.out_len(m) : state.in_len(m);
      const std::size_t size = out ? state.out_size(m) : state.in_size(m);
      if (len < size) {
        out ? state.set_out_len(m, len + 1, nullptr) : state.set_in_len(m, len + 1, nullptr);
        break;
      }
      out ? state.set_out_len(m, 0, nullptr) : state.set_in_len(m, 0, nullptr);
    }
    if (d == 2 * n) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Outcome> enumerate_permissible_em(const Problem& problem, const OracleOptions& options) {
  auto all = enumerate_permissible(problem, options);
  std::erase_if(all, [&](const Outcome& o) { return !is_em(problem, o); });
  return all;
}

namespace {

std::vector<Outcome> frontier_of(const std::vector<Outcome>& permissible) {
  std::unordered_map<StudentSet, Outcome> best;
  for (const auto& o : permissible) {
    const StudentSet t = o.transferable();
    auto it = best.find(t);
    if (it == best.end())
      best.emplace(t, o);
    else if (o < it->second)
      it->second = o;
  }
  std::vector<Outcome> front;
  for (const auto& [t, rep] : best) {
    bool dominated = false;
    for (const auto& [u, other] : best)
      if (t.is_strict_subset_of(u)) {
        dominated = true;
        break;
      }
    if (!dominated) front.push_back(rep);
  }
  std::sort(front.begin(), front.end());
  return front;
}

}  // namespace

std::vector<Outcome> pareto_frontier(const Problem& problem, const OracleOptions& options) {
  return frontier_of(enumerate_permissible(problem, options));
}

CertifyReport certify(const Problem& problem, const Outcome& outcome, const OracleOptions& options) {
  require_universe(problem, outcome);
  CertifyReport report;
  const auto front = pareto_frontier(problem, options);
  report.permissible = is_permissible(problem, outcome);
  report.em = is_em(problem, outcome);
  for (const auto& rep : front)
    if (pareto_dominates(rep, outcome)) {
      report.dominating_witness = rep;
      break;
    }
  report.efficient = report.permissible && !report.dominating_witness;
  return report;
}

}  // namespace majortrans
