#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "majortrans/problem.hpp"

namespace majortrans {

struct OracleOptions {
  std::uint64_t max_search_space = 10'000'000;
};

/// Number of prefix-length vectors, prod_m (|omega_m|+1)(|alpha_m|+1),
/// saturating at UINT64_MAX.
std::uint64_t search_space_size(const Problem& problem);

/// Every permissible outcome, ascending. Enumerates prefix lengths rather than
/// subsets. Throws guard_exceeded when the space is larger than the guard.
std::vector<Outcome> enumerate_permissible(const Problem& problem, const OracleOptions& options = {});

/// The permissible outcomes that are also EM, ascending.
std::vector<Outcome> enumerate_permissible_em(const Problem& problem, const OracleOptions& options = {});

/// One representative per maximal transferable set among permissible outcomes.
/// The representative is the smallest outcome with that transferable set.
/// Ascending by representative.
std::vector<Outcome> pareto_frontier(const Problem& problem, const OracleOptions& options = {});

struct CertifyReport {
  bool permissible = false;
  bool em = false;
  bool efficient = false;                     // permissible and undominated
  std::optional<Outcome> dominating_witness;  // set whenever some permissible outcome dominates
};

CertifyReport certify(const Problem& problem, const Outcome& outcome, const OracleOptions& options = {});

}  // namespace majortrans
