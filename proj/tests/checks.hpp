#pragma once
// Per-instance property checks. Each returns human-readable violations; an
// empty list means the instance passed.

#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "majortrans/cycles.hpp"
#include "majortrans/em.hpp"
#include "majortrans/io.hpp"
#include "majortrans/model.hpp"
#include "majortrans/oracle.hpp"

namespace checks {

using namespace majortrans;
using Violations = std::vector<std::string>;

inline std::string describe(const Problem& p, const Outcome& o) { return io::inline_outcome(p, o); }

inline std::string dump(const Problem& p) { return io::instance_to_json({p, std::nullopt}).dump(); }

inline bool contains(const std::vector<Outcome>& set, const Outcome& o) {
  return std::binary_search(set.begin(), set.end(), o);
}

inline std::set<brute::Pair> brute_em_set(const Problem& p) {
  const auto v = brute::permissible_em_outcomes(p);
  return {v.begin(), v.end()};
}

// EM and alt-EM outputs are permissible and EM according to both oracles.
inline Violations em_outputs_are_permissible_em(const Problem& p) {
  Violations v;
  const auto oracle_em = enumerate_permissible_em(p);
  const auto brute_em = brute_em_set(p);
  for (const auto& [name, run] : {std::pair{"em", run_em(p)}, std::pair{"alt-em", run_alt_em(p)}}) {
    if (!contains(oracle_em, run.outcome))
      v.push_back(std::string(name) + " output " + describe(p, run.outcome) + " not in oracle permissible-EM set");
    if (!brute_em.count(brute::to_pair(run.outcome)))
      v.push_back(std::string(name) + " output " + describe(p, run.outcome) + " not permissible-EM by raw subsets");
  }
  return v;
}

// Both efficient mechanisms land on the frontier from every permissible-EM seed.
inline Violations eaem_outputs_on_frontier(const Problem& p) {
  Violations v;
  const auto front = brute::frontier(p);
  for (const auto& seed : enumerate_permissible_em(p)) {
    for (const auto& [name, run] : {std::pair{"eaem-tie", eaem_tie(p, seed)}, std::pair{"eaem-toe", eaem_toe(p, seed)}}) {
      const bool permissible = brute::permissible(p, brute::to_mask(run.outcome.transfer_out),
                                                  brute::to_mask(run.outcome.transfer_in));
      if (!permissible) v.push_back(std::string(name) + " from " + describe(p, seed) + " is not permissible");
      if (!front.count(brute::to_mask(run.outcome.transferable())))
        v.push_back(std::string(name) + " from " + describe(p, seed) + " gives " + describe(p, run.outcome) +
                    ", not on the frontier");
    }
  }
  return v;
}

// Every major at a permissible-EM outcome has a saturated side.
inline Violations em_outcomes_saturate_a_side(const Problem& p) {
  Violations v;
  for (const auto& o : enumerate_permissible_em(p))
    for (MajorId m : p.major_ids()) {
      const bool out_full = out_holders(p, o, m).size() == p.initial_members(m).size();
      const bool in_full = in_holders(p, o, m).size() == p.applicants(m).size();
      if (!out_full && !in_full)
        v.push_back("major " + p.major(m).name + " unsaturated at " + describe(p, o));
    }
  return v;
}

struct Groups {
  std::vector<bool> over, under, balanced;  // by major
};

inline Groups groups_at(const Problem& p, const Outcome& em) {
  const auto c = classify_majors(p, em);
  Groups g{std::vector<bool>(p.major_count()), std::vector<bool>(p.major_count()), std::vector<bool>(p.major_count())};
  for (MajorId m : c.overdemanded) g.over[m.value] = true;
  for (MajorId m : c.underdemanded) g.under[m.value] = true;
  for (MajorId m : c.balanced) g.balanced[m.value] = true;
  return g;
}

// Improvements over a permissible-EM outcome keep students within their
// demand class, leave balanced-major students alone, and keep headcounts.
inline Violations improvements_respect_classes(const Problem& p) {
  Violations v;
  const auto all = enumerate_permissible(p);
  for (const auto& base : enumerate_permissible_em(p)) {
    const auto g = groups_at(p, base);
    const auto mu = corresponding_assignment(p, base);
    const auto heads = headcounts(p, base);
    for (const auto& better : all) {
      if (!pareto_dominates(better, base)) continue;
      const auto mu2 = corresponding_assignment(p, better);
      const std::string where = describe(p, better) + " over " + describe(p, base);
      for (StudentId i : p.student_ids()) {
        const auto a = mu[i.value].value, b = mu2[i.value].value;
        if (g.over[a] != g.over[b]) v.push_back("overdemanded class changed for " + p.student(i).name + " at " + where);
        if (g.under[a] != g.under[b])
          v.push_back("underdemanded class changed for " + p.student(i).name + " at " + where);
        if (g.balanced[a] && a != b) v.push_back("balanced-major student " + p.student(i).name + " moved at " + where);
      }
      if (headcounts(p, better) != heads) v.push_back("headcounts differ at " + where);
    }
  }
  return v;
}

// After TiE (resp. ToE) from a permissible-EM outcome, students who sat in
// overdemanded (resp. underdemanded) majors cannot be moved by any improvement.
inline Violations exchange_outputs_fix_their_side(const Problem& p) {
  Violations v;
  const auto all = enumerate_permissible(p);
  for (const auto& base : enumerate_permissible_em(p)) {
    const auto g = groups_at(p, base);
    const auto mu0 = corresponding_assignment(p, base);
    for (int side = 0; side < 2; ++side) {
      const Outcome out = side == 0 ? tie_process(p, base).outcome : toe_process(p, base).outcome;
      const auto mu = corresponding_assignment(p, out);
      for (const auto& better : all) {
        if (!pareto_dominates(better, out)) continue;
        const auto mu2 = corresponding_assignment(p, better);
        for (StudentId i : p.student_ids()) {
          const auto home = mu0[i.value].value;
          const bool guarded = side == 0 ? g.over[home] : g.under[home];
          if (guarded && mu2[i.value] != mu[i.value])
            v.push_back(std::string(side == 0 ? "tie" : "toe") + " output " + describe(p, out) + " improvable for " +
                        p.student(i).name + " via " + describe(p, better));
        }
      }
    }
  }
  return v;
}

// Ceiling-only: TiE alone equals both efficient mechanisms from every EM seed.
// Floor-only: the same with ToE.
inline Violations single_process_collapse(const Problem& p, bool ceiling_only) {
  Violations v;
  for (const auto& seed : enumerate_permissible_em(p)) {
    const Outcome single = ceiling_only ? tie_process(p, seed).outcome : toe_process(p, seed).outcome;
    const Outcome e1 = eaem_tie(p, seed).outcome;
    const Outcome e2 = eaem_toe(p, seed).outcome;
    if (single != e1 || single != e2)
      v.push_back(std::string(ceiling_only ? "tie " : "toe ") + describe(p, single) + " vs eaem-tie " +
                  describe(p, e1) + " vs eaem-toe " + describe(p, e2) + " from " + describe(p, seed));
  }
  return v;
}

// Balanced condition: from (I, {}) TiE equals both mechanisms; from ({}, I) ToE does.
inline Violations balanced_collapse(const Problem& p) {
  Violations v;
  const auto n = p.student_count();
  Outcome all_out = Outcome::empty(n), all_in = Outcome::empty(n);
  for (StudentId i : p.student_ids()) {
    all_out.transfer_out.insert(i);
    all_in.transfer_in.insert(i);
  }
  for (const auto& [seed, use_tie] : {std::pair{all_out, true}, std::pair{all_in, false}}) {
    const Outcome single = use_tie ? tie_process(p, seed).outcome : toe_process(p, seed).outcome;
    const Outcome e1 = eaem_tie(p, seed).outcome;
    const Outcome e2 = eaem_toe(p, seed).outcome;
    if (single != e1 || single != e2)
      v.push_back(std::string(use_tie ? "tie " : "toe ") + describe(p, single) + " vs eaem-tie " + describe(p, e1) +
                  " vs eaem-toe " + describe(p, e2) + " from " + describe(p, seed));
  }
  return v;
}

}  // namespace checks
