// Command-line front end: check, run, oracle, simulate.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "majortrans/cmt_ec.hpp"
#include "majortrans/cycles.hpp"
#include "majortrans/em.hpp"
#include "majortrans/io.hpp"
#include "majortrans/model.hpp"
#include "majortrans/oracle.hpp"
#include "majortrans/sim.hpp"

namespace fs = std::filesystem;
using namespace majortrans;
using nlohmann::json;

namespace {

const std::vector<std::string> mechanisms = {"cmt-ec", "em", "alt-em", "tie", "toe", "eaem-tie", "eaem-toe"};

// An outcome argument is a file path when such a file exists, else inline text.
Outcome load_outcome(const Problem& problem, const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return io::parse_outcome(problem, io::read_file(arg));
  return io::parse_outcome(problem, arg);
}

MechanismRun run_mechanism(const io::Instance& inst, const std::string& name, const std::optional<std::string>& seed,
                           const RunOptions& options);

Outcome resolve_seed(const io::Instance& inst, const std::string& seed) {
  for (const auto& m : mechanisms)
    if (seed == m) return run_mechanism(inst, seed, std::nullopt, RunOptions{false}).outcome;
  return load_outcome(inst.problem, seed);
}

MechanismRun run_mechanism(const io::Instance& inst, const std::string& name, const std::optional<std::string>& seed,
                           const RunOptions& options) {
  const Problem& p = inst.problem;
  if (name == "cmt-ec") {
    if (!inst.caps) throw Error(ErrorCode::invalid_config, "cmt-ec needs a \"caps\" object in the instance");
    return run_cmt_ec(p, *inst.caps, options);
  }
  if (name == "em") return run_em(p, options);
  if (name == "alt-em") return run_alt_em(p, options);
  const Outcome start = resolve_seed(inst, seed.value_or("em"));
  if (name == "tie") return tie_process(p, start, options);
  if (name == "toe") return toe_process(p, start, options);
  if (name == "eaem-tie") return eaem_tie(p, start, options);
  if (name == "eaem-toe") return eaem_toe(p, start, options);
  throw Error(ErrorCode::invalid_config, "unknown mechanism '" + name + "'");
}

json outcome_list(const Problem& p, const std::vector<Outcome>& outcomes) {
  json arr = json::array();
  for (const auto& o : outcomes) {
    json j = io::outcome_to_json(p, o);
    j.erase("schema_version");
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Major transition mechanisms: eligibility maximization, exchange cycles, oracle and simulation"};
  app.require_subcommand(1);

  std::string instance_path, outcome_arg, mechanism, scenario_path;

  auto* check = app.add_subcommand("check", "Report permissibility and eligibility maximization of an outcome");
  check->add_option("instance", instance_path, "Instance JSON file")->required();
  check->add_option("outcome", outcome_arg, "Outcome file, or inline '(E={..},A={..})'")->required();

  bool want_trace = false, want_table = false;
  std::optional<std::string> seed_outcome;
  auto* run = app.add_subcommand("run", "Run a mechanism and print its outcome");
  run->add_option("mechanism", mechanism, "Mechanism")->required()->check(CLI::IsMember(mechanisms));
  run->add_option("instance", instance_path, "Instance JSON file")->required();
  run->add_option("--seed-outcome", seed_outcome,
                  "Start outcome for tie/toe/eaem-*: a file, inline outcome or mechanism name (default em)");
  run->add_flag("--trace", want_trace, "Include the step trace in the JSON output");
  run->add_flag("--table", want_table, "Print the step trace as a text table instead of JSON");

  bool want_frontier = false;
  std::optional<std::string> certify_arg;
  std::uint64_t guard = OracleOptions{}.max_search_space;
  auto* oracle = app.add_subcommand("oracle", "Brute-force permissible, EM and efficient outcomes");
  oracle->add_option("instance", instance_path, "Instance JSON file")->required();
  auto* frontier_flag = oracle->add_flag("--frontier", want_frontier, "Print the Pareto frontier only");
  oracle->add_option("--certify", certify_arg, "Certify an outcome (file or inline)")->excludes(frontier_flag);
  oracle->add_option("--guard", guard, "Largest prefix-vector space to enumerate");

  std::optional<std::string> out_path, dump_dir;
  std::optional<int> trials, threads;
  std::optional<std::uint64_t> master_seed;
  auto* simulate = app.add_subcommand("simulate", "Run the Monte Carlo scenarios of a scenario file");
  simulate->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  simulate->add_option("--out", out_path, "Write the CSV here instead of stdout");
  simulate->add_option("--trials", trials, "Override the trial count");
  simulate->add_option("--seed", master_seed, "Override the master seed");
  simulate->add_option("--threads", threads, "Worker threads");
  simulate->add_option("--dump-dir", dump_dir, "Write instances of trials that break the STR identities here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      const auto inst = io::read_instance(instance_path);
      const Outcome o = load_outcome(inst.problem, outcome_arg);
      const bool permissible = is_permissible(inst.problem, o);
      const bool em = is_em(inst.problem, o);
      json report = io::report_to_json(inst.problem, o, permissible, em);
      json majors = json::object();
      const auto counts = headcounts(inst.problem, o);
      for (MajorId m : inst.problem.major_ids()) {
        majors[inst.problem.major(m).name] = {{"headcount", counts[m.value]},
                                              {"distributional", respects_distributional(inst.problem, o, m)},
                                              {"dual_priority", respects_dual_priority(inst.problem, o, m)},
                                              {"expandable", can_permissibly_expand(inst.problem, o, m).has_value()}};
      }
      report["majors"] = std::move(majors);
      if (permissible && em) {
        const auto c = classify_majors(inst.problem, o);
        auto names = [&](const std::vector<MajorId>& ms) {
          json arr = json::array();
          for (MajorId m : ms) arr.push_back(inst.problem.major(m).name);
          return arr;
        };
        report["classification"] = {{"overdemanded", names(c.overdemanded)},
                                    {"underdemanded", names(c.underdemanded)},
                                    {"balanced", names(c.balanced)}};
      }
      std::cout << report.dump(2) << "\n";
    } else if (*run) {
      const auto inst = io::read_instance(instance_path);
      const auto result = run_mechanism(inst, mechanism, seed_outcome, RunOptions{want_trace || want_table});
      if (want_table) {
        std::cout << io::render_trace_table(inst.problem, result.trace);
        std::cout << "result " << io::inline_outcome(inst.problem, result.outcome) << "\n";
      } else {
        json out = io::outcome_to_json(inst.problem, result.outcome);
        if (want_trace) out["trace"] = io::trace_to_json(inst.problem, result.trace);
        std::cout << out.dump(2) << "\n";
      }
    } else if (*oracle) {
      const auto inst = io::read_instance(instance_path);
      const Problem& p = inst.problem;
      const OracleOptions options{guard};
      json out;
      out["schema_version"] = io::schema_version;
      out["search_space"] = search_space_size(p);
      if (certify_arg) {
        const Outcome o = load_outcome(p, *certify_arg);
        const auto rep = certify(p, o, options);
        out["permissible"] = rep.permissible;
        out["em"] = rep.em;
        out["efficient"] = rep.efficient;
        if (rep.dominating_witness) {
          json w = io::outcome_to_json(p, *rep.dominating_witness);
          w.erase("schema_version");
          out["witness"] = std::move(w);
        } else {
          out["witness"] = nullptr;
        }
      } else {
        out["frontier"] = outcome_list(p, pareto_frontier(p, options));
        if (!want_frontier) {
          out["permissible_count"] = enumerate_permissible(p, options).size();
          out["permissible_em"] = outcome_list(p, enumerate_permissible_em(p, options));
        }
      }
      std::cout << out.dump(2) << "\n";
    } else if (*simulate) {
      auto grid = io::parse_scenarios(io::read_file(scenario_path));
      for (auto& c : grid) {
        if (trials) c.trials = *trials;
        if (master_seed) c.master_seed = *master_seed;
        if (threads) c.threads = *threads;
      }
      std::vector<sim::SimResult> results;
      for (const auto& c : grid) {
        results.push_back(sim::run_scenario(c));
        const auto& r = results.back();
        std::cerr << sim::to_string(c.regime) << " beta1=" << c.beta1 << " beta2=" << c.beta2
                  << ": efficient-STR mismatches " << r.efficient_mismatch.size() << ", EM above efficient "
                  << r.em_exceeds_efficient.size() << "\n";
        if (dump_dir) {
          std::vector<std::uint64_t> bad = r.efficient_mismatch;
          bad.insert(bad.end(), r.em_exceeds_efficient.begin(), r.em_exceeds_efficient.end());
          if (!bad.empty()) fs::create_directories(*dump_dir);
          for (std::uint64_t t : bad) {
            const auto gi = sim::generate_instance(c, sim::trial_seed(c.master_seed, t));
            char name[128];
            std::snprintf(name, sizeof name, "%s_b%.2f_%.2f_trial%llu.json", sim::to_string(c.regime), c.beta1,
                          c.beta2, static_cast<unsigned long long>(t));
            io::write_file((fs::path(*dump_dir) / name).string(), io::render_instance({gi.problem, std::nullopt}));
          }
        }
      }
      const std::string csv = io::results_csv(results);
      if (out_path)
        io::write_file(*out_path, csv);
      else
        std::cout << csv;
    }
  } catch (const Error& e) {
    std::cerr << io::error_to_json(e).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return 0;
}
