#include "majortrans/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace majortrans::io {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::parse_error, path + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("$: ") + e.what());
  }
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) schema_fail(path, "expected a string");
  return v.get<std::string>();
}

int get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_fail(path, "expected an integer");
  return v.get<int>();
}

double get_number(const json& v, const std::string& path) {
  if (!v.is_number()) schema_fail(path, "expected a number");
  return v.get<double>();
}

std::vector<std::string> get_strings(const json& v, const std::string& path) {
  if (!v.is_array()) schema_fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(get_string(v[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

void check_version(const json& doc) {
  auto it = doc.find("schema_version");
  if (it == doc.end()) return;  // absent means current
  if (!it->is_number_integer() || it->get<int>() != schema_version)
    schema_fail("$.schema_version", "unsupported schema version, expected " + std::to_string(schema_version));
}

json sorted_names(const Problem& problem, const StudentSet& set) {
  json arr = json::array();
  for (StudentId i : set.members()) arr.push_back(problem.student(i).name);
  return arr;
}

json major_names(const Problem& problem, const std::vector<MajorId>& majors) {
  json arr = json::array();
  for (MajorId m : majors) arr.push_back(problem.major(m).name);
  return arr;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string brace(const Problem& problem, const StudentSet& set) { return "{" + join(names_of(problem, set)) + "}"; }

std::string brace(const Problem& problem, const std::vector<MajorId>& majors) {
  std::vector<std::string> names;
  for (MajorId m : majors) names.push_back(problem.major(m).name);
  return "{" + join(names) + "}";
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema_fail("$", "expected an object");
  check_version(doc);

  const json& majors = field(doc, "$", "majors");
  if (!majors.is_array()) schema_fail("$.majors", "expected an array");
  const json& students = field(doc, "$", "students");
  if (!students.is_array()) schema_fail("$.students", "expected an array");

  std::vector<NamedMajor> named_majors;
  std::set<std::string> major_names_seen;
  for (std::size_t k = 0; k < majors.size(); ++k) {
    const std::string path = "$.majors[" + std::to_string(k) + "]";
    const json& m = majors[k];
    if (!m.is_object()) schema_fail(path, "expected an object");
    NamedMajor nm;
    nm.name = get_string(field(m, path, "id"), path + ".id");
    if (!major_names_seen.insert(nm.name).second) schema_fail(path + ".id", "duplicate major id '" + nm.name + "'");
    nm.floor = get_int(field(m, path, "floor"), path + ".floor");
    nm.ceiling = get_int(field(m, path, "ceiling"), path + ".ceiling");
    nm.out_priority = get_strings(field(m, path, "out_priority"), path + ".out_priority");
    nm.in_priority = get_strings(field(m, path, "in_priority"), path + ".in_priority");
    named_majors.push_back(std::move(nm));
  }

  std::vector<NamedStudent> named_students;
  std::set<std::string> student_names_seen;
  for (std::size_t k = 0; k < students.size(); ++k) {
    const std::string path = "$.students[" + std::to_string(k) + "]";
    const json& s = students[k];
    if (!s.is_object()) schema_fail(path, "expected an object");
    NamedStudent ns;
    ns.name = get_string(field(s, path, "id"), path + ".id");
    if (!student_names_seen.insert(ns.name).second)
      schema_fail(path + ".id", "duplicate student id '" + ns.name + "'");
    ns.initial = get_string(field(s, path, "initial"), path + ".initial");
    ns.applied = get_string(field(s, path, "applied"), path + ".applied");
    if (!major_names_seen.count(ns.initial)) schema_fail(path + ".initial", "unknown major '" + ns.initial + "'");
    if (!major_names_seen.count(ns.applied)) schema_fail(path + ".applied", "unknown major '" + ns.applied + "'");
    named_students.push_back(std::move(ns));
  }
  for (std::size_t k = 0; k < named_majors.size(); ++k) {
    const std::string path = "$.majors[" + std::to_string(k) + "]";
    for (const char* key : {"out_priority", "in_priority"}) {
      const auto& list = std::string(key) == "out_priority" ? named_majors[k].out_priority : named_majors[k].in_priority;
      for (std::size_t r = 0; r < list.size(); ++r)
        if (!student_names_seen.count(list[r]))
          schema_fail(path + "." + key + "[" + std::to_string(r) + "]", "unknown student '" + list[r] + "'");
    }
  }

  Instance inst{build_problem(named_majors, named_students), std::nullopt};
  require_valid(inst.problem);

  if (auto it = doc.find("caps"); it != doc.end()) {
    if (!it->is_object()) schema_fail("$.caps", "expected an object keyed by major id");
    CapProfile caps;
    caps.caps.resize(inst.problem.major_count());
    std::vector<bool> seen(inst.problem.major_count(), false);
    for (const auto& [key, value] : it->items()) {
      const std::string path = "$.caps." + key;
      const auto m = inst.problem.find_major(key);
      if (!m) schema_fail(path, "unknown major '" + key + "'");
      if (!value.is_object()) schema_fail(path, "expected {\"out\", \"in\"}");
      const int out = get_int(field(value, path, "out"), path + ".out");
      const int in = get_int(field(value, path, "in"), path + ".in");
      if (out < 0) schema_fail(path + ".out", "cap must be non-negative");
      if (in < 0) schema_fail(path + ".in", "cap must be non-negative");
      caps.caps[m->value] = {out, in};
      seen[m->value] = true;
    }
    for (MajorId m : inst.problem.major_ids())
      if (!seen[m.value]) schema_fail("$.caps", "missing caps for major '" + inst.problem.major(m).name + "'");
    inst.caps = std::move(caps);
  }
  return inst;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write '" + path + "'");
  out << contents;
}

Instance read_instance(const std::string& path) { return parse_instance(read_file(path)); }

json instance_to_json(const Instance& instance) {
  const Problem& p = instance.problem;
  json doc;
  doc["schema_version"] = schema_version;
  json majors = json::array();
  for (const auto& m : p.majors()) {
    json jm;
    jm["id"] = m.name;
    jm["floor"] = m.bounds.floor;
    jm["ceiling"] = m.bounds.ceiling;
    jm["out_priority"] = json::array();
    for (StudentId i : m.out_priority) jm["out_priority"].push_back(p.student(i).name);
    jm["in_priority"] = json::array();
    for (StudentId i : m.in_priority) jm["in_priority"].push_back(p.student(i).name);
    majors.push_back(std::move(jm));
  }
  doc["majors"] = std::move(majors);
  json students = json::array();
  for (const auto& s : p.students())
    students.push_back({{"id", s.name}, {"initial", p.major(s.initial).name}, {"applied", p.major(s.applied).name}});
  doc["students"] = std::move(students);
  if (instance.caps) {
    json caps = json::object();
    for (MajorId m : p.major_ids())
      caps[p.major(m).name] = {{"out", instance.caps->caps.at(m.value).out}, {"in", instance.caps->caps.at(m.value).in}};
    doc["caps"] = std::move(caps);
  }
  return doc;
}

std::string render_instance(const Instance& instance) { return instance_to_json(instance).dump(2) + "\n"; }

namespace {

// "(E={i1,i2},A={})", whitespace tolerated
Outcome parse_inline(const Problem& problem, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&] { schema_fail("$", "expected (E={...},A={...}), got '" + std::string(text) + "'"); };
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail();
  s = s.substr(1, s.size() - 2);

  std::map<std::string, std::vector<std::string>> sets;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto eq = s.find('=', pos);
    if (eq == std::string::npos || eq + 1 >= s.size() || s[eq + 1] != '{') fail();
    const std::string key = s.substr(pos, eq - pos);
    const auto close = s.find('}', eq);
    if (close == std::string::npos) fail();
    std::vector<std::string> names;
    const std::string body = s.substr(eq + 2, close - eq - 2);
    std::size_t from = 0;
    while (from < body.size()) {
      auto comma = body.find(',', from);
      if (comma == std::string::npos) comma = body.size();
      if (comma == from) fail();
      names.push_back(body.substr(from, comma - from));
      from = comma + 1;
    }
    if (key != "E" && key != "A") fail();
    if (sets.count(key)) fail();
    sets[key] = std::move(names);
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != ',') fail();
      ++pos;
    }
  }
  if (!sets.count("E") || !sets.count("A")) fail();
  return outcome_from_names(problem, sets["E"], sets["A"]);
}

}  // namespace

Outcome parse_outcome(const Problem& problem, std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '(') return parse_inline(problem, text);
  const json doc = parse_json(text);
  if (!doc.is_object()) schema_fail("$", "expected an object with E and A");
  check_version(doc);
  return outcome_from_names(problem, get_strings(field(doc, "$", "E"), "$.E"), get_strings(field(doc, "$", "A"), "$.A"));
}

json outcome_to_json(const Problem& problem, const Outcome& outcome) {
  require_universe(problem, outcome);
  json doc;
  doc["schema_version"] = schema_version;
  doc["E"] = sorted_names(problem, outcome.transfer_out);
  doc["A"] = sorted_names(problem, outcome.transfer_in);
  json mu = json::object();
  const auto assignment = corresponding_assignment(problem, outcome);
  for (StudentId i : problem.student_ids()) mu[problem.student(i).name] = problem.major(assignment[i.value]).name;
  doc["mu"] = std::move(mu);
  return doc;
}

std::string render_outcome(const Problem& problem, const Outcome& outcome) {
  return outcome_to_json(problem, outcome).dump(2) + "\n";
}

std::string inline_outcome(const Problem& problem, const Outcome& outcome) {
  return "(E=" + brace(problem, outcome.transfer_out) + ",A=" + brace(problem, outcome.transfer_in) + ")";
}

namespace {

const char* side_name(Side s) { return s == Side::transfer_out ? "transfer-out" : "transfer-in"; }
const char* action_name(Action a) { return a == Action::grant ? "grant" : "revoke"; }
const char* kind_name(CycleKind k) { return k == CycleKind::transfer_in ? "transfer-in" : "transfer-out"; }

json state_json(const Problem& problem, const Outcome& o) {
  return {{"E", sorted_names(problem, o.transfer_out)}, {"A", sorted_names(problem, o.transfer_in)}};
}

Outcome state_from(const Problem& problem, const json& v, const std::string& path) {
  if (!v.is_object()) schema_fail(path, "expected {E, A}");
  return outcome_from_names(problem, get_strings(field(v, path, "E"), path + ".E"),
                            get_strings(field(v, path, "A"), path + ".A"));
}

}  // namespace

json trace_to_json(const Problem& problem, const MechanismTrace& trace) {
  json doc;
  doc["schema_version"] = schema_version;
  doc["mechanism"] = trace.mechanism;
  doc["initial"] = state_json(problem, trace.initial);
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json js;
    js["k"] = s.index;
    js["process"] = s.process;
    js["phase"] = to_string(s.phase);
    js["state"] = state_json(problem, s.state);
    js["result"] = state_json(problem, s.result);
    if (s.process == "em" || s.process == "alt-em") {
      js["expandable"] = major_names(problem, s.expandable);
      js["violated"] = major_names(problem, s.violated);
    }
    if (s.process == "tie" || s.process == "toe") {
      js["live"] = major_names(problem, s.live);
      json ptrs = json::object();
      for (const auto& e : s.pointers)
        ptrs[problem.major(e.major).name] = e.student ? json(problem.student(*e.student).name) : json(nullptr);
      js["pointers"] = std::move(ptrs);
      js["removed"] = major_names(problem, s.removed);
      json cycles = json::array();
      for (const auto& c : s.cycles) {
        json links = json::array();
        for (const auto& l : c.links) links.push_back({problem.major(l.major).name, problem.student(l.student).name});
        cycles.push_back({{"kind", kind_name(c.kind)}, {"links", std::move(links)}});
      }
      js["cycles"] = std::move(cycles);
    }
    json events = json::array();
    for (const auto& e : s.events)
      events.push_back({{"student", problem.student(e.student).name},
                        {"major", problem.major(e.major).name},
                        {"side", side_name(e.side)},
                        {"action", action_name(e.action)}});
    js["events"] = std::move(events);
    steps.push_back(std::move(js));
  }
  doc["steps"] = std::move(steps);
  return doc;
}

MechanismTrace trace_from_json(const Problem& problem, const json& doc) {
  if (!doc.is_object()) schema_fail("$", "expected a trace object");
  check_version(doc);
  MechanismTrace t;
  t.mechanism = get_string(field(doc, "$", "mechanism"), "$.mechanism");
  t.initial = state_from(problem, field(doc, "$", "initial"), "$.initial");
  const json& steps = field(doc, "$", "steps");
  if (!steps.is_array()) schema_fail("$.steps", "expected an array");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const std::string path = "$.steps[" + std::to_string(k) + "]";
    const json& js = steps[k];
    TraceStep s;
    s.index = static_cast<std::size_t>(get_int(field(js, path, "k"), path + ".k"));
    s.process = get_string(field(js, path, "process"), path + ".process");
    const std::string phase = get_string(field(js, path, "phase"), path + ".phase");
    bool known = false;
    for (Phase p : {Phase::transfer_in, Phase::transfer_out, Phase::pointing, Phase::cycle_execution, Phase::stop})
      if (phase == to_string(p)) s.phase = p, known = true;
    if (!known) schema_fail(path + ".phase", "unknown phase '" + phase + "'");
    s.state = state_from(problem, field(js, path, "state"), path + ".state");
    s.result = state_from(problem, field(js, path, "result"), path + ".result");
    auto majors_at = [&](const char* key, std::vector<MajorId>& out) {
      if (!js.contains(key)) return;
      for (const auto& name : get_strings(js[key], path + "." + key)) out.push_back(problem.major_id(name));
    };
    majors_at("expandable", s.expandable);
    majors_at("violated", s.violated);
    majors_at("live", s.live);
    majors_at("removed", s.removed);
    if (js.contains("pointers")) {
      const json& ptrs = js["pointers"];
      if (!ptrs.is_object()) schema_fail(path + ".pointers", "expected an object");
      for (const auto& [major, target] : ptrs.items()) {
        PointerEdge e{problem.major_id(major), std::nullopt};
        if (!target.is_null()) e.student = problem.student_id(get_string(target, path + ".pointers." + major));
        s.pointers.push_back(e);
      }
      std::sort(s.pointers.begin(), s.pointers.end(), [](const auto& a, const auto& b) { return a.major < b.major; });
    }
    if (js.contains("cycles")) {
      const json& cycles = js["cycles"];
      if (!cycles.is_array()) schema_fail(path + ".cycles", "expected an array");
      for (std::size_t c = 0; c < cycles.size(); ++c) {
        const std::string cp = path + ".cycles[" + std::to_string(c) + "]";
        const std::string kind = get_string(field(cycles[c], cp, "kind"), cp + ".kind");
        if (kind != kind_name(CycleKind::transfer_in) && kind != kind_name(CycleKind::transfer_out))
          schema_fail(cp + ".kind", "unknown cycle kind");
        ExchangeCycle cycle{kind == kind_name(CycleKind::transfer_in) ? CycleKind::transfer_in : CycleKind::transfer_out,
                            {}};
        const json& links = field(cycles[c], cp, "links");
        if (!links.is_array()) schema_fail(cp + ".links", "expected an array");
        for (std::size_t l = 0; l < links.size(); ++l) {
          const auto pair = get_strings(links[l], cp + ".links[" + std::to_string(l) + "]");
          if (pair.size() != 2) schema_fail(cp + ".links[" + std::to_string(l) + "]", "expected [major, student]");
          cycle.links.push_back({problem.major_id(pair[0]), problem.student_id(pair[1])});
        }
        s.cycles.push_back(std::move(cycle));
      }
    }
    const json& events = field(js, path, "events");
    if (!events.is_array()) schema_fail(path + ".events", "expected an array");
    for (std::size_t e = 0; e < events.size(); ++e) {
      const std::string ep = path + ".events[" + std::to_string(e) + "]";
      const json& je = events[e];
      const std::string side = get_string(field(je, ep, "side"), ep + ".side");
      const std::string action = get_string(field(je, ep, "action"), ep + ".action");
      if (side != "transfer-out" && side != "transfer-in") schema_fail(ep + ".side", "unknown side");
      if (action != "grant" && action != "revoke") schema_fail(ep + ".action", "unknown action");
      s.events.push_back({problem.student_id(get_string(field(je, ep, "student"), ep + ".student")),
                          problem.major_id(get_string(field(je, ep, "major"), ep + ".major")),
                          side == "transfer-out" ? Side::transfer_out : Side::transfer_in,
                          action == "grant" ? Action::grant : Action::revoke});
    }
    t.steps.push_back(std::move(s));
  }
  return t;
}

std::string render_trace_table(const Problem& problem, const MechanismTrace& trace) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"k", "process", "(E^k, A^k)", "moved", "expandable", "violated", "pointers", "removed", "cycles",
                  "actions"});
  for (const auto& s : trace.steps) {
    std::vector<std::string> moved;
    const auto mu = corresponding_assignment(problem, s.state);
    for (StudentId i : problem.student_ids())
      if (mu[i.value] != problem.initial(i))
        moved.push_back(problem.student(i).name + "->" + problem.major(mu[i.value]).name);

    const bool em_like = s.process == "em" || s.process == "alt-em";
    const bool exchange = s.process == "tie" || s.process == "toe";
    std::vector<std::string> ptrs;
    for (const auto& e : s.pointers)
      ptrs.push_back(problem.major(e.major).name + ">" + (e.student ? problem.student(*e.student).name : "-"));
    std::vector<std::string> cycles;
    for (const auto& c : s.cycles) {
      std::string text;
      for (const auto& l : c.links) text += problem.major(l.major).name + ">" + problem.student(l.student).name + ">";
      text += problem.major(c.links.front().major).name;
      cycles.push_back(text);
    }
    std::vector<std::string> actions;
    for (const auto& e : s.events)
      actions.push_back(std::string(e.action == Action::grant ? "+" : "-") +
                        (e.side == Side::transfer_out ? "E:" : "A:") + problem.student(e.student).name);

    rows.push_back({std::to_string(s.index), s.process + "/" + to_string(s.phase), inline_outcome(problem, s.state),
                    "{" + join(moved) + "}", em_like ? brace(problem, s.expandable) : "",
                    em_like ? brace(problem, s.violated) : "", exchange ? join(ptrs, " ") : "",
                    exchange ? brace(problem, s.removed) : "", join(cycles, " "), join(actions, " ")});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

json report_to_json(const Problem& problem, const Outcome& outcome, bool permissible, bool em) {
  json doc;
  doc["schema_version"] = schema_version;
  doc["outcome"] = state_json(problem, outcome);
  doc["permissible"] = permissible;
  doc["em"] = em;
  return doc;
}

std::vector<sim::ScenarioConfig> parse_scenarios(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema_fail("$", "expected an object");
  check_version(doc);
  sim::ScenarioConfig base;
  if (auto it = doc.find("base"); it != doc.end()) {
    const json& b = *it;
    if (!b.is_object()) schema_fail("$.base", "expected an object");
    for (const auto& [key, value] : b.items()) {
      const std::string path = "$.base." + key;
      if (key == "n_majors") base.n_majors = get_int(value, path);
      else if (key == "capacity") base.capacity = get_int(value, path);
      else if (key == "trials") base.trials = get_int(value, path);
      else if (key == "threads") base.threads = get_int(value, path);
      else if (key == "floor_frac") base.floor_frac = get_number(value, path);
      else if (key == "ceiling_frac") base.ceiling_frac = get_number(value, path);
      else if (key == "master_seed") {
        if (!value.is_number_unsigned() && !value.is_number_integer()) schema_fail(path, "expected an integer");
        base.master_seed = value.get<std::uint64_t>();
      } else schema_fail(path, "unknown key");
    }
  }
  std::vector<sim::ScenarioConfig> grid;
  const bool has_grid = doc.contains("grid");
  const bool has_cells = doc.contains("cells");
  if (has_grid == has_cells) schema_fail("$", "expected exactly one of 'grid' or 'cells'");
  if (has_grid) {
    if (get_string(doc["grid"], "$.grid") != "default") schema_fail("$.grid", "only \"default\" is known");
    grid = sim::default_grid(base);
  } else {
    const json& cells = doc["cells"];
    if (!cells.is_array()) schema_fail("$.cells", "expected an array");
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const std::string path = "$.cells[" + std::to_string(k) + "]";
      sim::ScenarioConfig c = base;
      const std::string regime = get_string(field(cells[k], path, "regime"), path + ".regime");
      if (regime == "balanced") c.regime = sim::Regime::balanced;
      else if (regime == "band") c.regime = sim::Regime::band;
      else schema_fail(path + ".regime", "expected \"balanced\" or \"band\"");
      c.beta1 = get_number(field(cells[k], path, "beta1"), path + ".beta1");
      c.beta2 = get_number(field(cells[k], path, "beta2"), path + ".beta2");
      grid.push_back(c);
    }
  }
  for (const auto& c : grid) sim::validate(c);
  return grid;
}

std::string results_csv(const std::vector<sim::SimResult>& results) {
  std::string out = "regime,beta1,beta2,mechanism,mean_str,std_str,trials,mean_applicants\n";
  char buf[256];
  for (const auto& r : results)
    for (sim::Mechanism m : sim::all_mechanisms) {
      const auto& s = r[m];
      std::snprintf(buf, sizeof buf, "%s,%.2f,%.2f,%s,%.6f,%.6f,%d,%.2f\n", sim::to_string(r.config.regime),
                    r.config.beta1, r.config.beta2, sim::to_string(m), s.mean, s.std_dev, s.trials, r.mean_applicants);
      out += buf;
    }
  return out;
}

json error_to_json(const Error& error) { return {{"error", to_string(error.code())}, {"message", error.what()}}; }

}  // namespace majortrans::io
