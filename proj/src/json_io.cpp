#include "wfam/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wfam/binomial.hpp"

namespace wfam {

using nlohmann::json;

json set_to_json(const element_set& s) {
  json out = json::array();
  for (int e : s.elements()) out.push_back(e);
  return out;
}

element_set set_from_json(const json& j) {
  if (!j.is_array()) fail(errc::validation, "expected an array of elements");
  element_set out;
  for (const json& v : j) {
    if (!v.is_number_integer())
      fail(errc::validation, "set elements must be integers, got " + v.dump());
    long long e = v.get<long long>();
    if (e < 1 || e > element_set::capacity)
      fail(errc::validation, "element " + std::to_string(e) + " outside [1," +
                                 std::to_string(element_set::capacity) + "]");
    out.add(static_cast<int>(e));
  }
  return out;
}

json family_to_json(const set_family& family) {
  json out;
  out["n"] = family.params.n;
  out["d"] = family.params.d;
  out["s"] = family.params.s;
  json sets = json::array();
  for (const element_set& m : family.members) sets.push_back(set_to_json(m));
  out["sets"] = sets;
  return out;
}

set_family family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("s") ||
      !j.contains("sets"))
    fail(errc::validation, "family JSON needs keys n, d, s, sets");
  set_family fam;
  fam.params.n = j.at("n").get<int>();
  fam.params.d = j.at("d").get<int>();
  fam.params.s = j.at("s").get<int>();
  if (!j.at("sets").is_array()) fail(errc::validation, "family sets must be an array");
  for (const json& v : j.at("sets")) fam.members.push_back(set_from_json(v));
  return canonicalize(std::move(fam));
}

json assignment_to_json(const witness_assignment& assignment) {
  json entries = json::array();
  for (const witness_entry& e : assignment.entries) {
    json row;
    row["set"] = set_to_json(e.set);
    row["witness"] = set_to_json(e.witness);
    entries.push_back(row);
  }
  json out;
  out["witnesses"] = entries;
  return out;
}

witness_assignment assignment_from_json(const json& j) {
  if (!j.is_object() || !j.contains("witnesses") || !j.at("witnesses").is_array())
    fail(errc::validation, "witness JSON needs a witnesses array");
  witness_assignment out;
  for (const json& row : j.at("witnesses")) {
    if (!row.is_object() || !row.contains("set") || !row.contains("witness"))
      fail(errc::validation, "witness entries need set and witness keys");
    out.entries.push_back({set_from_json(row.at("set")), set_from_json(row.at("witness"))});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const witness_entry& a, const witness_entry& b) { return a.set < b.set; });
  return out;
}

namespace {

json sets_to_json(const std::vector<element_set>& sets) {
  json out = json::array();
  for (const element_set& s : sets) out.push_back(set_to_json(s));
  return out;
}

}  // namespace

json model_to_json(const model_result& result) {
  json out;
  out["base"] = set_to_json(result.base);
  out["alpha"] = result.alpha;
  if (result.x_b)
    out["x_b"] = *result.x_b;
  else
    out["x_b"] = nullptr;
  out["collapsed"] = result.collapsed;
  out["fiber_size"] = result.fiber_size;
  out["model"] = sets_to_json(result.model.members);
  json trace = json::array();
  for (const replacement_step& step : result.trace) {
    json t;
    t["core"] = set_to_json(step.core);
    t["petals"] = sets_to_json(step.petals);
    trace.push_back(t);
  }
  out["trace"] = trace;
  return out;
}

json injection_to_json(const injection_report& report, const ground_params& params) {
  json out;
  out["f1_size"] = report.f1.size();
  out["e_size"] = report.e.size();
  out["u_size"] = report.u.size();
  out["slack"] = report.slack;
  out["b1_size"] = report.classification.b1.size();
  out["b_ge2_size"] = report.classification.b_ge2.size();
  json bases = json::array();
  for (const base_image& image : report.per_base) {
    json b;
    b["base"] = set_to_json(image.base);
    b["x_b"] = image.x_b;
    b["f_b_size"] = image.f_b.size();
    if (params.n <= 20) b["e_b"] = sets_to_json(image.e_b.members);
    bases.push_back(b);
  }
  out["bases"] = bases;
  json pairs = json::array();
  for (const base_pair& p : report.pairs) {
    json row;
    row["b"] = set_to_json(p.b);
    row["b_prime"] = set_to_json(p.b_prime);
    row["u_count"] = p.u_count;
    row["u_lower_bound"] = p.u_lower_bound;
    pairs.push_back(row);
  }
  out["pairs"] = pairs;
  if (params.n <= 20) {
    out["e"] = sets_to_json(report.e.members);
    out["u"] = sets_to_json(report.u.members);
    out["f1"] = sets_to_json(report.f1.members);
  }
  return out;
}

json stability_to_json(const stability_report_result& report, const ground_params& params) {
  json out;
  out["degenerate"] = report.degenerate;
  if (report.x0)
    out["x0"] = *report.x0;
  else
    out["x0"] = nullptr;
  out["m"] = report.m;
  out["l"] = report.l;
  out["s1"] = sets_to_json(report.s1);
  out["s2"] = sets_to_json(report.s2);
  out["b1_x0"] = sets_to_json(report.b1_x0);
  out["b1_prime"] = sets_to_json(report.b1_prime);
  out["f1_x0_size"] = report.f1_x0_size;
  out["f1_prime_minus_star_size"] = report.f1_prime_minus_star_size;
  out["u_prime_size"] = report.u_prime_size;
  out["inj2_slack"] = report.inj2_slack;
  if (params.n <= 20) out["u_prime"] = sets_to_json(report.u_prime.members);
  return out;
}

json search_to_json(const search_result& result, const ground_params& params,
                    const std::string& mode) {
  json out;
  out["best_size"] = result.best_size;
  out["complete"] = result.complete;
  out["nodes"] = result.nodes_explored;
  out["mode"] = mode;
  out["bound_nm1_d"] = binomial(params.n - 1, params.d);
  out["family"] = family_to_json(result.certificate.family);
  out["witnesses"] = assignment_to_json(result.certificate.witnesses);
  return out;
}

std::string sweep_csv(const std::vector<sweep_row>& rows) {
  std::ostringstream out;
  out << "n,d,s,mode,best_size,bound_nm1_d,complete,nodes,seconds,error\n";
  for (const sweep_row& row : rows) {
    out << row.params.n << ',' << row.params.d << ',' << row.params.s << ','
        << to_string(row.mode) << ',';
    if (row.best_size) out << *row.best_size;
    out << ',' << row.bound_nm1_d << ',' << (row.complete ? "true" : "false") << ',' << row.nodes
        << ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", row.seconds);
    out << buf << ',';
    std::string err = row.error;
    for (char& c : err)
      if (c == ',' || c == '\n') c = ';';
    out << err << '\n';
  }
  return out.str();
}

json sweep_to_json(const std::vector<sweep_row>& rows) {
  json out = json::array();
  for (const sweep_row& row : rows) {
    json r;
    r["n"] = row.params.n;
    r["d"] = row.params.d;
    r["s"] = row.params.s;
    r["mode"] = to_string(row.mode);
    if (row.best_size)
      r["best_size"] = *row.best_size;
    else
      r["best_size"] = nullptr;
    r["bound_nm1_d"] = row.bound_nm1_d;
    r["complete"] = row.complete;
    r["nodes"] = row.nodes;
    r["seconds"] = row.seconds;
    r["error"] = row.error;
    out.push_back(r);
  }
  return out;
}

json make_certificate(const std::string& command, const ground_params& params, json payload,
                      const std::vector<check_entry>& checks) {
  json out;
  out["tool_version"] = kToolVersion;
  out["command"] = command;
  json p;
  p["n"] = params.n;
  p["d"] = params.d;
  p["s"] = params.s;
  out["params"] = p;
  out["payload"] = std::move(payload);
  json cs = json::array();
  for (const check_entry& c : checks) {
    json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    if (!c.counterexample.empty()) row["counterexample"] = c.counterexample;
    cs.push_back(row);
  }
  out["checks"] = cs;
  return out;
}

std::string to_bytes(const json& j) { return j.dump(2) + "\n"; }

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::usage, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(errc::validation, "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

set_family load_family_file(const std::string& path) { return family_from_json(parse_file(path)); }

witness_assignment load_witness_file(const std::string& path) {
  return assignment_from_json(parse_file(path));
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::usage, "cannot write " + path);
  out << contents;
}

}  // namespace wfam
