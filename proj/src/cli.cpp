#include "wfam/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wfam/binomial.hpp"
#include "wfam/json_io.hpp"

namespace wfam {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimited = 3;

int exit_code_for(const error& e) {
  switch (e.kind()) {
    case errc::resource:
      return kExitLimited;
    case errc::internal:
      return kExitPropertyFails;  // carries the counterexample
    default:
      return kExitUsage;
  }
}

void emit(const json& certificate, const std::string& out_path, std::ostream& out) {
  std::string bytes = to_bytes(certificate);
  if (!out_path.empty())
    write_text_file(out_path, bytes);
  else
    out << bytes;
}

std::string join_command(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

struct construct_args {
  std::string kind;
  int n = 0, d = 0, s = 0;
  int center = 1;
  int m = 0;
  std::string out_path;
  std::string witness_out;
};

int run_construct(const construct_args& a, std::ostream& out) {
  ground_params params{a.n, a.d, a.s};
  std::vector<std::string> cmd{"construct", "--kind", a.kind, "--n", std::to_string(a.n),
                               "--d", std::to_string(a.d), "--s", std::to_string(a.s)};
  json payload;
  std::vector<check_entry> checks;

  if (a.kind == "star") {
    cmd.push_back("--center");
    cmd.push_back(std::to_string(a.center));
    certified_family built = star(params, a.center);
    payload["family"] = family_to_json(built.family);
    payload["witnesses"] = assignment_to_json(built.witnesses);
    checks.push_back({"witnesses_valid", true, ""});
    checks.push_back({"size_equals_binomial_nm1_d",
                      built.family.size() == binomial(a.n - 1, a.d), ""});
    if (!a.out_path.empty()) write_text_file(a.out_path, to_bytes(family_to_json(built.family)));
    if (!a.witness_out.empty())
      write_text_file(a.witness_out, to_bytes(assignment_to_json(built.witnesses)));
  } else if (a.kind == "two_star") {
    cmd.push_back("--m");
    cmd.push_back(std::to_string(a.m));
    two_star_result built = two_star(params, a.m);
    payload["family"] = family_to_json(built.family);
    payload["witnesses"] = assignment_to_json(built.witnesses);
    payload["a1_size"] = built.a1_size;
    payload["a2_size"] = built.a2_size;
    payload["a12_size"] = built.a12_size;
    payload["degenerate"] = built.degenerate;
    checks.push_back({"witnesses_valid", true, ""});
    checks.push_back({"size_equals_binomial_nm1_d",
                      built.family.size() == binomial(a.n - 1, a.d), ""});
    if (!built.degenerate) {
      bool not_star = !is_star(built.family).has_value();
      checks.push_back({"not_a_star", not_star,
                        not_star ? "" : "family has a common element"});
    }
    if (!a.out_path.empty()) write_text_file(a.out_path, to_bytes(family_to_json(built.family)));
    if (!a.witness_out.empty())
      write_text_file(a.witness_out, to_bytes(assignment_to_json(built.witnesses)));
  } else if (a.kind == "full_uniform") {
    set_family built = full_uniform(params);
    payload["family"] = family_to_json(built);
    checks.push_back({"size_equals_binomial_n_dp1",
                      built.size() == binomial(a.n, a.d + 1), ""});
    if (!a.out_path.empty()) write_text_file(a.out_path, to_bytes(family_to_json(built)));
  } else {
    fail(errc::usage, "unknown construction kind " + a.kind);
  }
  if (!a.out_path.empty()) {
    cmd.push_back("--out");
    cmd.push_back(a.out_path);
  }
  if (!a.witness_out.empty()) {
    cmd.push_back("--witness-out");
    cmd.push_back(a.witness_out);
  }
  out << to_bytes(make_certificate(join_command(cmd), params, payload, checks));
  for (const check_entry& c : checks)
    if (!c.pass) return kExitPropertyFails;
  return kExitOk;
}

int run_verify(const std::string& family_path, const std::string& witness_path, int s,
               const std::string& out_path, std::ostream& out) {
  set_family family = load_family_file(family_path);
  ground_params params = family.params;
  std::vector<std::string> cmd{"verify", "--family", family_path};
  if (!witness_path.empty()) {
    cmd.push_back("--witness");
    cmd.push_back(witness_path);
  }
  cmd.push_back("--s");
  cmd.push_back(std::to_string(s));

  json payload;
  payload["family_size"] = family.size();
  std::vector<check_entry> checks;
  bool holds = false;

  if (!witness_path.empty()) {
    witness_assignment assignment = load_witness_file(witness_path);
    try {
      validate_assignment(family, assignment, s);
      holds = true;
      checks.push_back({"assignment_valid", true, ""});
    } catch (const error& e) {
      if (e.kind() != errc::invalid_assignment) throw;
      checks.push_back({"assignment_valid", false, e.what()});
    }
  } else {
    verify_result result = verify_s_witness(family, s);
    holds = result.ok();
    if (holds) {
      payload["witnesses"] = assignment_to_json(*result.assignment);
      checks.push_back({"s_witness_family", true, ""});
    } else {
      payload["failing_member"] = set_to_json(*result.failing_member);
      checks.push_back({"s_witness_family", false,
                        "no size-" + std::to_string(s) + " witness for " +
                            result.failing_member->to_string()});
    }
  }

  // Frankl–Pach sanity: a family with VC <= d has at most C(n,d) members.
  std::uint64_t fp_bound = binomial(params.n, params.d);
  payload["frankl_pach_bound"] = fp_bound;
  if (holds)
    checks.push_back({"frankl_pach_size_bound", family.size() <= fp_bound, ""});

  emit(make_certificate(join_command(cmd), params, payload, checks), out_path, out);
  return holds ? kExitOk : kExitPropertyFails;
}

int run_vc(const std::string& family_path, int d_override, bool exact,
           const std::string& out_path, std::ostream& out) {
  set_family family = load_family_file(family_path);
  if (d_override >= 0) family.params.d = d_override;
  ground_params params = family.params;
  std::vector<std::string> cmd{"vc", "--family", family_path, "--d", std::to_string(params.d)};
  if (exact) cmd.push_back("--exact");

  vc_report report = vc_at_most_d(family);
  json payload;
  payload["vc_at_most_d"] = report.vc_at_most_d;
  if (report.violating_member)
    payload["violating_member"] = set_to_json(*report.violating_member);
  if (exact) {
    vc_value value = exact_vc(family);
    payload["exact_vc"] = value.value;
    payload["exact_vc_is_lower_bound"] = value.at_least;
  }
  std::vector<check_entry> checks;
  checks.push_back({"vc_at_most_d", report.vc_at_most_d,
                    report.violating_member ? "shattered member " +
                                                  report.violating_member->to_string()
                                            : ""});
  emit(make_certificate(join_command(cmd), params, payload, checks), out_path, out);
  return report.vc_at_most_d ? kExitOk : kExitPropertyFails;
}

int run_model(const std::string& family_path, const std::string& witness_path,
              const std::string& base_spec, bool collapse, const std::string& trace_path,
              const std::string& out_path, std::ostream& out) {
  set_family family = load_family_file(family_path);
  witness_assignment assignment = load_witness_file(witness_path);
  validate_assignment(family, assignment, family.params.s);

  element_set base;
  {
    std::stringstream ss(base_spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      base.add(std::stoi(tok));
    }
  }

  std::vector<std::string> cmd{"model", "--family", family_path, "--witness", witness_path,
                               "--base", base_spec};
  if (!collapse) cmd.push_back("--no-collapse");
  if (!trace_path.empty()) {
    cmd.push_back("--trace");
    cmd.push_back(trace_path);
  }

  model_result result = reduce_to_model(base, family, assignment, collapse);
  json payload = model_to_json(result);
  payload["size_bound"] = model_size_bound(family.params);
  std::vector<check_entry> checks;
  checks.push_back({"model_properties_hold", true, ""});  // reduce_to_model throws otherwise
  checks.push_back({"model_within_size_bound",
                    result.model.size() <= model_size_bound(family.params), ""});

  if (!trace_path.empty()) write_text_file(trace_path, to_bytes(payload.at("trace")));
  emit(make_certificate(join_command(cmd), family.params, payload, checks), out_path, out);
  return kExitOk;
}

int run_inject(const std::string& family_path, const std::string& witness_path,
               const std::string& report_path, std::ostream& out) {
  set_family family = load_family_file(family_path);
  witness_assignment assignment = load_witness_file(witness_path);
  injection_report report = build_injection(family, assignment);

  std::vector<std::string> cmd{"inject", "--family", family_path, "--witness", witness_path};
  if (!report_path.empty()) {
    cmd.push_back("--report");
    cmd.push_back(report_path);
  }
  json payload = injection_to_json(report, family.params);
  std::vector<check_entry> checks;
  checks.push_back({"image_size_equals_f1", true, ""});
  checks.push_back({"u_disjoint_from_image", true, ""});
  checks.push_back({"f1_plus_u_at_most_binomial_n_d", true, ""});
  emit(make_certificate(join_command(cmd), family.params, payload, checks), report_path, out);
  return kExitOk;
}

int run_stability(const std::string& family_path, const std::string& witness_path,
                  const std::string& report_path, std::ostream& out) {
  set_family family = load_family_file(family_path);
  witness_assignment assignment = load_witness_file(witness_path);
  stability_report_result report = stability_report(family, assignment);

  std::vector<std::string> cmd{"stability", "--family", family_path, "--witness", witness_path};
  if (!report_path.empty()) {
    cmd.push_back("--report");
    cmd.push_back(report_path);
  }
  json payload = stability_to_json(report, family.params);
  std::vector<check_entry> checks;
  if (!report.degenerate) {
    checks.push_back({"base_partition_holds", true, ""});
    checks.push_back({"inj2_inequality_holds", true, ""});
    checks.push_back({"u_prime_avoids_x0", true, ""});
  } else {
    checks.push_back({"degenerate_b1_empty", true, ""});
  }
  emit(make_certificate(join_command(cmd), family.params, payload, checks), report_path, out);
  return kExitOk;
}

struct search_args {
  int n = 0, d = 0, s = 0;
  std::string mode = "bnb";
  double node_limit = 1e8;
  std::uint64_t target = 0;
  bool three_star = false;
  bool no_stratify = false;
  bool allow_two_star_cover = false;
  std::string out_path;
};

int run_search(const search_args& a, std::ostream& out) {
  ground_params params{a.n, a.d, a.s};
  std::vector<std::string> cmd{"search", "--n", std::to_string(a.n), "--d", std::to_string(a.d),
                               "--s", std::to_string(a.s), "--mode", a.mode};
  if (a.three_star) cmd.push_back("--three-star");
  if (a.no_stratify) cmd.push_back("--no-stratify");
  if (a.allow_two_star_cover) cmd.push_back("--allow-two-star-cover");
  if (!a.out_path.empty()) {
    cmd.push_back("--out");
    cmd.push_back(a.out_path);
  }

  search_result result;
  if (a.three_star) {
    three_star_options options;
    options.stratified = !a.no_stratify;
    options.constraints.forbid_two_star_cover = !a.allow_two_star_cover;
    if (a.target > 0) options.constraints.target_size = a.target;
    options.node_limit = static_cast<std::uint64_t>(a.node_limit);
    result = three_star_search(params, options);
  } else {
    search_problem problem;
    problem.params = params;
    problem.mode = a.mode == "exhaustive" ? search_mode::exhaustive : search_mode::branch_and_bound;
    problem.node_limit = static_cast<std::uint64_t>(a.node_limit);
    if (a.target > 0) problem.target = a.target;
    result = max_s_witness(problem);
  }

  json payload = search_to_json(result, params, a.three_star ? "three_star" : a.mode);
  std::vector<check_entry> checks;
  checks.push_back({"certificate_verifies", true, ""});
  checks.push_back({"complete", result.complete,
                    result.complete ? "" : "node limit reached before exhausting the space"});
  emit(make_certificate(join_command(cmd), params, payload, checks), a.out_path, out);
  return result.complete ? kExitOk : kExitLimited;
}

int run_sweep(const std::string& grid_path, const std::string& out_path,
              const std::string& mode_name, double node_limit, const std::string& format,
              std::ostream& out) {
  std::vector<ground_params> grid;
  {
    std::ifstream in(grid_path);
    if (!in) fail(errc::usage, "cannot open " + grid_path);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      fail(errc::validation, std::string("malformed JSON in grid: ") + e.what());
    }
    if (!j.is_object() || !j.contains("cells") || !j.at("cells").is_array())
      fail(errc::validation, "grid JSON needs a cells array");
    for (const json& cell : j.at("cells")) {
      ground_params p;
      p.n = cell.at("n").get<int>();
      p.d = cell.at("d").get<int>();
      p.s = cell.at("s").get<int>();
      grid.push_back(p);
    }
  }
  search_mode mode =
      mode_name == "exhaustive" ? search_mode::exhaustive : search_mode::branch_and_bound;
  std::vector<sweep_row> rows = sweep(grid, mode, static_cast<std::uint64_t>(node_limit));
  std::string text = format == "json" ? to_bytes(sweep_to_json(rows)) : sweep_csv(rows);
  if (!out_path.empty())
    write_text_file(out_path, text);
  else
    out << text;
  bool any_ok = grid.empty();
  for (const sweep_row& row : rows)
    if (row.error.empty()) any_ok = true;
  return any_ok ? kExitOk : kExitPropertyFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"witness-family toolkit"};
  app.require_subcommand(1);
  unsigned long long seed = 0;
  app.add_option("--seed", seed, "seed for test-only randomness; core operations are exact");

  construct_args ca;
  CLI::App* construct = app.add_subcommand("construct", "generate a named family with witnesses");
  construct->add_option("--kind", ca.kind, "star | two_star | full_uniform")->required();
  construct->add_option("--n", ca.n)->required();
  construct->add_option("--d", ca.d)->required();
  construct->add_option("--s", ca.s)->required();
  construct->add_option("--center", ca.center, "star center (default 1)");
  construct->add_option("--m", ca.m, "two_star split point");
  construct->add_option("--out", ca.out_path, "family JSON path");
  construct->add_option("--witness-out", ca.witness_out, "witness JSON path");

  std::string family_path, witness_path, out_path, trace_path, report_path;
  int s_arg = 0;
  CLI::App* verify = app.add_subcommand("verify", "check the s-witness property");
  verify->add_option("--family", family_path)->required();
  verify->add_option("--witness", witness_path, "validate this assignment instead of searching");
  verify->add_option("--s", s_arg)->required();
  verify->add_option("--out", out_path, "certificate path (default stdout)");

  int d_arg = -1;
  bool exact_flag = false;
  CLI::App* vc = app.add_subcommand("vc", "VC-dimension checks");
  vc->add_option("--family", family_path)->required();
  vc->add_option("--d", d_arg, "override d from the family file");
  vc->add_flag("--exact", exact_flag, "also run the exhaustive shattering search");
  vc->add_option("--out", out_path);

  std::string base_spec;
  bool no_collapse = false;
  CLI::App* model = app.add_subcommand("model", "per-base model reduction");
  model->add_option("--family", family_path)->required();
  model->add_option("--witness", witness_path)->required();
  model->add_option("--base", base_spec, "comma-separated base elements, e.g. 1,3")->required();
  model->add_flag("--no-collapse", no_collapse, "keep the full model when a singleton appears");
  model->add_option("--trace", trace_path, "write the replacement trace here");
  model->add_option("--out", out_path);

  CLI::App* inject = app.add_subcommand("inject", "injection report");
  inject->add_option("--family", family_path)->required();
  inject->add_option("--witness", witness_path)->required();
  inject->add_option("--report", report_path, "certificate path (default stdout)");

  CLI::App* stability = app.add_subcommand("stability", "stability report");
  stability->add_option("--family", family_path)->required();
  stability->add_option("--witness", witness_path)->required();
  stability->add_option("--report", report_path);

  search_args sa;
  CLI::App* search_cmd = app.add_subcommand("search", "exact extremal search");
  search_cmd->add_option("--n", sa.n)->required();
  search_cmd->add_option("--d", sa.d)->required();
  search_cmd->add_option("--s", sa.s)->required();
  search_cmd->add_option("--mode", sa.mode, "exhaustive | bnb");
  search_cmd->add_option("--node-limit", sa.node_limit, "e.g. 1e8");
  search_cmd->add_option("--target", sa.target, "stop once this size is reached");
  search_cmd->add_flag("--three-star", sa.three_star, "run the three-star constrained search");
  search_cmd->add_flag("--no-stratify", sa.no_stratify, "three-star: plain DFS");
  search_cmd->add_flag("--allow-two-star-cover", sa.allow_two_star_cover,
                       "three-star: drop the two-star-cover exclusion");
  search_cmd->add_option("--out", sa.out_path);

  std::string grid_path, sweep_mode = "bnb", format = "csv";
  double sweep_node_limit = 1e8;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "search over a parameter grid");
  sweep_cmd->add_option("--grid", grid_path)->required();
  sweep_cmd->add_option("--out", out_path);
  sweep_cmd->add_option("--mode", sweep_mode, "exhaustive | bnb");
  sweep_cmd->add_option("--node-limit", sweep_node_limit);
  sweep_cmd->add_option("--format", format, "csv | json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(ca, out);
    if (verify->parsed()) return run_verify(family_path, witness_path, s_arg, out_path, out);
    if (vc->parsed()) return run_vc(family_path, d_arg, exact_flag, out_path, out);
    if (model->parsed())
      return run_model(family_path, witness_path, base_spec, !no_collapse, trace_path, out_path,
                       out);
    if (inject->parsed()) return run_inject(family_path, witness_path, report_path, out);
    if (stability->parsed()) return run_stability(family_path, witness_path, report_path, out);
    if (search_cmd->parsed()) return run_search(sa, out);
    if (sweep_cmd->parsed())
      return run_sweep(grid_path, out_path, sweep_mode, sweep_node_limit, format, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "no subcommand selected\n" << app.help();
  return kExitUsage;
}

}  // namespace wfam
