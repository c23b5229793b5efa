#pragma once

#include <string>

#include <json.hpp>

#include "wfam/injection.hpp"
#include "wfam/search.hpp"
#include "wfam/stability.hpp"

namespace wfam {

inline constexpr const char* kToolVersion = "0.1.0";

// Family file: {"n":6,"d":2,"s":1,"sets":[[1,2,3],...]} with ascending
// 1-indexed element arrays. The reader canonicalizes, the writer emits
// canonical order.
nlohmann::json family_to_json(const set_family& family);
set_family family_from_json(const nlohmann::json& j);

// Witness file: {"witnesses":[{"set":[1,2,3],"witness":[2]},...]}.
nlohmann::json assignment_to_json(const witness_assignment& assignment);
witness_assignment assignment_from_json(const nlohmann::json& j);

nlohmann::json set_to_json(const element_set& s);
element_set set_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const model_result& result);
// Explicit set lists are included only for n <= 20.
nlohmann::json injection_to_json(const injection_report& report, const ground_params& params);
nlohmann::json stability_to_json(const stability_report_result& report,
                                 const ground_params& params);
nlohmann::json search_to_json(const search_result& result, const ground_params& params,
                              const std::string& mode);

std::string sweep_csv(const std::vector<sweep_row>& rows);
nlohmann::json sweep_to_json(const std::vector<sweep_row>& rows);

struct check_entry {
  std::string name;
  bool pass = false;
  std::string counterexample;  // empty when passing
};

// Envelope every CLI operation emits: re-running the same command must
// reproduce it byte for byte.
nlohmann::json make_certificate(const std::string& command, const ground_params& params,
                                nlohmann::json payload, const std::vector<check_entry>& checks);

// dump(2) plus trailing newline; the single serialization used everywhere.
std::string to_bytes(const nlohmann::json& j);

set_family load_family_file(const std::string& path);
witness_assignment load_witness_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace wfam
