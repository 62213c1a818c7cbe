#pragma once

#include <ctime>
#include <string>
#include <vector>

#include "json.hpp"

#include "hosoya/identities.hpp"

namespace hosoya {

// Serialized result envelope for the CLI. All potentially large integers are
// decimal strings, never JSON numbers or floats; parameter indices are small
// machine integers and stay numeric. Serialization is key-sorted and stable,
// so a document round-trips byte-identically through parse -> dump.
struct ReportDocument {
  std::string schema_version = "1";
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::array();
  std::string generated_at;
};

inline nlohmann::json params_json(const Params& params) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

inline Params params_from_json(const nlohmann::json& j) {
  Params p;
  for (auto it = j.begin(); it != j.end(); ++it) p[it.key()] = it->get<long long>();
  return p;
}

inline nlohmann::json identity_report_json(const IdentityReport& rep) {
  nlohmann::json j;
  j["type"] = "identity";
  j["id"] = std::string(info(rep.id).name);
  j["params"] = params_json(rep.params);
  auto members = nlohmann::json::array();
  for (const auto& m : rep.members) members.push_back(m.str());
  j["members"] = std::move(members);
  j["holds"] = rep.holds;
  j["note"] = rep.note;
  return j;
}

inline nlohmann::json sweep_report_json(const SweepReport& rep) {
  nlohmann::json j;
  j["type"] = "sweep";
  j["id"] = std::string(info(rep.id).name);
  j["grid"] = rep.grid;
  j["instances"] = rep.instances;
  j["failure_count"] = rep.failure_count;
  auto fails = nlohmann::json::array();
  for (const auto& f : rep.failures) fails.push_back(params_json(f));
  j["failures"] = std::move(fails);
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

inline nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json j;
  j["schema_version"] = doc.schema_version;
  j["command"] = doc.command;
  j["inputs"] = doc.inputs;
  j["results"] = doc.results;
  j["generated_at"] = doc.generated_at;
  return j;
}

inline ReportDocument report_document_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  doc.inputs = j.at("inputs");
  doc.results = j.at("results");
  doc.generated_at = j.at("generated_at").get<std::string>();
  return doc;
}

inline std::string document_to_string(const ReportDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

inline std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace hosoya
