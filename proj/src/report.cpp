#include "qaffine/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qaffine {

using ojson = nlohmann::ordered_json;

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown format '" + s + "'");
}

namespace {

ojson to_json(const SuiteReport& r, bool with_time) {
  ojson j;
  j["suite"] = r.suite;
  j["caps"] = {{"rank", r.caps.rank}, {"max_delta", r.caps.max_delta}, {"max_height", r.caps.max_height}};
  j["summary"] = {{"pass", r.count(CheckStatus::Pass)},
                  {"fail", r.count(CheckStatus::Fail)},
                  {"skipped-cap", r.count(CheckStatus::SkippedCap)}};
  if (with_time) j["wall_time"] = r.wall_time;
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson p = ojson::object();
    for (const auto& [k, v] : c.params) p[k] = v;
    ojson e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["params"] = p;
    e["status"] = to_string(c.status);
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["value"] = c.value;
    if (!c.limit.empty()) e["limit"] = c.limit;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string params_string(const CheckRecord& c) {
  std::string s;
  for (const auto& [k, v] : c.params) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

}  // namespace

std::string emit(const SuiteReport& r, ReportFormat f, bool with_time) {
  std::ostringstream os;
  switch (f) {
    case ReportFormat::Json:
      os << to_json(r, with_time).dump(2) << "\n";
      break;
    case ReportFormat::Csv:
      os << "suite,rank,max_delta,max_height,id,anchor,params,status,lhs,rhs,value,limit\n";
      for (const auto& c : r.checks)
        os << csv_field(r.suite) << "," << r.caps.rank << "," << r.caps.max_delta << "," << r.caps.max_height << ","
           << csv_field(c.id) << "," << csv_field(c.anchor) << "," << csv_field(params_string(c)) << ","
           << to_string(c.status) << "," << csv_field(c.lhs) << "," << csv_field(c.rhs) << "," << csv_field(c.value)
           << "," << csv_field(c.limit) << "\n";
      break;
    case ReportFormat::Text:
      os << "suite " << r.suite << "  rank<=" << r.caps.rank << " max_delta=" << r.caps.max_delta
         << " max_height=" << r.caps.max_height << "\n";
      os << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail) << " fail, "
         << r.count(CheckStatus::SkippedCap) << " skipped-cap";
      if (with_time) os << ", " << r.wall_time << " s";
      os << "\n";
      for (const auto& c : r.checks) {
        os << to_string(c.status) << "  " << c.anchor << "  " << params_string(c) << "\n";
        os << "    " << c.lhs << "  =  " << c.rhs << "\n";
        os << "    value: " << c.value;
        if (!c.limit.empty()) os << "  limit: " << c.limit;
        os << "\n";
      }
      break;
  }
  return os.str();
}

SuiteReport parse_json_report(const std::string& text) {
  ojson j = ojson::parse(text);
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  r.caps.rank = j.at("caps").at("rank").get<int>();
  r.caps.max_delta = j.at("caps").at("max_delta").get<int>();
  r.caps.max_height = j.at("caps").at("max_height").get<int>();
  if (j.contains("wall_time")) r.wall_time = j["wall_time"].get<double>();
  for (const auto& e : j.at("checks")) {
    CheckRecord c;
    c.id = e.at("id").get<std::string>();
    c.anchor = e.at("anchor").get<std::string>();
    for (const auto& [k, v] : e.at("params").items()) c.params.emplace_back(k, v.get<std::string>());
    c.status = parse_status(e.at("status").get<std::string>());
    c.lhs = e.at("lhs").get<std::string>();
    c.rhs = e.at("rhs").get<std::string>();
    c.value = e.at("value").get<std::string>();
    if (e.contains("limit")) c.limit = e["limit"].get<std::string>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace qaffine
