#include "uqv/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace uqv {

CheckReport CheckReport::pass(std::string suite, std::string check,
                              std::vector<std::pair<std::string, std::string>> params) {
  return CheckReport{std::move(suite), std::move(check), std::move(params), Status::Pass, {}};
}

CheckReport CheckReport::fail(std::string suite, std::string check, std::string witness,
                              std::vector<std::pair<std::string, std::string>> params) {
  return CheckReport{std::move(suite), std::move(check), std::move(params), Status::Fail,
                     std::move(witness)};
}

CheckReport CheckReport::warn(std::string suite, std::string check, std::string witness,
                              std::vector<std::pair<std::string, std::string>> params) {
  return CheckReport{std::move(suite), std::move(check), std::move(params), Status::Warn,
                     std::move(witness)};
}

namespace {

const char* status_name(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::Pass: return "pass";
    case CheckReport::Status::Fail: return "fail";
    case CheckReport::Status::Warn: return "warn";
  }
  return "?";
}

}  // namespace

std::string to_json_line(const CheckReport& rep) {
  nlohmann::ordered_json j;
  j["suite"] = rep.suite;
  j["check"] = rep.check;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rep.params) p[k] = v;
  j["params"] = p;
  j["status"] = status_name(rep.status);
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  return j.dump();
}

CheckReport from_json_line(const std::string& line) {
  auto j = nlohmann::json::parse(line);
  CheckReport rep;
  rep.suite = j.at("suite").get<std::string>();
  rep.check = j.at("check").get<std::string>();
  for (const auto& [k, v] : j.at("params").items())
    rep.params.emplace_back(k, v.get<std::string>());
  std::string s = j.at("status").get<std::string>();
  rep.status = s == "pass"   ? CheckReport::Status::Pass
               : s == "warn" ? CheckReport::Status::Warn
                             : CheckReport::Status::Fail;
  if (j.contains("witness")) rep.witness = j.at("witness").get<std::string>();
  return rep;
}

std::string render_report(std::vector<CheckReport> reports) {
  std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.suite, a.check, a.params) < std::tie(b.suite, b.check, b.params);
  });
  std::ostringstream os;
  for (const auto& rep : reports) os << to_json_line(rep) << "\n";
  return os.str();
}

std::vector<CheckReport> parse_report(const std::string& text) {
  std::vector<CheckReport> reports;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    reports.push_back(from_json_line(line));
  }
  return reports;
}

}  // namespace uqv
