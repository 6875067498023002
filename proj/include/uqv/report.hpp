#pragma once

#include <string>
#include <utility>
#include <vector>

namespace uqv {

// Outcome of one verification. Failures always carry a witness describing
// the offending entry or parameter tuple.
struct CheckReport {
  enum class Status { Pass, Fail, Warn };

  std::string suite;
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Pass;
  std::string witness;

  bool passed() const { return status != Status::Fail; }

  static CheckReport pass(std::string suite, std::string check,
                          std::vector<std::pair<std::string, std::string>> params = {});
  static CheckReport fail(std::string suite, std::string check, std::string witness,
                          std::vector<std::pair<std::string, std::string>> params = {});
  static CheckReport warn(std::string suite, std::string check, std::string witness,
                          std::vector<std::pair<std::string, std::string>> params = {});
};

std::string to_json_line(const CheckReport& rep);
CheckReport from_json_line(const std::string& line);

// Entries sorted by (suite, check, params) before writing.
std::string render_report(std::vector<CheckReport> reports);
std::vector<CheckReport> parse_report(const std::string& text);

}  // namespace uqv
