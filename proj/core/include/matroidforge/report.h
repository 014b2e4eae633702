// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDFORGE_REPORT_H_
#define MATROIDFORGE_REPORT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace matroidforge {

inline constexpr int kReportSchema = 1;

struct Failure {
  std::string input;
  std::string property;
  std::string witness;

  friend auto operator<=>(const Failure&, const Failure&) = default;
};

struct PropertyTally {
  std::size_t checked = 0;
  std::size_t passed = 0;
};

// Outcome of a verification campaign. Every check is recorded against a
// property id; passed + failures.size() == checked() always holds.
class VerificationReport {
 public:
  explicit VerificationReport(std::string campaign = "",
                              nlohmann::json corpus_spec = nlohmann::json::object());

  const std::string& campaign() const { return campaign_; }
  const nlohmann::json& corpus_spec() const { return corpus_spec_; }
  const std::map<std::string, PropertyTally>& properties() const {
    return properties_;
  }
  const std::vector<Failure>& failures() const { return failures_; }
  std::size_t checked() const;
  std::size_t passed() const;

  void record(std::string_view input, std::string_view property, bool ok,
              std::string witness = "");
  // Records with a witness built only on failure.
  template <typename WitnessFn>
  void check(std::string_view input, std::string_view property, bool ok,
             WitnessFn&& witness) {
    record(input, property, ok, ok ? std::string() : std::string(witness()));
  }
  // Declares a property so it is listed even when nothing exercised it.
  void declare(std::string_view property);
  // Appends another report's tallies, failures and detail counters.
  void merge(const VerificationReport& other);

  // Free-form campaign output (evidence, counters); serialized under
  // "details".
  nlohmann::json& details() { return details_; }
  const nlohmann::json& details() const { return details_; }
  void count_detail(const std::string& key, std::size_t n = 1);

  void set_wall_time(double seconds) { wall_time_ = seconds; }
  std::optional<double> wall_time() const { return wall_time_; }

  // "PASS", "FAIL" or, when nothing was checked, "PASS-vacuous".
  std::string verdict() const;

  // Sorted keys and sorted failures; a newline-terminated document.
  nlohmann::json to_json() const;
  std::string to_json_text() const;
  // Summary header, one "<status> <property> <passed>/<checked>" line per
  // property (status PASS, FAIL, or PASS-vacuous when unexercised), then the
  // failures.
  std::string to_text() const;
  // Throws ParseError on a document that is not a schema 1 report.
  static VerificationReport from_json(const nlohmann::json& j);

 private:
  std::string campaign_;
  nlohmann::json corpus_spec_;
  std::map<std::string, PropertyTally> properties_;
  std::vector<Failure> failures_;
  nlohmann::json details_ = nlohmann::json::object();
  std::optional<double> wall_time_;
};

// 0 on PASS or PASS-vacuous, 1 on FAIL.
int exit_code_for(const VerificationReport& report);

}  // namespace matroidforge

#endif  // MATROIDFORGE_REPORT_H_
