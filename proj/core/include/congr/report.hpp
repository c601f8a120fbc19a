#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace congr {

struct ReportCase {
  std::string case_id;
  std::string statement;
  std::string expected;
  std::string actual;
  bool pass = false;

  friend bool operator==(const ReportCase&, const ReportCase&) = default;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

/// Outcome of one verification suite. Cases are kept sorted by case_id.
class VerifyReport {
 public:
  VerifyReport(std::string suite, nlohmann::json params, std::optional<std::uint64_t> seed = std::nullopt);

  void add(ReportCase c);
  void add(std::string case_id, std::string statement, std::string expected, std::string actual, bool pass);
  void note(std::string text) { notes_.push_back(std::move(text)); }

  const std::string& suite() const noexcept { return suite_; }
  const nlohmann::json& params() const noexcept { return params_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  const std::vector<ReportCase>& cases() const noexcept { return cases_; }
  ReportSummary summary() const;
  bool all_passed() const { return summary().failed == 0; }

  /// Merge another report's cases under a case_id prefix.
  void absorb(const VerifyReport& other, const std::string& prefix);

  nlohmann::json to_json() const;
  static VerifyReport from_json(const nlohmann::json& j);
  std::string to_text() const;

  friend bool operator==(const VerifyReport& a, const VerifyReport& b) {
    return a.suite_ == b.suite_ && a.params_ == b.params_ && a.seed_ == b.seed_ && a.notes_ == b.notes_ &&
           a.cases_ == b.cases_;
  }

 private:
  std::string suite_;
  nlohmann::json params_;
  std::optional<std::uint64_t> seed_;
  std::vector<std::string> notes_;
  std::vector<ReportCase> cases_;
};

}  // namespace congr
