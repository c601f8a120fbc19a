#include "congr/report.hpp"

#include <algorithm>
#include <sstream>

#include "congr/error.hpp"

namespace congr {

VerifyReport::VerifyReport(std::string suite, nlohmann::json params, std::optional<std::uint64_t> seed)
    : suite_(std::move(suite)), params_(std::move(params)), seed_(seed) {}

void VerifyReport::add(ReportCase c) {
  auto pos = std::upper_bound(cases_.begin(), cases_.end(), c.case_id,
                              [](const std::string& id, const ReportCase& x) { return id < x.case_id; });
  CONGR_REQUIRE(pos == cases_.begin() || std::prev(pos)->case_id != c.case_id, ErrorKind::PreconditionViolated,
          "duplicate case id " + c.case_id);
  cases_.insert(pos, std::move(c));
}

void VerifyReport::add(std::string case_id, std::string statement, std::string expected, std::string actual,
                       bool pass) {
  add(ReportCase{std::move(case_id), std::move(statement), std::move(expected), std::move(actual), pass});
}

ReportSummary VerifyReport::summary() const {
  ReportSummary s;
  s.total = cases_.size();
  s.passed = static_cast<std::size_t>(std::count_if(cases_.begin(), cases_.end(), [](auto& c) { return c.pass; }));
  s.failed = s.total - s.passed;
  return s;
}

void VerifyReport::absorb(const VerifyReport& other, const std::string& prefix) {
  for (auto c : other.cases()) {
    c.case_id = prefix + c.case_id;
    add(std::move(c));
  }
  for (const auto& n : other.notes()) note(prefix + n);
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite_;
  j["params"] = params_;
  j["seed"] = seed_ ? nlohmann::json(*seed_) : nlohmann::json(nullptr);
  j["notes"] = notes_;
  auto cases = nlohmann::json::array();
  for (const auto& c : cases_)
    cases.push_back({{"case_id", c.case_id},
                     {"statement", c.statement},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"pass", c.pass}});
  j["cases"] = std::move(cases);
  const auto s = summary();
  j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
  return j;
}

VerifyReport VerifyReport::from_json(const nlohmann::json& j) {
  try {
    std::optional<std::uint64_t> seed;
    if (!j.at("seed").is_null()) seed = j.at("seed").get<std::uint64_t>();
    VerifyReport r(j.at("suite").get<std::string>(), j.at("params"), seed);
    for (const auto& n : j.at("notes")) r.note(n.get<std::string>());
    for (const auto& c : j.at("cases"))
      r.add(c.at("case_id").get<std::string>(), c.at("statement").get<std::string>(),
            c.at("expected").get<std::string>(), c.at("actual").get<std::string>(), c.at("pass").get<bool>());
    const auto s = r.summary();
    const auto& js = j.at("summary");
    CONGR_REQUIRE(js.at("total") == s.total && js.at("passed") == s.passed && js.at("failed") == s.failed,
            ErrorKind::Parse, "report summary does not match its cases");
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed report: ") + e.what());
  }
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite_ << "\n";
  os << "params: " << params_.dump() << "\n";
  if (seed_) os << "seed: " << *seed_ << "\n";
  for (const auto& n : notes_) os << "note: " << n << "\n";
  for (const auto& c : cases_) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.case_id << ": " << c.statement << "\n";
    os << "       expected: " << c.expected << "\n";
    os << "       actual:   " << c.actual << "\n";
  }
  const auto s = summary();
  os << "summary: " << s.passed << "/" << s.total << " passed, " << s.failed << " failed\n";
  return os.str();
}

}  // namespace congr
