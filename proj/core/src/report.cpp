#include "ringprob/report.hpp"

#include <sstream>

#include "json.hpp"
#include "ringprob/verify.hpp"

namespace ringprob {
namespace {

using nlohmann::json;

json rational_json(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
  return {{"num", num.str()}, {"den", den.str()}};
}

json record_json(const CheckRecord& c) {
  json j{{"name", c.name}, {"applicable", c.applicable}};
  if (!c.applicable) {
    j["reason"] = c.reason;
    return j;
  }
  j["lhs"] = rational_json(*c.lhs);
  j["relation"] = std::string(to_string(c.relation));
  j["rhs"] = rational_json(*c.rhs);
  j["holds"] = c.holds;
  if (c.equality_mode != EqualityMode::None)
    j["equality"] = {{"mode", std::string(to_string(c.equality_mode))},
                     {"condition_met", *c.equality_condition_met},
                     {"attained", c.equality_attained()},
                     {"consistent", c.equality_consistent()}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

json records_json(const std::vector<CheckRecord>& records) {
  json a = json::array();
  for (const auto& c : records) a.push_back(record_json(c));
  return a;
}

json tally_json(const CheckTally& t) {
  return {{"applicable", t.applicable}, {"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
}

}  // namespace

std::string to_json(const CheckRecord& record) { return record_json(record).dump(2); }

std::string to_json(const std::vector<CheckRecord>& records) { return records_json(records).dump(2); }

std::string to_json(const BoundReport& report) {
  json j{{"s", report.s_members}, {"k", report.k_members}, {"smallest_prime", report.smallest_prime},
         {"all_passed", report.all_passed()}, {"checks", records_json(report.checks)}};
  if (report.r) j["r"] = *report.r;
  return j.dump(2);
}

std::string to_json(const QuotientCharacterization& result) {
  json j{{"s_quotient", result.s_quotient}, {"k_quotient", result.k_quotient},
         {"s_equals_k", result.s_equals_k}, {"checks", records_json(result.checks)}};
  return j.dump(2);
}

std::string to_json(const VerifyReport& report) {
  json rings = json::array();
  for (const auto& r : report.rings)
    rings.push_back({{"name", r.name}, {"order", r.order}, {"subrings", r.subrings}, {"records", r.records}});
  json tallies = json::object();
  for (const auto& [name, t] : report.tallies) tallies[name] = tally_json(t);
  json failures = json::array();
  for (const auto& f : report.failures) {
    auto rec = record_json(f.record);
    rec["ring"] = f.ring;
    rec["context"] = f.context;
    failures.push_back(std::move(rec));
  }
  json j{{"exit_code", report.exit_code()}, {"failed_total", report.failed_total}, {"rings", rings},
         {"checks", tallies}, {"failures", failures}};
  return j.dump(2);
}

std::string to_text(const CheckRecord& c) {
  std::ostringstream os;
  if (!c.applicable) {
    os << "n/a  " << c.name << " (" << c.reason << ")";
    return os.str();
  }
  os << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << to_string(*c.lhs) << " "
     << to_string(c.relation) << " " << to_string(*c.rhs);
  if (c.equality_mode != EqualityMode::None) {
    os << " [equality " << to_string(c.equality_mode) << " condition "
       << (*c.equality_condition_met ? "met" : "not met") << ", "
       << (c.equality_attained() ? "attained" : "not attained") << "]";
  }
  if (!c.witness.empty()) os << " {" << c.witness << "}";
  return os.str();
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& r : report.rings)
    os << "ring " << r.name << " order " << r.order << ", " << r.subrings << " subrings, " << r.records
       << " records\n";
  os << "\n";
  for (const auto& [name, t] : report.tallies)
    os << (t.failed ? "FAIL " : "ok   ") << name << ": " << t.passed << "/" << t.applicable
       << " applicable passed, " << t.skipped << " not applicable\n";
  if (!report.failures.empty()) {
    os << "\nfailures (first " << report.failures.size() << " of " << report.failed_total << "):\n";
    for (const auto& f : report.failures)
      os << "  " << f.ring << " " << f.context << ": " << to_text(f.record) << "\n";
  }
  os << "\n" << (report.failed_total ? "FAILED" : "OK") << " (" << report.failed_total
     << " failed records)\n";
  return os.str();
}

}  // namespace ringprob
