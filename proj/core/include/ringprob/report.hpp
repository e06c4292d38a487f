#pragma once

#include <string>
#include <vector>

#include "ringprob/bounds.hpp"

namespace ringprob {

struct VerifyReport;

// JSON documents; rationals are {"num": "...", "den": "..."} with decimal strings.
std::string to_json(const CheckRecord& record);
std::string to_json(const std::vector<CheckRecord>& records);
std::string to_json(const BoundReport& report);
std::string to_json(const QuotientCharacterization& result);
std::string to_json(const VerifyReport& report);

// One line per record: "PASS name: lhs <= rhs" / "FAIL ..." / "n/a  name (reason)".
std::string to_text(const CheckRecord& record);
std::string to_text(const VerifyReport& report);

}  // namespace ringprob
