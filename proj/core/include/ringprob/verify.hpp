#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ringprob/bounds.hpp"
#include "ringprob/catalog.hpp"

namespace ringprob {

enum class RMode { All, Zero };

struct VerifyOptions {
  std::size_t max_order = 16;
  RMode r_mode = RMode::All;
  unsigned threads = 1;
  std::size_t subring_cap = 64;
  // Rings up to this order are also paired with R x Z2 for the isoclinism suite.
  std::size_t isoclinism_max_order = 8;
  std::size_t failure_detail_limit = 50;
};

struct CheckTally {
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct VerifyFailure {
  std::string ring;
  std::string context;  // subrings and target
  CheckRecord record;
};

struct RingSummary {
  std::string name;
  std::size_t order = 0;
  std::size_t subrings = 0;
  std::size_t records = 0;
};

struct VerifyReport {
  std::vector<RingSummary> rings;
  std::map<std::string, CheckTally> tallies;  // by check name
  std::vector<VerifyFailure> failures;        // first failure_detail_limit only
  std::size_t failed_total = 0;

  int exit_code() const { return failed_total == 0 ? 0 : 1; }
  const CheckTally* tally(const std::string& name) const;
};

// Every generated ring of order 1..8, nc4a, ut2 over Z2, m2 over F2 and nc4a x Z2.
Catalog acceptance_catalog();
// zn 2..8 and the same builtins, without generated rings.
Catalog default_catalog();

VerifyReport verify_all(const Catalog& catalog, const VerifyOptions& options = {});

}  // namespace ringprob
