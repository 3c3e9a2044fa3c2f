#pragma once

#include <map>
#include <string>
#include <vector>

#include "beit/oracle.hpp"

namespace beit {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  double elapsed_ms = 0;
};

struct InstanceReport {
  std::string suite;
  std::string instance;
  std::vector<Check> checks;

  bool pass() const;
  std::string key() const { return suite + " " + instance; }
};

struct VerifyReport {
  std::string suite;
  std::vector<InstanceReport> instances;

  bool pass() const;
  std::size_t check_count() const;
  std::size_t failure_count() const;
};

/// Suite tags accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") against the oracle configured in `options`.
/// Instances are sorted by key. Throws InvalidParameter for unknown tags.
VerifyReport run_suite(const std::string& suite, const OracleOptions& options);

/// Compact "i,d:beta" list of the nonzero entries.
std::string entries_string(const BettiTable& t);

std::string report_text(const VerifyReport& r, bool timing);
std::string report_json(const VerifyReport& r, bool timing);

}  // namespace beit
