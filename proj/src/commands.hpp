#ifndef GYRO_COMMANDS_HPP
#define GYRO_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "einstein.hpp"
#include "report.hpp"

namespace gyro {

// Command-level entry points shared by the C API and the CLI. Each builds a
// complete report document; hard errors (unreadable input, violated
// preconditions, resource limits) surface as gyro::Error instead.

struct VerifyOptions {
  std::string input;
  int limit = kDefaultLimit;
};
RunResult run_verify(const VerifyOptions& opt);

struct SubgyroOptions {
  std::string input;
  int limit = kDefaultLimit;
};
RunResult run_subgyro(const SubgyroOptions& opt);

struct CosetsOptions {
  std::string input;
  std::string subset;        // comma-separated indices, e.g. "0,2"
  bool diagnostic = false;   // report the raw coset family instead
  int limit = kDefaultLimit;
};
RunResult run_cosets(const CosetsOptions& opt);

struct EinsteinOptions {
  EinsteinConfig cfg;
  long long samples = 10000;
};
RunResult run_einstein(const EinsteinOptions& opt);

struct SetcheckOptions {
  std::string input;
  std::string check;  // assoc | inverse-bound | neutrality | double-chain |
                      // coadd-chain | scan
  std::optional<std::string> set_w, set_u, set_v, set_h;
  std::optional<int> g_elem;
  bool force = false;     // run assoc despite a non-invariant V
  int limit = kDefaultLimit;
  int scan_limit = 6;     // scans enumerate the powerset; keep n small
};
RunResult run_setcheck(const SetcheckOptions& opt);

std::vector<int> parse_subset_literal(const std::string& text, int n);

}  // namespace gyro

#endif
