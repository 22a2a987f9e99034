#ifndef GYRO_REPORT_HPP
#define GYRO_REPORT_HPP

#include <string>

#include "json.hpp"

#include "core_algebra.hpp"
#include "finite_table.hpp"

namespace gyro {

inline constexpr const char* kSchemaVersion = "gyro-report/1";

// Result of one CLI-level command. `doc` is the complete document; wall
// time is kept outside it so the structured rendering stays a pure function
// of (input, config, seed).
struct RunResult {
  nlohmann::json doc;
  bool all_passed = false;
  double elapsed_ms = 0.0;
};

// Versioned key-value rendering: valid JSON, keys sorted, floating-point
// numbers with 17 significant digits, trailing newline. Byte-identical for
// identical documents.
std::string render_structured(const nlohmann::json& doc);

// Prose rendering of the same document plus a pass/fail banner and timing.
std::string render_human(const RunResult& r);

nlohmann::json to_json(const IdentityReport& rep);
nlohmann::json to_json(const TableVerdict& verdict);

}  // namespace gyro

#endif
