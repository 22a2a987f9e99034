#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gyro {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump(std::ostream& out, const json& v, int indent) {
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << std::string(indent + 2, ' ') << json(it.key()).dump() << ": ";
        dump(out, it.value(), indent + 2);
      }
      out << "\n" << std::string(indent, ' ') << "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& e : v) {
        if (!first) out << ",\n";
        first = false;
        out << std::string(indent + 2, ' ');
        dump(out, e, indent + 2);
      }
      out << "\n" << std::string(indent, ' ') << "]";
      return;
    }
    case json::value_t::number_float:
      out << format_double(v.get<double>());
      return;
    default:
      out << v.dump();
      return;
  }
}

bool scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void human(std::ostream& out, const std::string& key, const json& v,
           int indent) {
  std::string pad(indent, ' ');
  if (scalar(v)) {
    out << pad << key << ": " << scalar_text(v) << "\n";
    return;
  }
  if (v.is_array()) {
    bool all_scalar = true;
    for (const auto& e : v)
      if (!scalar(e)) {
        all_scalar = false;
        break;
      }
    if (all_scalar) {
      out << pad << key << ": [";
      bool first = true;
      for (const auto& e : v) {
        if (!first) out << ", ";
        first = false;
        out << scalar_text(e);
      }
      out << "]\n";
      return;
    }
    out << pad << key << ":\n";
    int i = 0;
    for (const auto& e : v) human(out, "[" + std::to_string(i++) + "]", e,
                                  indent + 2);
    return;
  }
  out << pad << key << ":\n";
  for (auto it = v.begin(); it != v.end(); ++it)
    human(out, it.key(), it.value(), indent + 2);
}

}  // namespace

std::string render_structured(const nlohmann::json& doc) {
  std::ostringstream out;
  dump(out, doc, 0);
  out << "\n";
  return out.str();
}

std::string render_human(const RunResult& r) {
  std::ostringstream out;
  std::string cmd = r.doc.value("command", "report");
  out << "gyro " << cmd << " report\n";
  out << std::string(cmd.size() + 12, '=') << "\n";
  // command and config first, bookkeeping keys last
  for (const char* key : {"config", "results"})
    if (r.doc.contains(key)) human(out, key, r.doc.at(key), 0);
  for (auto it = r.doc.begin(); it != r.doc.end(); ++it) {
    std::string k = it.key();
    if (k == "config" || k == "results" || k == "command" ||
        k == "schema_version" || k == "all_passed")
      continue;
    human(out, k, it.value(), 0);
  }
  out << (r.all_passed ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
  out << "time: " << format_double(r.elapsed_ms) << " ms\n";
  return out.str();
}

nlohmann::json to_json(const IdentityReport& rep) {
  json checks = json::object();
  for (const auto& c : rep.checks) {
    json w = json::array();
    for (const auto& wit : c.witnesses) {
      w.push_back({{"inputs", wit.inputs},
                   {"lhs", wit.lhs},
                   {"rhs", wit.rhs},
                   {"residual", wit.residual},
                   {"note", wit.note}});
    }
    checks[c.label] = {{"passed", c.passed},
                       {"checks", c.checks},
                       {"failures", c.failures},
                       {"errors", c.errors},
                       {"max_residual", c.max_residual},
                       {"witnesses", std::move(w)}};
  }
  return {{"all_passed", rep.all_passed()}, {"checks", std::move(checks)}};
}

nlohmann::json to_json(const TableVerdict& verdict) {
  json failures = json::array();
  for (const auto& f : verdict.failures)
    failures.push_back(
        {{"axiom", f.axiom}, {"witness", f.witness}, {"detail", f.detail}});
  return {{"valid", verdict.valid}, {"failures", std::move(failures)}};
}

}  // namespace gyro
