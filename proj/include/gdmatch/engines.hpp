#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "complexity.hpp"
#include "gd_string.hpp"
#include "matcher.hpp"
#include "quantum_match.hpp"

namespace gdmatch {

inline constexpr std::array<std::string_view, 4> kEngineNames = {"brute", "threads", "grover-ideal", "grover-sampled"};

inline bool is_engine_name(std::string_view name) {
  for (auto e : kEngineNames)
    if (e == name) return true;
  return false;
}

struct EngineOptions {
  std::uint64_t seed = 0;
  std::size_t boost = 0;  // 0 = default formula
};

using EngineFn = std::function<MatchReport(const GdString&, const Pattern&)>;

struct EngineEntry {
  std::string name;
  EngineFn run;
};

inline EngineFn make_engine(std::string_view name, EngineOptions opts = {}) {
  if (name == "brute") return [](const GdString& t, const Pattern& p) { return match_bruteforce_report(t, p); };
  if (name == "threads") return [](const GdString& t, const Pattern& p) { return match_threads(t, p); };
  if (name == "grover-ideal")
    return [](const GdString& t, const Pattern& p) { return smgd_quantum(t, p, SimMode::ideal()); };
  if (name == "grover-sampled")
    return [opts](const GdString& t, const Pattern& p) {
      return smgd_quantum(t, p, SimMode::sampled(opts.seed, opts.boost));
    };
  throw ArgumentError("unknown engine: " + std::string(name));
}

inline nlohmann::json ledger_json(const QueryLedger& l) {
  return {
      {"g1_calls", l.g1_calls},
      {"g2_calls", l.g2_calls},
      {"g3_calls", l.g3_calls},
      {"substring_outer_calls", l.substring_outer_calls},
      {"substring_inner_calls", l.substring_inner_calls},
      {"char_queries", l.char_queries},
      {"simulator_evaluations", l.simulator_evaluations},
  };
}

/// Report document, schema_version 1 (documented in README.md).
inline nlohmann::json report_json(std::string_view engine, const GdString& t, const Pattern& p, const MatchReport& r) {
  nlohmann::json j;
  j["schema_version"] = 1u;
  j["engine"] = engine;
  j["matched"] = r.matched;
  j["witnesses"] = nlohmann::json::array();
  for (auto h : r.witnesses) j["witnesses"].push_back(h);
  j["substring_hit"] = r.substring_hit;
  if (r.occurrence) {
    nlohmann::json segs = nlohmann::json::array();
    for (std::size_t x = 0; x < r.occurrence->choices.size(); ++x)
      segs.push_back({{"segment", r.occurrence->first_segment + x + 1}, {"string", r.occurrence->choices[x] + 1}});
    j["occurrence"] = {{"start_column", r.occurrence->start_column},
                       {"end_column", r.occurrence->end_column},
                       {"segments", segs}};
  } else {
    j["occurrence"] = nullptr;
  }
  const Metrics mt = metrics(t);
  j["metrics"] = {{"n", mt.n}, {"N", mt.N}, {"W", mt.W}, {"cardinality", mt.cardinality}};
  j["ledger"] = r.ledger ? ledger_json(*r.ledger) : nlohmann::json(nullptr);
  const ComplexityReport c = complexity_report(t, p);
  j["complexity"] = {{"sum_sqrt", c.sum_sqrt},   {"bound_rhs", c.bound_rhs}, {"predicted_total", c.predicted_total},
                     {"holds", c.holds},         {"qubits", c.qubits},       {"qubit_formula", kQubitFormula}};
  return j;
}

/// Structural check of a report document; returns the first problem found.
inline std::optional<std::string> validate_report_json(const nlohmann::json& j) {
  auto need = [&](const nlohmann::json& obj, const char* key, auto pred, const char* what) -> std::optional<std::string> {
    if (!obj.is_object() || !obj.contains(key)) return std::string("missing ") + key;
    if (!pred(obj.at(key))) return std::string(key) + " must be " + what;
    return std::nullopt;
  };
  auto is_uint = [](const nlohmann::json& v) { return v.is_number_unsigned(); };
  auto is_bool = [](const nlohmann::json& v) { return v.is_boolean(); };
  auto is_num = [](const nlohmann::json& v) { return v.is_number(); };
  auto is_str = [](const nlohmann::json& v) { return v.is_string(); };

  if (auto e = need(j, "schema_version", is_uint, "an unsigned integer")) return e;
  if (j["schema_version"] != 1) return "schema_version must be 1";
  if (auto e = need(j, "engine", is_str, "a string")) return e;
  if (!is_engine_name(j["engine"].get<std::string>())) return "unknown engine";
  if (auto e = need(j, "matched", is_bool, "a boolean")) return e;
  if (auto e = need(j, "substring_hit", is_bool, "a boolean")) return e;
  if (auto e = need(j, "witnesses", [](const nlohmann::json& v) { return v.is_array(); }, "an array")) return e;
  for (const auto& w : j["witnesses"])
    if (!w.is_number_unsigned()) return "witnesses must hold unsigned integers";
  if (!j.contains("occurrence")) return "missing occurrence";
  if (!j["occurrence"].is_null()) {
    const auto& o = j["occurrence"];
    if (auto e = need(o, "start_column", is_uint, "an unsigned integer")) return e;
    if (auto e = need(o, "end_column", is_uint, "an unsigned integer")) return e;
    if (auto e = need(o, "segments", [](const nlohmann::json& v) { return v.is_array(); }, "an array")) return e;
  }
  for (const char* key : {"n", "N", "W", "cardinality"})
    if (auto e = need(j["metrics"], key, is_uint, "an unsigned integer")) return e;
  if (!j.contains("ledger")) return "missing ledger";
  if (!j["ledger"].is_null())
    for (const char* key : {"g1_calls", "g2_calls", "g3_calls", "substring_outer_calls", "substring_inner_calls",
                            "char_queries", "simulator_evaluations"})
      if (auto e = need(j["ledger"], key, is_uint, "an unsigned integer")) return e;
  for (const char* key : {"sum_sqrt", "bound_rhs", "predicted_total"})
    if (auto e = need(j["complexity"], key, is_num, "a number")) return e;
  if (auto e = need(j["complexity"], "holds", is_bool, "a boolean")) return e;
  if (auto e = need(j["complexity"], "qubits", is_uint, "an unsigned integer")) return e;
  if (auto e = need(j["complexity"], "qubit_formula", is_str, "a string")) return e;
  if (j["matched"].get<bool>() && j["engine"] != "brute" && j["witnesses"].empty())
    return "matched thread engines must report a witness";
  return std::nullopt;
}

}  // namespace gdmatch
