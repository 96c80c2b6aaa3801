#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "gmsv/cross_validation.hpp"
#include "gmsv/error.hpp"
#include "gmsv/metrics.hpp"
#include "gmsv/miner.hpp"
#include "gmsv/stats.hpp"
#include "gmsv/topk.hpp"

namespace gmsv {

using Json = nlohmann::json;

inline constexpr const char* kReportVersion = "1.0.0";

/// Top-level report document: {"task", "config", "results", "seed", "version"}.
struct Report {
  std::string task;
  Json config = Json::object();
  Json results = Json::object();
  std::uint64_t seed = 0;
};

namespace detail {

// Rounds every float to 6 significant digits; NaN and infinities are rejected.
inline Json round_floats(const Json& j, const std::string& where) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw DataError("non-finite value in report at " + where);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = round_floats(it.value(), where + "/" + it.key());
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(round_floats(j[i], where + "/" + std::to_string(i)));
    return out;
  }
  return j;
}

}  // namespace detail

inline Json to_json(const TTestResult& r) {
  Json j{{"df", r.df}, {"n_per_group", r.n_per_group}, {"p_value", r.p_value}};
  if (std::isfinite(r.t)) j["t"] = r.t;
  else j["t"] = r.t > 0 ? "+inf" : "-inf";
  return j;
}

inline Json to_json(const MiningStats& s, bool with_time) {
  Json j{{"explored", s.explored}, {"pruned_subtrees", s.pruned_subtrees}};
  if (with_time) j["wall_seconds"] = s.wall_seconds;
  return j;
}

inline Json to_json(const DFSCode& c) {
  Json a = Json::array();
  for (const auto& e : c.edges) a.push_back({e.from, e.to, e.from_label, e.edge_label, e.to_label});
  return a;
}

inline Json to_json(const ScoredPattern& sp) {
  return {{"code", to_json(sp.pattern.code)},
          {"code_text", sp.pattern.code.to_string()},
          {"q", sp.q},
          {"qhat", sp.qhat},
          {"support", sp.pattern.support},
          {"edges", sp.pattern.code.size()}};
}

inline Json to_json(const BinaryMetrics& m) {
  return {{"accuracy", m.accuracy},
          {"precision", m.precision},
          {"recall", m.recall},
          {"f1", m.f1},
          {"precision_undefined", m.precision_undefined},
          {"recall_undefined", m.recall_undefined}};
}

inline Json to_json(const CVReport& r) {
  Json folds = Json::array();
  for (const auto& f : r.folds) {
    folds.push_back({{"fold", f.fold},
                     {"metrics", to_json(f.metrics)},
                     {"train_pos", f.train_pos},
                     {"train_neg", f.train_neg},
                     {"test_pos", f.test_pos},
                     {"test_neg", f.test_neg},
                     {"selected", f.selected}});
  }
  return {{"folds", folds}, {"mean", to_json(r.mean)}, {"fold_of", r.fold_of}, {"seed", r.seed}};
}

inline Json report_document(const Report& r) {
  Json doc{{"task", r.task}, {"config", r.config}, {"results", r.results}, {"seed", r.seed},
           {"version", kReportVersion}};
  return detail::round_floats(doc, "");
}

/// Sorted keys, floats at 6 significant digits, two-space indent, trailing newline.
inline std::string format_report(const Report& r) { return report_document(r).dump(2) + "\n"; }

inline void write_report(const std::filesystem::path& path, const Report& r) {
  const std::string text = format_report(r);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("write failed: " + path.string());
}

inline Json read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return Json::parse(in);
}

}  // namespace gmsv
