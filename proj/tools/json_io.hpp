#pragma once
// JSON bridges for the CLI. The core library stays serialization-free;
// everything here maps its types onto nlohmann::ordered_json with stable
// key order, exact integers as decimal strings, and doubles rounded to
// 12 significant digits so identical configs print identical bytes.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqc1/bounds.hpp"
#include "dqc1/branching_program.hpp"
#include "dqc1/numeric.hpp"
#include "dqc1/partition.hpp"
#include "dqc1/perm_rep.hpp"
#include "dqc1/subspace_family.hpp"

namespace dqc1::cli {

using ordered_json = nlohmann::ordered_json;

// Round-trips through %.12g so the JSON number is the rounded value.
inline ordered_json json_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return ordered_json::parse(buf);
}

inline std::string nat_str(const BigNat& v) { return v.str(); }

inline ordered_json perm5_json(const Perm5& p) {
  ordered_json arr = ordered_json::array();
  for (auto img : p.images()) arr.push_back(static_cast<unsigned>(img));
  return arr;
}

inline Perm5 perm5_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 5) {
    throw std::invalid_argument("permutation must be an array of 5 images");
  }
  std::array<std::uint8_t, 5> images{};
  for (size_t i = 0; i < 5; ++i) {
    const auto v = j[i].get<unsigned>();
    if (v < 1 || v > 5) throw std::invalid_argument("permutation images must lie in 1..5");
    images[i] = static_cast<std::uint8_t>(v);
  }
  return Perm5::from_images(images);
}

inline ordered_json bp_json(const PermBP& bp) {
  ordered_json j;
  j["num_vars"] = bp.num_vars;
  j["sigma"] = perm5_json(bp.accept_perm);
  ordered_json instructions = ordered_json::array();
  for (const auto& ins : bp.instructions) {
    ordered_json row;
    row["var"] = ins.var;
    row["p0"] = perm5_json(ins.if_zero);
    row["p1"] = perm5_json(ins.if_one);
    instructions.push_back(std::move(row));
  }
  j["instructions"] = std::move(instructions);
  return j;
}

inline PermBP bp_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("num_vars") || !j.contains("sigma") ||
      !j.contains("instructions")) {
    throw std::invalid_argument("program needs num_vars, sigma and instructions");
  }
  PermBP bp;
  bp.num_vars = j["num_vars"].get<unsigned>();
  if (bp.num_vars == 0) throw std::invalid_argument("num_vars must be positive");
  bp.accept_perm = perm5_from_json(j["sigma"]);
  for (const auto& row : j["instructions"]) {
    BpInstruction ins;
    ins.var = row.at("var").get<unsigned>();
    if (ins.var == 0 || ins.var > bp.num_vars) {
      throw std::invalid_argument("instruction variable out of range");
    }
    ins.if_zero = perm5_from_json(row.at("p0"));
    ins.if_one = perm5_from_json(row.at("p1"));
    bp.instructions.push_back(std::move(ins));
  }
  return bp;
}

inline ordered_json bound_report_json(const BoundReport& r) {
  ordered_json j;
  j["label"] = r.scan_label;
  j["range"] = ordered_json::array({r.m_lo, r.m_hi});
  j["checked_count"] = r.checked_count;
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json row;
    row["shape"] = v.shape.to_string();
    row["required"] = nat_str(v.required);
    row["actual"] = nat_str(v.actual);
    violations.push_back(std::move(row));
  }
  j["violations"] = std::move(violations);
  ordered_json minima = ordered_json::array();
  for (const auto& m : r.minima) {
    ordered_json row;
    row["label"] = m.label;
    row["shape"] = m.shape.to_string();
    row["dimension"] = nat_str(m.dimension);
    minima.push_back(std::move(row));
  }
  j["minima"] = std::move(minima);
  j["notes"] = r.notes;
  return j;
}

inline ordered_json long_row_json(const LongRowReport& r) {
  ordered_json j = bound_report_json(r.report);
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.classes) {
    ordered_json row;
    row["a"] = c.a;
    row["class_size"] = c.class_size;
    row["minimizer"] = c.minimizer.to_string();
    row["min_dimension"] = nat_str(c.min_dimension);
    row["exceeds_budget"] = c.exceeds_budget;
    row["meets_pow2"] = c.meets_pow2;
    classes.push_back(std::move(row));
  }
  j["classes"] = std::move(classes);
  j["a_star"] = r.a_star;
  return j;
}

inline ordered_json theorem_json(const TheoremReport& r) {
  ordered_json j;
  ordered_json params;
  params["n"] = r.params.n;
  params["k"] = r.params.k;
  params["delta"] = format_rational(r.params.delta);
  params["c"] = format_rational(r.params.c);
  j["params"] = std::move(params);
  j["mode"] = r.mode == TheoremMode::representation ? "representation" : "general";
  j["threshold"] = format_rational(r.threshold);
  j["max_qubits"] = r.max_qubits;
  j["notes"] = r.notes;
  return j;
}

inline ordered_json overlap_stats_json(const OverlapStats& s) {
  ordered_json j;
  j["family"] = s.family_label;
  j["pair_count"] = s.pair_count;
  j["max_ratio"] = format_rational(s.max_ratio);
  j["max_ratio_decimal"] = json_number(s.max_ratio.convert_to<double>());
  j["min_ratio"] = format_rational(s.min_ratio);
  j["min_ratio_decimal"] = json_number(s.min_ratio.convert_to<double>());
  ordered_json hist = ordered_json::array();
  for (const auto& [size, pairs] : s.intersection_histogram) {
    ordered_json row;
    row["size"] = size;
    row["pairs"] = pairs;
    hist.push_back(std::move(row));
  }
  j["intersection_histogram"] = std::move(hist);
  return j;
}

inline ordered_json bound_difference_json(const BoundDifferenceReport& r) {
  ordered_json j;
  j["label"] = r.label;
  j["M"] = r.M;
  j["variant"] = perm_rep_variant_name(r.variant);
  j["c"] = format_rational(r.c);
  j["pair_count"] = r.pair_count;
  j["violations"] = r.violations;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : r.pairs) {
    ordered_json row;
    row["i"] = p.i;
    row["j"] = p.j;
    row["lhs"] = p.lhs;
    row["rhs"] = json_number(p.rhs);
    row["holds"] = p.holds;
    pairs.push_back(std::move(row));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

}  // namespace dqc1::cli
