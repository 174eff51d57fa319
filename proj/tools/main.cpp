// dqc1: command-line front end over the core library. Every subcommand
// assembles one report object; rendering, output path and exit status are
// handled uniformly at the end so identical configs give identical bytes.
//
// Exit codes: 0 clean, 1 a scan found a counterexample, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dqc1/bounds.hpp"
#include "dqc1/branching_program.hpp"
#include "dqc1/formula.hpp"
#include "dqc1/nc1.hpp"
#include "dqc1/numeric.hpp"
#include "dqc1/partition.hpp"
#include "dqc1/perm_rep.hpp"
#include "dqc1/register_state.hpp"
#include "dqc1/subspace_family.hpp"
#include "json_io.hpp"

namespace {

using dqc1::cli::ordered_json;

struct GlobalOptions {
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
};

// Every report leads with the config that produced it.
ordered_json config_block(const std::string& command, const GlobalOptions& opts,
                          ordered_json params) {
  ordered_json c;
  c["command"] = command;
  c["params"] = std::move(params);
  c["format"] = opts.format;
  c["seed"] = opts.seed;
  return c;
}

void flatten(const ordered_json& node, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, path.empty() ? key : path + "." + key, rows);
    }
  } else if (node.is_array()) {
    size_t i = 0;
    for (const auto& value : node) {
      flatten(value, path + "[" + std::to_string(i++) + "]", rows);
    }
    if (node.empty()) rows.emplace_back(path, "[]");
  } else if (node.is_string()) {
    rows.emplace_back(path, node.get<std::string>());
  } else {
    rows.emplace_back(path, node.dump());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string render(const ordered_json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::ostringstream out;
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [key, value] : rows) {
      out << csv_escape(key) << "," << csv_escape(value) << "\n";
    }
  } else {  // table
    size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    for (const auto& [key, value] : rows) {
      out << key << std::string(width - key.size() + 2, ' ') << value << "\n";
    }
  }
  return out.str();
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return ordered_json::parse(in);
}

dqc1::Partition parse_shape(const std::string& text) { return dqc1::Partition::parse(text); }

// --perm grammar: "identity", or ';'-separated "swap:BITS,BITS" /
// "cycle:BITS,...,BITS" clauses composed left to right. Bitstrings are
// family indices (parity: the nonzero vector b; pointed: the (n-1)-bit
// pointer), short strings are left-padded with zeros.
std::vector<std::uint64_t> parse_index_permutation(const dqc1::SubspaceFamily& family,
                                                   const std::string& text) {
  const std::uint64_t count = family.index_count();
  std::vector<std::uint64_t> pi(count);
  for (std::uint64_t p = 0; p < count; ++p) pi[p] = p;
  if (text == "identity") return pi;

  std::stringstream clauses(text);
  std::string clause;
  while (std::getline(clauses, clause, ';')) {
    const auto colon = clause.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("permutation clause must be swap:... or cycle:...");
    }
    const std::string verb = clause.substr(0, colon);
    std::vector<std::uint64_t> positions;
    std::stringstream items(clause.substr(colon + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty index in permutation text");
      std::uint64_t value = 0;
      for (char ch : item) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("indices are bitstrings");
        value = (value << 1) | static_cast<std::uint64_t>(ch - '0');
      }
      // Position of the index value inside the family's index order.
      const std::uint64_t pos = family.kind() == dqc1::FamilyKind::parity ? value - 1 : value;
      if ((family.kind() == dqc1::FamilyKind::parity && value == 0) || pos >= count) {
        throw std::invalid_argument("index " + item + " is not in the family");
      }
      for (std::uint64_t seen : positions) {
        if (seen == pos) throw std::invalid_argument("repeated index " + item);
      }
      positions.push_back(pos);
    }
    if (verb == "swap") {
      if (positions.size() != 2) throw std::invalid_argument("swap needs exactly two indices");
    } else if (verb == "cycle") {
      if (positions.size() < 2) throw std::invalid_argument("cycle needs at least two indices");
    } else {
      throw std::invalid_argument("unknown permutation verb " + verb);
    }
    std::vector<std::uint64_t> step(count);
    for (std::uint64_t p = 0; p < count; ++p) step[p] = p;
    for (size_t i = 0; i < positions.size(); ++i) {
      step[positions[i]] = positions[(i + 1) % positions.size()];
    }
    for (std::uint64_t p = 0; p < count; ++p) pi[p] = step[pi[p]];
  }
  return pi;
}

dqc1::BigNat parse_bignat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("budget must be a decimal natural");
  }
  return dqc1::BigNat(text);
}

struct SelfTestContext {
  ordered_json checks = ordered_json::array();
  unsigned failures = 0;

  void record(const std::string& name, bool ok, const std::string& detail = "") {
    ordered_json row;
    row["name"] = name;
    row["ok"] = ok;
    if (!detail.empty()) row["detail"] = detail;
    checks.push_back(std::move(row));
    if (!ok) ++failures;
  }
};

void run_selftest(SelfTestContext& ctx, std::uint64_t seed) {
  using namespace dqc1;

  {
    const auto shape = Partition::parse("[4,4,2,1]");
    ctx.record("hook dimension of [4,4,2,1] is 1320", irrep_dimension(shape) == 1320);
    ctx.record("restriction of [4,4,2,1] has 3 shapes", restrictions(shape).size() == 3);
  }
  {
    bool ok = true;
    for (unsigned m = 1; m <= 10 && ok; ++m) {
      for (const auto& shape : partitions_of(m)) {
        BigNat sum = 0;
        for (const auto& res : restrictions(shape)) sum += irrep_dimension(res);
        if (sum != irrep_dimension(shape)) {
          ok = false;
          break;
        }
      }
    }
    ctx.record("restriction dimensions sum back (degree <= 10)", ok);
  }
  {
    bool ok = true;
    for (unsigned m = 4; m <= 12 && ok; ++m) {
      for (unsigned a = 0; 2 * a <= m; ++a) {
        const Partition two_row = a == 0 ? Partition({m}) : Partition({m - a, a});
        if (phi(a, m) != irrep_dimension(two_row)) {
          ok = false;
          break;
        }
      }
    }
    ctx.record("phi agrees with two-row dimensions (degree <= 12)", ok);
  }
  {
    bool ok = true;
    for (unsigned m = 4; m <= 12; ++m) ok = ok && check_rasala(m).violations.empty();
    ctx.record("first-row bound scan is clean (degree <= 12)", ok);
    ctx.record("row deletion bound scan is clean (degree 12)",
               check_shape_lemma(12).violations.empty());
  }
  {
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const auto f = random_formula(rng, 4, 5);
      const auto bp = compile_formula(f);
      const unsigned vars = std::max(f.num_vars(), 1u);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars) && ok; ++bits) {
        std::vector<bool> assignment(vars);
        for (unsigned i = 0; i < vars; ++i) assignment[i] = (bits >> i) & 1;
        const bool expect = eval_formula(f, assignment);
        const auto walked = eval_bp(bp, assignment);
        if (expect != (walked == bp.accept_perm)) ok = false;
        if (!expect && !walked.is_identity()) ok = false;
        const auto [p0, p1] = accept_probability(f, assignment);
        if (p1 != (expect ? Rational(0) : Rational(1, 4))) ok = false;
        (void)p0;
      }
    }
    ctx.record("programs and register runs match formula truth tables", ok);
  }
  {
    const auto parity_stats = overlap_stats(SubspaceFamily::parity(6));
    const auto pointed_stats = overlap_stats(SubspaceFamily::pointed(6));
    ctx.record("parity(6) max overlap ratio is 1/2", parity_stats.max_ratio == Rational(1, 2));
    ctx.record("pointed(6) max overlap ratio is 32/33",
               pointed_stats.max_ratio == Rational(32, 33));
  }
  {
    bool ok = true;
    for (unsigned m = 2; m <= 8; ++m) {
      for (auto variant : {PermRepVariant::coordinate, PermRepVariant::complement}) {
        const auto inst = build_perm_rep_instance(m, variant);
        ok = ok && generators_preserve_family(inst);
        ok = ok && check_bound_difference(inst, Rational(1)).violations == 0;
      }
    }
    ctx.record("pairwise dimension-drop bound is clean (M <= 8)", ok);
  }
  {
    TheoremParams params;
    params.n = 1024;
    params.k = 1;
    params.delta = Rational(1, 2);
    params.c = Rational(1);
    ctx.record("register calculator worked example gives 16",
               max_simulatable_qubits(params, TheoremMode::general).max_qubits == 16);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for one-clean-qubit register simulations, width-5 branching "
               "programs and symmetric-group dimension bounds"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--out", global.out_path, "Write the report to this file instead of stdout");
  app.add_option("--format", global.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--seed", global.seed, "Seed for randomized sweeps")->capture_default_str();

  ordered_json report;
  int violations_found = 0;

  // ---- partitions ----------------------------------------------------
  auto* partitions = app.add_subcommand("partitions", "Young diagram queries");
  partitions->require_subcommand(1);
  std::string shape_text;
  unsigned enum_degree = 0;

  auto* p_dim = partitions->add_subcommand("dim", "Irreducible dimension by hook lengths");
  p_dim->add_option("--shape", shape_text, "Partition, e.g. \"[4,4,2,1]\"")->required();
  p_dim->callback([&] {
    const auto shape = parse_shape(shape_text);
    report["config"] = config_block("partitions dim", global, {{"shape", shape_text}});
    report["shape"] = shape.to_string();
    report["dimension"] = dqc1::cli::nat_str(dqc1::irrep_dimension(shape));
  });

  auto* p_hooks = partitions->add_subcommand("hooks", "Hook lengths and their product");
  p_hooks->add_option("--shape", shape_text, "Partition")->required();
  p_hooks->callback([&] {
    const auto shape = parse_shape(shape_text);
    report["config"] = config_block("partitions hooks", global, {{"shape", shape_text}});
    report["shape"] = shape.to_string();
    report["hooks"] = dqc1::hook_lengths(shape);
    report["hook_product"] = dqc1::cli::nat_str(dqc1::hook_product(shape));
  });

  auto* p_conj = partitions->add_subcommand("conjugate", "Transpose of the diagram");
  p_conj->add_option("--shape", shape_text, "Partition")->required();
  p_conj->callback([&] {
    const auto shape = parse_shape(shape_text);
    report["config"] = config_block("partitions conjugate", global, {{"shape", shape_text}});
    report["shape"] = shape.to_string();
    report["conjugate"] = shape.conjugate().to_string();
  });

  auto* p_restrict = partitions->add_subcommand(
      "restrict", "Shapes after one corner deletion, with dimensions");
  p_restrict->add_option("--shape", shape_text, "Partition")->required();
  p_restrict->callback([&] {
    const auto shape = parse_shape(shape_text);
    report["config"] = config_block("partitions restrict", global, {{"shape", shape_text}});
    report["shape"] = shape.to_string();
    ordered_json rows = ordered_json::array();
    dqc1::BigNat sum = 0;
    for (const auto& res : dqc1::restrictions(shape)) {
      const auto dim = dqc1::irrep_dimension(res);
      sum += dim;
      ordered_json row;
      row["shape"] = res.to_string();
      row["dimension"] = dqc1::cli::nat_str(dim);
      rows.push_back(std::move(row));
    }
    report["restrictions"] = std::move(rows);
    report["dimension_sum"] = dqc1::cli::nat_str(sum);
  });

  auto* p_enum = partitions->add_subcommand("enum", "All partitions of a degree");
  p_enum->add_option("--M", enum_degree, "Degree, at most 40")
      ->required()
      ->check(CLI::Range(0u, 40u));
  p_enum->callback([&] {
    report["config"] = config_block("partitions enum", global, {{"M", enum_degree}});
    ordered_json shapes = ordered_json::array();
    for (const auto& shape : dqc1::partitions_of(enum_degree)) {
      shapes.push_back(shape.to_string());
    }
    report["count"] = shapes.size();
    report["shapes"] = std::move(shapes);
  });

  // ---- bounds --------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "Dimension bound scans and the register calculator");
  bounds->require_subcommand(1);
  unsigned degree = 0;
  std::string budget_text = "1";
  unsigned theorem_n = 1, theorem_k = 0;
  std::string delta_text = "1", c_text = "1", mode_text = "general";

  auto* b_rasala = bounds->add_subcommand("rasala", "First-row and boxed dimension bounds");
  b_rasala->add_option("--M", degree, "Degree, 4..30")->required()->check(CLI::Range(4u, 30u));
  b_rasala->callback([&] {
    report["config"] = config_block("bounds rasala", global, {{"M", degree}});
    const auto r = dqc1::check_rasala(degree);
    report.update(dqc1::cli::bound_report_json(r), true);
    violations_found += static_cast<int>(r.violations.size());
  });

  auto* b_phimin = bounds->add_subcommand("phimin", "Two-row bound minimizer per tail range");
  b_phimin->add_option("--M", degree, "Degree, 4..64")->required()->check(CLI::Range(4u, 64u));
  b_phimin->callback([&] {
    report["config"] = config_block("bounds phimin", global, {{"M", degree}});
    const auto r = dqc1::scan_phi_minimizer(degree);
    report.update(dqc1::cli::bound_report_json(r.report), true);
    report["crossover_a"] = r.crossover_a;
    report["fitted_c"] = dqc1::cli::json_number(r.fitted_c);
    violations_found += static_cast<int>(r.report.violations.size());
  });

  auto* b_longrow = bounds->add_subcommand("longrow", "Minimum dimension per boxed shape class");
  b_longrow->add_option("--M", degree, "Degree, 2..30")->required()->check(CLI::Range(2u, 30u));
  b_longrow->add_option("--budget", budget_text, "Dimension budget (decimal natural)")
      ->capture_default_str();
  b_longrow->callback([&] {
    report["config"] =
        config_block("bounds longrow", global, {{"M", degree}, {"budget", budget_text}});
    const auto r = dqc1::check_long_row_or_column(degree, parse_bignat(budget_text));
    report.update(dqc1::cli::long_row_json(r), true);
    violations_found += static_cast<int>(r.report.violations.size());
  });

  auto* b_shape = bounds->add_subcommand("shape", "Row deletion inequality scan");
  b_shape->add_option("--M", degree, "Degree, 3..30")->required()->check(CLI::Range(3u, 30u));
  b_shape->callback([&] {
    report["config"] = config_block("bounds shape", global, {{"M", degree}});
    const auto r = dqc1::check_shape_lemma(degree);
    report.update(dqc1::cli::bound_report_json(r), true);
    violations_found += static_cast<int>(r.violations.size());
  });

  auto* b_theorem = bounds->add_subcommand("theorem", "Largest register the overlap bound admits");
  b_theorem->add_option("--n", theorem_n, "Problem size")->required()
      ->check(CLI::Range(1u, 1000000000u));
  b_theorem->add_option("--k", theorem_k, "Clean qubits")->capture_default_str();
  b_theorem->add_option("--delta", delta_text, "Distinguishability margin in (0,1]")
      ->capture_default_str();
  b_theorem->add_option("--c", c_text, "Slack constant, positive rational")
      ->capture_default_str();
  b_theorem->add_option("--mode", mode_text, "representation or general")
      ->check(CLI::IsMember({"representation", "general"}))
      ->capture_default_str();
  b_theorem->callback([&] {
    report["config"] = config_block(
        "bounds theorem", global,
        {{"n", theorem_n}, {"k", theorem_k}, {"delta", delta_text}, {"c", c_text},
         {"mode", mode_text}});
    dqc1::TheoremParams params;
    params.n = theorem_n;
    params.k = theorem_k;
    params.delta = dqc1::parse_rational(delta_text);
    params.c = dqc1::parse_rational(c_text);
    const auto mode = mode_text == "representation" ? dqc1::TheoremMode::representation
                                                    : dqc1::TheoremMode::general;
    report.update(dqc1::cli::theorem_json(dqc1::max_simulatable_qubits(params, mode)), true);
  });

  // ---- compile (also reachable as `barrington compile`) ---------------
  std::string formula_text;
  auto add_compile = [&](CLI::App* parent, const std::string& command) {
    auto* sub = parent->add_subcommand("compile", "Formula to width-5 permutation program");
    sub->add_option("--formula", formula_text, "e.g. \"(x1&x2)\"")->required();
    sub->callback([&, command] {
      const auto f = dqc1::FormulaAst::parse(formula_text);
      const auto bp = dqc1::compile_formula(f);
      report["config"] = config_block(command, global, {{"formula", formula_text}});
      report["formula"] = f.to_string();
      report["depth"] = f.depth();
      report["length"] = bp.instructions.size();
      report.update(dqc1::cli::bp_json(bp), true);
    });
    return sub;
  };
  add_compile(&app, "compile");
  auto* barrington = app.add_subcommand("barrington", "Width-5 permutation programs");
  barrington->require_subcommand(1);
  add_compile(barrington, "barrington compile");

  // ---- sim -------------------------------------------------------------
  auto* sim = app.add_subcommand("sim", "One-clean-qubit register runs");
  sim->require_subcommand(1);
  std::string bp_path, assign_text;
  unsigned sim_n = 3, sim_k = 1, sim_measure = 1;

  auto* s_run = sim->add_subcommand("run", "Run a compiled program on a fresh register");
  s_run->add_option("--bp", bp_path, "Program JSON produced by compile")->required();
  s_run->add_option("--assign", assign_text, "Assignment, e.g. \"x1=1,x2=0\"")->required();
  s_run->add_option("--n", sim_n, "Register qubits (>= 3)")->capture_default_str();
  s_run->add_option("--k", sim_k, "Clean qubits")->capture_default_str();
  s_run->add_option("--measure", sim_measure, "Qubit to read out (1-based)")
      ->capture_default_str();
  s_run->callback([&] {
    const auto bp = dqc1::cli::bp_from_json(load_json_file(bp_path));
    const auto assignment = dqc1::parse_assignment(assign_text, bp.num_vars);
    auto state = dqc1::RegisterState::fresh(sim_n, sim_k);
    state = dqc1::run_bp(state, bp, assignment);
    const auto [p0, p1] = dqc1::measure(state, sim_measure);
    report["config"] = config_block(
        "sim run", global,
        {{"bp", bp_path}, {"assign", assign_text}, {"n", sim_n}, {"k", sim_k},
         {"measure", sim_measure}});
    report["p0"] = dqc1::cli::json_number(p0.convert_to<double>());
    report["p1"] = dqc1::cli::json_number(p1.convert_to<double>());
    report["exact"] = dqc1::format_rational(p0) + "," + dqc1::format_rational(p1);
  });

  // ---- encodings -------------------------------------------------------
  auto* encodings = app.add_subcommand("encodings", "Subspace family statistics and witnesses");
  encodings->require_subcommand(1);
  std::string kind_text = "parity", perm_text = "identity", variant_text = "coordinate";
  unsigned family_n = 4, perm_rep_m = 4;

  auto make_family = [&](const std::string& kind, unsigned n) {
    if (kind == "parity") return dqc1::SubspaceFamily::parity(n);
    if (kind == "pointed") return dqc1::SubspaceFamily::pointed(n);
    throw std::invalid_argument("kind must be parity or pointed");
  };

  auto* e_report = encodings->add_subcommand("report", "Pairwise overlap statistics");
  e_report->add_option("--kind", kind_text, "parity or pointed")
      ->check(CLI::IsMember({"parity", "pointed"}))
      ->capture_default_str();
  e_report->add_option("--n", family_n, "Bits, 2..15")->required()->check(CLI::Range(2u, 15u));
  e_report->callback([&] {
    report["config"] =
        config_block("encodings report", global, {{"kind", kind_text}, {"n", family_n}});
    const auto family = make_family(kind_text, family_n);
    report.update(dqc1::cli::overlap_stats_json(dqc1::overlap_stats(family)), true);
  });

  auto* e_witness = encodings->add_subcommand(
      "witness", "Basis permutation carrying the family along an index permutation");
  e_witness->add_option("--kind", kind_text, "parity or pointed")
      ->check(CLI::IsMember({"parity", "pointed"}))
      ->capture_default_str();
  e_witness->add_option("--n", family_n, "Bits, 2..20")->required()->check(CLI::Range(2u, 20u));
  e_witness->add_option("--perm", perm_text, "identity | swap:BITS,BITS | cycle:BITS,...")
      ->capture_default_str();
  e_witness->callback([&] {
    report["config"] = config_block(
        "encodings witness", global,
        {{"kind", kind_text}, {"n", family_n}, {"perm", perm_text}});
    const auto family = make_family(kind_text, family_n);
    const auto pi = parse_index_permutation(family, perm_text);
    const auto result = dqc1::permutability_witness(family, pi);
    report["family"] = family.label();
    switch (result.status) {
      case dqc1::WitnessStatus::found: report["status"] = "found"; break;
      case dqc1::WitnessStatus::none: report["status"] = "none"; break;
      case dqc1::WitnessStatus::undecided: report["status"] = "undecided"; break;
    }
    report["note"] = result.note;
    if (result.witness) {
      report["moved_strings"] = result.witness->moved().size();
      if (family.n() <= 10) {
        report["verified"] = dqc1::witness_carries_family(family, pi, *result.witness);
        report["verification"] = "full enumeration";
      } else {
        report["verification"] = "skipped (n > 10)";
      }
    }
  });

  auto* e_bounddiff = encodings->add_subcommand(
      "bounddiff", "Pairwise dimension-drop bound on coordinate subspace families");
  e_bounddiff->add_option("--M", perm_rep_m, "Subspace count, 2..12")
      ->required()
      ->check(CLI::Range(2u, 12u));
  e_bounddiff->add_option("--variant", variant_text, "coordinate or complement")
      ->check(CLI::IsMember({"coordinate", "complement"}))
      ->capture_default_str();
  e_bounddiff->add_option("--c", c_text, "Constant, positive rational")->capture_default_str();
  e_bounddiff->callback([&] {
    report["config"] = config_block(
        "encodings bounddiff", global,
        {{"M", perm_rep_m}, {"variant", variant_text}, {"c", c_text}});
    const auto variant = variant_text == "coordinate" ? dqc1::PermRepVariant::coordinate
                                                      : dqc1::PermRepVariant::complement;
    const auto inst = dqc1::build_perm_rep_instance(perm_rep_m, variant);
    report["generators_preserve_family"] = dqc1::generators_preserve_family(inst);
    report["generator_relations_hold"] = dqc1::generator_relations_hold_on_family(inst);
    const auto r = dqc1::check_bound_difference(inst, dqc1::parse_rational(c_text));
    report.update(dqc1::cli::bound_difference_json(r), true);
    violations_found += static_cast<int>(r.violations);
  });

  // ---- selftest ---------------------------------------------------------
  auto* selftest = app.add_subcommand("selftest", "Curated cross-module invariant battery");
  selftest->callback([&] {
    report["config"] = config_block("selftest", global, ordered_json::object());
    SelfTestContext ctx;
    run_selftest(ctx, global.seed);
    report["checks"] = std::move(ctx.checks);
    report["failures"] = ctx.failures;
    violations_found += static_cast<int>(ctx.failures);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = render(report, global.format);
  if (!global.out_path.empty()) {
    std::ofstream out(global.out_path);
    if (!out) {
      std::cerr << "error: cannot write " << global.out_path << "\n";
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return violations_found > 0 ? 1 : 0;
}
