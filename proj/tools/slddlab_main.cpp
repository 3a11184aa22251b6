// Copyright 2026 The slddlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "slddlab/codes.hpp"
#include "slddlab/ddgs.hpp"
#include "slddlab/errors.hpp"
#include "slddlab/sequences.hpp"
#include "slddlab/verifier.hpp"

using namespace sldd;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefusal = 3;

json ddgs_to_json(const DdgsResult &d) {
  json j;
  j["kind"] = to_string(d.kind);
  j["source"] = d.source;
  j["n_qubits"] = d.n_qubits();
  j["size"] = d.size();
  j["generators"] = json::array();
  for (const auto &g : d.omega.generators())
    j["generators"].push_back(g.str());
  return j;
}

json plan_to_json(const DomainPlan &p) {
  json j;
  j["k_total"] = p.k_total;
  j["base"] = {{"n", p.base_n}, {"k", p.base_k}, {"r", p.base_r}};
  j["family"] = to_string(p.family);
  j["order"] = p.order;
  j["budget_exponent"] = p.budget_exponent;
  j["generator_budget"] = p.generator_budget.str();
  j["levels"] = p.levels;
  j["domain_size_logical"] = p.domain_size_logical.str();
  j["domain_physical_qubits"] = p.domain_physical_qubits.str();
  j["domain_count"] = p.domain_count.str();
  j["omega_size_per_domain"] = p.omega_size_per_domain.str();
  j["cost_per_domain"] = p.cost_per_domain.str();
  j["within_budget"] = p.within_budget;
  return j;
}

CodeSpec code_from_options(const std::string &name, std::size_t param) {
  return catalog(name, param);
}

/// Resolve the DDGS requested by the shared --code/--full-pauli/--cat
/// options (plus --concat for codes).
DdgsResult resolve_ddgs(const std::string &code_name, std::size_t code_param,
                        std::size_t full_pauli_n, std::size_t cat_a,
                        std::size_t concat_levels) {
  const int picked = (!code_name.empty() ? 1 : 0) + (full_pauli_n ? 1 : 0) +
                     (cat_a ? 1 : 0);
  if (picked != 1)
    throw CLI::ValidationError(
        "pick exactly one of --code, --full-pauli, --cat");
  if (!code_name.empty()) {
    const auto code = code_from_options(code_name, code_param);
    if (concat_levels > 1)
      return concatenated_sldd_ddgs(concatenate(code, concat_levels));
    return sldd_ddgs(code);
  }
  if (full_pauli_n)
    return full_pauli_ddgs(full_pauli_n);
  return DdgsResult{cat_state_stabilizers(cat_a), DdgsKind::custom,
                    "cat(" + std::to_string(cat_a) + ")"};
}

void emit(const json &j, bool as_json, const std::string &table) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table;
}

int cmd_catalog(bool as_json, const std::string &emit_name) {
  if (!emit_name.empty()) {
    std::size_t param = 0;
    std::string name = emit_name;
    const auto paren = emit_name.find('(');
    if (paren != std::string::npos) {
      name = emit_name.substr(0, paren);
      param = std::stoul(emit_name.substr(paren + 1));
    }
    std::cout << format_code_file(catalog(name, param));
    return kExitPass;
  }
  json rows = json::array();
  for (const auto &code : catalog_all()) {
    const auto omega = sldd_ddgs(code);
    rows.push_back({{"name", code.name},
                    {"n", code.n},
                    {"k", code.k},
                    {"r", code.r},
                    {"d", code.d},
                    {"Q", code.q_count()},
                    {"sldd_size", omega.size()},
                    {"full_pauli_size", 2 * code.n}});
  }
  // the table is a view of the same records
  std::ostringstream os;
  os << std::left << std::setw(16) << "name" << std::setw(5) << "n"
     << std::setw(5) << "k" << std::setw(5) << "r" << std::setw(5) << "d"
     << std::setw(5) << "Q" << std::setw(8) << "|SLDD|" << std::setw(10)
     << "|P_n|" << "\n";
  for (const auto &row : rows)
    os << std::left << std::setw(16) << row["name"].get<std::string>()
       << std::setw(5) << row["n"].get<std::size_t>() << std::setw(5)
       << row["k"].get<std::size_t>() << std::setw(5)
       << row["r"].get<std::size_t>() << std::setw(5)
       << row["d"].get<std::size_t>() << std::setw(5)
       << row["Q"].get<std::size_t>() << std::setw(8)
       << row["sldd_size"].get<std::size_t>() << std::setw(10)
       << row["full_pauli_size"].get<std::size_t>() << "\n";
  emit(rows, as_json, os.str());
  return kExitPass;
}

int cmd_validate(const std::string &path, bool as_json) {
  std::ifstream in(path);
  if (!in)
    throw CLI::ValidationError("cannot open '" + path + "'");
  try {
    const auto code = parse_code_file(in);
    json j = {{"file", path}, {"name", code.name}, {"valid", true}};
    emit(j, as_json, "OK: " + code.name + " [[" + std::to_string(code.n) +
                         "," + std::to_string(code.k) + "," +
                         std::to_string(code.r) + "," +
                         std::to_string(code.d) + "]]\n");
    return kExitPass;
  } catch (const std::invalid_argument &e) {
    const std::string what = e.what();
    json j = {{"file", path}, {"valid", false}, {"error", what}};
    emit(j, as_json, what + "\n");
    return what.find("validation") != std::string::npos ? kExitFail
                                                        : kExitUsage;
  }
}

int cmd_cost(const std::string &code_name, std::size_t code_param,
             std::size_t levels, const std::string &family_str,
             std::size_t order, bool as_json) {
  const auto code = code_from_options(code_name, code_param);
  const CostModel model{family_from_string(family_str), order};
  const auto counts = count_parameters(code.n, code.k, code.r, levels);
  const BigInt full_exp = 2 * counts.n_R;
  const BigInt c_sldd = boost::multiprecision::pow(
      model.f_of_n(), static_cast<unsigned>(counts.omega_size));
  const BigInt c_full = boost::multiprecision::pow(
      model.f_of_n(), static_cast<unsigned>(full_exp));
  const BigInt g = boost::multiprecision::gcd(counts.omega_size, full_exp);

  json j;
  j["code"] = code.name;
  j["levels"] = levels;
  j["family"] = to_string(model.family);
  j["order"] = order;
  j["f_of_n"] = model.f_of_n().str();
  j["omega_size_sldd"] = counts.omega_size.str();
  j["omega_size_full_pauli"] = full_exp.str();
  j["cost_sldd"] = c_sldd.str();
  j["cost_full_pauli"] = c_full.str();
  const BigInt ratio_num = full_exp / g;
  const BigInt ratio_den = counts.omega_size / g;
  j["exponent_ratio"] = {ratio_num.str(), ratio_den.str()};

  std::ostringstream os;
  os << code.name << " R=" << levels << " " << to_string(model.family)
     << " N=" << order << "\n"
     << "  |SLDD| = " << counts.omega_size.str()
     << "   cost = " << c_sldd.str() << "\n"
     << "  |P_n|  = " << full_exp.str() << "   cost = " << c_full.str()
     << "\n"
     << "  cost_full = cost_sldd^(" << ratio_num.str() << "/"
     << ratio_den.str() << ")\n";
  emit(j, as_json, os.str());
  return kExitPass;
}

int cmd_ddgs(const std::string &code_name, std::size_t code_param,
             std::size_t full_pauli_n, std::size_t cat_a, std::size_t levels,
             bool as_json) {
  const auto d =
      resolve_ddgs(code_name, code_param, full_pauli_n, cat_a, levels);
  const auto j = ddgs_to_json(d);
  std::ostringstream os;
  os << to_string(d.kind) << " (" << d.source << "), " << d.size()
     << " generators on " << d.n_qubits() << " qubits\n";
  for (const auto &g : d.omega.generators())
    os << "  " << g.str() << "\n";
  emit(j, as_json, os.str());
  return kExitPass;
}

int cmd_sequence(const std::string &code_name, std::size_t code_param,
                 std::size_t full_pauli_n, std::size_t cat_a,
                 std::size_t levels, const std::string &family_str,
                 std::size_t order, const std::string &out_path) {
  const auto omega =
      resolve_ddgs(code_name, code_param, full_pauli_n, cat_a, levels);
  const auto family = family_from_string(family_str);
  const auto seq = family == SequenceFamily::CDD
                       ? cdd_sequence(omega, order)
                       : nudd_sequence(omega, order);
  const auto text = sequence_to_json(seq);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out)
      throw CLI::ValidationError("cannot write '" + out_path + "'");
    out << text << "\n";
    std::cerr << "wrote " << out_path << " (" << seq.interval_count()
              << " intervals)\n";
  }
  return kExitPass;
}

struct VerifyConfig {
  std::string preset;
  std::string code_name;
  std::size_t code_param = 0;
  std::size_t full_pauli_n = 0;
  std::size_t cat_a = 0;
  std::size_t concat_levels = 1;
  std::vector<std::string> custom_omega; // explicit generator strings
  std::size_t n_sys_override = 0;
  std::string family = "CDD";
  std::size_t order = 1;
  bool identity = false; // no pulses: baseline run
  std::size_t n_bath = 1;
  std::size_t locality = 1;
  double j_norm = 1.0;
  std::uint64_t seed = 12345;
  double t_min = 1e-3, t_max = 1e-1;
  std::size_t points = 6;
  std::size_t target_order = 0;
  bool attach_code = false; // syndrome tracking against --code
  bool serial = false;
  std::string out_prefix;
};

void apply_preset(VerifyConfig &cfg) {
  if (cfg.preset == "echo-n1") {
    cfg.full_pauli_n = 0;
    cfg.cat_a = 0;
    cfg.code_name.clear();
    cfg.identity = false;
    cfg.family = "CDD";
    cfg.order = 1;
    cfg.n_bath = 1;
    cfg.locality = 1;
    cfg.target_order = 1;
    cfg.custom_omega = {"X"};
    cfg.n_sys_override = 1;
  } else if (cfg.preset == "rep3-sldd-cdd1") {
    cfg.code_name = "repetition";
    cfg.code_param = 3;
    cfg.family = "CDD";
    cfg.order = 1;
    cfg.n_bath = 1;
    cfg.locality = 2;
    cfg.target_order = 1;
    cfg.attach_code = true;
  } else if (cfg.preset == "identity-baseline") {
    cfg.identity = true;
    cfg.n_bath = 1;
    cfg.locality = 1;
    cfg.target_order = 1;
    cfg.custom_omega = {"X", "Z"};
    cfg.n_sys_override = 1;
  } else {
    throw CLI::ValidationError("unknown preset '" + cfg.preset + "'");
  }
}

int cmd_verify(VerifyConfig cfg, bool as_json) {
  if (!cfg.preset.empty())
    apply_preset(cfg);

  DdgsResult omega{GeneratorSet(0), DdgsKind::custom, ""};
  std::optional<CodeSpec> code;
  std::size_t n_sys = 0;
  if (!cfg.custom_omega.empty()) {
    std::vector<PauliOperator> gens;
    for (const auto &s : cfg.custom_omega)
      gens.push_back(PauliOperator::parse(s));
    n_sys = cfg.n_sys_override ? cfg.n_sys_override : gens[0].n_qubits();
    omega = DdgsResult{GeneratorSet::from(n_sys, gens), DdgsKind::custom,
                       "custom"};
  } else {
    omega = resolve_ddgs(cfg.code_name, cfg.code_param, cfg.full_pauli_n,
                         cfg.cat_a, cfg.concat_levels);
    n_sys = omega.n_qubits();
    if (cfg.attach_code && !cfg.code_name.empty() && cfg.concat_levels <= 1)
      code = code_from_options(cfg.code_name, cfg.code_param);
  }

  const auto model =
      random_noise(n_sys, cfg.n_bath, cfg.locality, cfg.j_norm, cfg.seed);
  const auto family = family_from_string(cfg.family);
  PulseSequence seq;
  if (cfg.identity)
    seq = identity_sequence(n_sys);
  else
    seq = family == SequenceFamily::CDD ? cdd_sequence(omega, cfg.order)
                                        : nudd_sequence(omega, cfg.order);

  const auto grid = log_spaced(cfg.t_min, cfg.t_max, cfg.points);
  const auto rep = decoupling_order_fit(
      seq, model, omega, grid, code, cfg.target_order,
      cfg.serial ? ExecPolicy::serial : ExecPolicy::parallel);

  const auto jtext = report_to_json(rep);
  if (!cfg.out_prefix.empty()) {
    std::ofstream jf(cfg.out_prefix + ".json");
    std::ofstream cf(cfg.out_prefix + ".csv");
    if (!jf || !cf)
      throw CLI::ValidationError("cannot write outputs at prefix '" +
                                 cfg.out_prefix + "'");
    jf << jtext << "\n";
    cf << report_to_csv(rep);
  }
  if (as_json) {
    std::cout << jtext << "\n";
  } else {
    std::cout << "slope " << rep.fitted_slope << " (target >= "
              << static_cast<double>(rep.target_order + 1) - 0.35
              << "), baseline " << rep.baseline_slope << ", intervals "
              << rep.interval_count << "\n";
    if (!rep.code_name.empty())
      std::cout << "leakage slope " << rep.leakage_slope
                << ", max H_0 leakage "
                << *std::max_element(rep.h0_leakage.begin(),
                                     rep.h0_leakage.end())
                << "\n";
    std::cout << (rep.slope_pass && rep.leakage_pass ? "PASS" : "FAIL")
              << "\n";
  }
  return rep.slope_pass && rep.leakage_pass ? kExitPass : kExitFail;
}

int cmd_plan(std::size_t k_total, std::size_t n, std::size_t k, std::size_t r,
             const std::string &family_str, std::size_t order, std::size_t p,
             bool as_json) {
  const CostModel model{family_from_string(family_str), order};
  const auto plan = plan_domains(k_total, n, k, r, model, p);
  const auto j = plan_to_json(plan);
  std::ostringstream os;
  os << "k_total=" << plan.k_total << " base=[[" << n << "," << k << "," << r
     << "]] " << to_string(model.family) << " N=" << order << " p=" << p
     << "\n"
     << "  generator budget W = " << plan.generator_budget.str() << "\n";
  if (plan.levels == 0)
    os << "  infeasible: even R=1 needs "
       << plan.omega_size_per_domain.str() << " generators\n";
  else
    os << "  R = " << plan.levels << ", domain = "
       << plan.domain_size_logical.str() << " logical / "
       << plan.domain_physical_qubits.str() << " physical qubits\n"
       << "  domains = " << plan.domain_count.str()
       << ", |omega| = " << plan.omega_size_per_domain.str()
       << ", cost = " << plan.cost_per_domain.str() << "\n";
  os << (plan.within_budget ? "  within budget\n" : "  over budget\n");
  emit(j, as_json, os.str());
  return kExitPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"slddlab: DD generator-set planning and numerical "
               "verification for stabilizer and subsystem codes"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // catalog
  auto *catalog_cmd = app.add_subcommand("catalog", "list the code catalog");
  std::string emit_name;
  catalog_cmd->add_option("--emit", emit_name,
                          "print one catalog code in the code-file format, "
                          "e.g. steane or bacon_shor(3)");

  // validate
  auto *validate_cmd =
      app.add_subcommand("validate", "check a code definition file");
  std::string validate_path;
  validate_cmd->add_option("file", validate_path, "code file")->required();

  // shared DDGS selection options
  std::string code_name;
  std::size_t code_param = 0, full_pauli_n = 0, cat_a = 0, levels = 1;
  auto add_ddgs_opts = [&](CLI::App *cmd) {
    cmd->add_option("--code", code_name,
                    "catalog code (repetition|five_qubit|steane|"
                    "four_two_two|bacon_shor)");
    cmd->add_option("--param", code_param,
                    "code parameter (n for repetition, m for bacon_shor)");
    cmd->add_option("--full-pauli", full_pauli_n, "bare register of n qubits");
    cmd->add_option("--cat", cat_a, "cat state on a qubits");
    cmd->add_option("--concat", levels, "concatenation levels (codes only)");
  };

  auto *ddgs_cmd = app.add_subcommand("ddgs", "construct a DD generator set");
  add_ddgs_opts(ddgs_cmd);

  // cost
  auto *cost_cmd =
      app.add_subcommand("cost", "exact SLDD vs full-Pauli sequence cost");
  std::string cost_code;
  std::size_t cost_param = 0, cost_levels = 1, cost_order = 1;
  std::string cost_family = "CDD";
  cost_cmd->add_option("--code", cost_code, "catalog code")->required();
  cost_cmd->add_option("--param", cost_param, "code parameter");
  cost_cmd->add_option("--concat", cost_levels, "concatenation levels");
  cost_cmd->add_option("--family", cost_family, "CDD or NUDD");
  cost_cmd->add_option("--order", cost_order, "decoupling order N");

  // sequence
  auto *seq_cmd = app.add_subcommand("sequence", "emit a pulse schedule");
  std::string seq_family = "CDD", seq_out;
  std::size_t seq_order = 1;
  add_ddgs_opts(seq_cmd);
  seq_cmd->add_option("--family", seq_family, "CDD or NUDD");
  seq_cmd->add_option("--order", seq_order, "decoupling order N");
  seq_cmd->add_option("--out", seq_out, "output file (default stdout)");

  // verify
  auto *verify_cmd = app.add_subcommand(
      "verify", "simulate a schedule and fit the decoupling order");
  VerifyConfig vcfg;
  std::string config_path;
  verify_cmd->add_option("--preset", vcfg.preset,
                         "echo-n1 | rep3-sldd-cdd1 | identity-baseline");
  verify_cmd->add_option("--config", config_path,
                         "JSON config file (overrides other flags)");
  verify_cmd->add_option("--code", vcfg.code_name, "catalog code for SLDD");
  verify_cmd->add_option("--param", vcfg.code_param, "code parameter");
  verify_cmd->add_option("--full-pauli", vcfg.full_pauli_n, "bare register");
  verify_cmd->add_option("--cat", vcfg.cat_a, "cat state DDGS");
  verify_cmd->add_option("--concat", vcfg.concat_levels, "levels");
  verify_cmd->add_option("--family", vcfg.family, "CDD or NUDD");
  verify_cmd->add_option("--order", vcfg.order, "decoupling order N");
  verify_cmd->add_flag("--identity", vcfg.identity, "no pulses (baseline)");
  verify_cmd->add_option("--n-bath", vcfg.n_bath, "bath qubits");
  verify_cmd->add_option("--locality", vcfg.locality, "max system support");
  verify_cmd->add_option("--j-norm", vcfg.j_norm, "Hamiltonian norm");
  verify_cmd->add_option("--seed", vcfg.seed, "noise seed");
  verify_cmd->add_option("--t-min", vcfg.t_min, "grid start");
  verify_cmd->add_option("--t-max", vcfg.t_max, "grid end");
  verify_cmd->add_option("--points", vcfg.points, "grid points");
  verify_cmd->add_option("--target-order", vcfg.target_order,
                         "slope target (default: sequence order)");
  verify_cmd->add_flag("--track-code", vcfg.attach_code,
                       "record syndrome leakage against --code");
  verify_cmd->add_flag("--serial", vcfg.serial, "serial reference kernels");
  verify_cmd->add_option("--out", vcfg.out_prefix,
                         "output prefix for .json/.csv");
  verify_cmd->add_option("--omega", vcfg.custom_omega,
                         "explicit generator strings, e.g. --omega X Z");
  verify_cmd->add_option("--n-sys", vcfg.n_sys_override,
                         "system qubits when --omega is used");

  // plan
  auto *plan_cmd = app.add_subcommand(
      "plan", "maximal domain size under a polynomial cost budget");
  std::size_t plan_ktotal = 0, plan_n = 0, plan_k = 1, plan_r = 0,
              plan_order = 1, plan_p = 1;
  std::string plan_family = "CDD";
  plan_cmd->add_option("--k-total", plan_ktotal, "total logical qubits")
      ->required();
  plan_cmd->add_option("--n", plan_n, "base code n")->required();
  plan_cmd->add_option("--k", plan_k, "base code k");
  plan_cmd->add_option("--r", plan_r, "base code r");
  plan_cmd->add_option("--family", plan_family, "CDD or NUDD");
  plan_cmd->add_option("--order", plan_order, "decoupling order N");
  plan_cmd->add_option("--budget-exponent", plan_p, "polynomial exponent p");

  try {
    app.parse(argc, argv);
    if (catalog_cmd->parsed())
      return cmd_catalog(as_json, emit_name);
    if (validate_cmd->parsed())
      return cmd_validate(validate_path, as_json);
    if (ddgs_cmd->parsed())
      return cmd_ddgs(code_name, code_param, full_pauli_n, cat_a, levels,
                      as_json);
    if (cost_cmd->parsed())
      return cmd_cost(cost_code, cost_param, cost_levels, cost_family,
                      cost_order, as_json);
    if (seq_cmd->parsed())
      return cmd_sequence(code_name, code_param, full_pauli_n, cat_a, levels,
                          seq_family, seq_order, seq_out);
    if (verify_cmd->parsed()) {
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in)
          throw CLI::ValidationError("cannot open '" + config_path + "'");
        json j;
        in >> j;
        vcfg.preset = j.value("preset", vcfg.preset);
        vcfg.code_name = j.value("code", vcfg.code_name);
        vcfg.code_param = j.value("param", vcfg.code_param);
        vcfg.full_pauli_n = j.value("full_pauli", vcfg.full_pauli_n);
        vcfg.cat_a = j.value("cat", vcfg.cat_a);
        vcfg.concat_levels = j.value("concat", vcfg.concat_levels);
        vcfg.family = j.value("family", vcfg.family);
        vcfg.order = j.value("order", vcfg.order);
        vcfg.identity = j.value("identity", vcfg.identity);
        vcfg.n_bath = j.value("n_bath", vcfg.n_bath);
        vcfg.locality = j.value("locality", vcfg.locality);
        vcfg.j_norm = j.value("j_norm", vcfg.j_norm);
        vcfg.seed = j.value("seed", vcfg.seed);
        vcfg.t_min = j.value("t_min", vcfg.t_min);
        vcfg.t_max = j.value("t_max", vcfg.t_max);
        vcfg.points = j.value("points", vcfg.points);
        vcfg.target_order = j.value("target_order", vcfg.target_order);
        vcfg.attach_code = j.value("track_code", vcfg.attach_code);
        if (j.contains("omega"))
          for (const auto &s : j["omega"])
            vcfg.custom_omega.push_back(s.get<std::string>());
        vcfg.n_sys_override = j.value("n_sys", vcfg.n_sys_override);
        vcfg.out_prefix = j.value("out", vcfg.out_prefix);
      }
      return cmd_verify(vcfg, as_json);
    }
    if (plan_cmd->parsed())
      return cmd_plan(plan_ktotal, plan_n, plan_k, plan_r, plan_family,
                      plan_order, plan_p, as_json);
    return kExitUsage;
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  } catch (const resource_error &e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
