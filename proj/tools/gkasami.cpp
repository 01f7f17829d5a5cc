/*
 * Copyright 2026 The gkasami Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// gkasami: generation, correlation analysis and claim verification for the
// generalized Kasami families.
//
// Exit codes: 0 success, 1 validation failure or mismatch, 2 usage error or
// resource guard.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gkasami/claims.hpp"
#include "gkasami/correlation.hpp"
#include "gkasami/error.hpp"
#include "gkasami/families.hpp"
#include "gkasami/fieldeq.hpp"
#include "gkasami/theory.hpp"

namespace {

using namespace gkasami;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int n = 0;
  std::optional<int> k;
  std::string kind = "fk";
  std::string engine = "spectral";
  std::string format = "hex";
  std::string out;
  unsigned jobs = 1;
  std::string poly;
  bool force = false;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge:
    case ErrorCode::ParseError:
      return kExitUsage;
    default:
      return kExitMismatch;
  }
}

Field field_for(const RunConfig& cfg) {
  std::optional<std::uint32_t> poly;
  if (!cfg.poly.empty()) poly = poly_from_hex(cfg.poly);
  return make_field(cfg.n, poly);
}

int require_k(const RunConfig& cfg) {
  if (!cfg.k) throw Error(ErrorCode::ParseError, "--k is required");
  if (!k_is_valid(cfg.n, *cfg.k))
    throw Error(ErrorCode::InvalidK, "k = " + std::to_string(*cfg.k) + " violates the gcd condition for n = " +
                                         std::to_string(cfg.n) + " (need gcd(k, n) = " +
                                         ((cfg.n / 2) % 2 ? "2" : "1") + ")");
  return *cfg.k;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + cfg.out + "' for writing");
  f << text;
}

int cmd_field_info(const RunConfig& cfg) {
  const Field f = field_for(cfg);
  nlohmann::ordered_json j;
  j["n"] = f.n();
  j["poly"] = poly_to_hex(f.poly());
  j["size"] = f.size();
  j["order"] = f.order();
  j["subfield_size"] = f.subfield_size();
  j["beta"] = element_to_string(f, f.beta());
  std::vector<int> ks;
  for (int k = 1; k < f.n(); ++k)
    if (k_is_valid(f.n(), k)) ks.push_back(k);
  j["valid_k"] = ks;
  j["family_size"] = to_decimal(family_size(f.n()));
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

FamilyParams family_params(const RunConfig& cfg) {
  const Field f = field_for(cfg);
  const FamilyKind kind = family_kind_from_string(cfg.kind);
  if (kind == FamilyKind::GeneralizedFk) return {f, require_k(cfg), kind};
  if (cfg.k)
    std::cerr << "warning: --k is ignored for " << cfg.kind << "; using k = n/2 + 1 = " << f.half() + 1 << "\n";
  return {f, f.half() + 1, kind};
}

int cmd_family_gen(const RunConfig& cfg) {
  const auto fam = build_family(family_params(cfg));
  emit(cfg, export_family(fam, export_format_from_string(cfg.format)));
  std::cerr << "family size " << fam.size() << " (period " << fam.params.field.order() << ")\n";
  return 0;
}

int cmd_corr(const RunConfig& cfg) {
  const auto params = family_params(cfg);
  const Engine engine = engine_from_string(cfg.engine);
  if (params.field.n() > 10) throw Error(ErrorCode::TooLarge, "correlation is limited to n <= 10");
  const auto fam = build_family(params);
  const auto report = full_distribution(fam, engine, {cfg.jobs, cfg.force});
  const auto predicted = predicted_histogram(report);
  emit(cfg, report_json(report, predicted).dump(2) + "\n");
  return report_matches(report, predicted) ? 0 : kExitMismatch;
}

int cmd_verify(const RunConfig& cfg) {
  const Field f = field_for(cfg);
  const auto report = verify(f, require_k(cfg), {cfg.jobs, cfg.force});
  std::cerr << report.table();
  emit(cfg, report.to_json().dump(2) + "\n");
  return report.all_pass() ? 0 : kExitMismatch;
}

int cmd_code_weights(const RunConfig& cfg) {
  const Field f = field_for(cfg);
  const int k = require_k(cfg);
  const auto code = build_code(f, k, cfg.force);
  const auto predicted = predict("code_weights", f.n(), k).histogram;
  nlohmann::ordered_json j;
  j["n"] = f.n();
  j["k"] = k;
  j["length"] = code.length;
  j["dimension"] = code.dimension;
  j["weights"] = code.weights.entries_json();
  j["predicted"] = predicted.entries_json();
  auto dual = nlohmann::ordered_json::array();
  bool dual_zero = true;
  for (const auto& b : dual_low_weights(code, 3)) {
    dual.push_back(to_decimal(b));
    dual_zero = dual_zero && b == 0;
  }
  j["dual_low_weights"] = dual;
  const bool match = predicted == code.weights && dual_zero;
  j["match"] = match;
  emit(cfg, j.dump(2) + "\n");
  return match ? 0 : kExitMismatch;
}

int cmd_census(const RunConfig& cfg) {
  const Field f = field_for(cfg);
  const int k = require_k(cfg);
  CensusOptions opts;
  opts.force = cfg.force;
  opts.triple_scans = f.n() <= 6 || cfg.force;
  const auto c = census(f, k, opts);
  emit(cfg, c.to_json().dump(2) + "\n");
  return c.all_match() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Kasami sequence families: generation, correlation and verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_field_opts = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "field degree (even, 4..20)")->required();
    sub->add_option("--poly", cfg.poly, "defining polynomial as hex, e.g. 0x43");
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", cfg.k, "exponent k of x^{2^k+1}"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "write output to this path"); };
  auto add_force = [&](CLI::App* sub) { sub->add_flag("--force", cfg.force, "lift the resource guards"); };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", cfg.kind, "family kind")
        ->check(CLI::IsMember({"fk", "small-kasami", "large-kasami"}));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* field = app.add_subcommand("field", "field commands");
  field->require_subcommand(1);
  auto* field_info = field->add_subcommand("info", "describe GF(2^n) and its valid k");
  add_field_opts(field_info);
  add_out(field_info);

  auto* family = app.add_subcommand("family", "family commands");
  family->require_subcommand(1);
  auto* family_gen = family->add_subcommand("gen", "generate a sequence family");
  add_field_opts(family_gen);
  add_k(family_gen);
  add_kind(family_gen);
  family_gen->add_option("--format", cfg.format, "bits, hex or json")
      ->check(CLI::IsMember({"bits", "hex", "json"}));
  add_out(family_gen);

  auto* corr = app.add_subcommand("corr", "full correlation distribution of a family");
  add_field_opts(corr);
  add_k(corr);
  add_kind(corr);
  corr->add_option("--engine", cfg.engine, "brute or spectral")->check(CLI::IsMember({"brute", "spectral"}));
  add_jobs(corr);
  add_force(corr);
  add_out(corr);

  auto* verify_cmd = app.add_subcommand("verify", "check every closed form against exhaustive computation");
  add_field_opts(verify_cmd);
  add_k(verify_cmd);
  add_jobs(verify_cmd);
  add_force(verify_cmd);
  add_out(verify_cmd);

  auto* code = app.add_subcommand("code", "code commands");
  code->require_subcommand(1);
  auto* code_weights = code->add_subcommand("weights", "weight distribution and low dual weights");
  add_field_opts(code_weights);
  add_k(code_weights);
  add_force(code_weights);
  add_out(code_weights);

  auto* census_cmd = app.add_subcommand("census", "brute-force equation counts");
  add_field_opts(census_cmd);
  add_k(census_cmd);
  add_force(census_cmd);
  add_out(census_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (field_info->parsed()) return cmd_field_info(cfg);
    if (family_gen->parsed()) return cmd_family_gen(cfg);
    if (corr->parsed()) return cmd_corr(cfg);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
    if (code_weights->parsed()) return cmd_code_weights(cfg);
    if (census_cmd->parsed()) return cmd_census(cfg);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
