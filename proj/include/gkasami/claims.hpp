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

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gkasami/gf2n.hpp"

namespace gkasami {

/// One checked statement: a closed form next to its exhaustive evaluation.
struct ClaimResult {
  std::string name;
  std::string statement;
  nlohmann::ordered_json predicted;
  nlohmann::ordered_json empirical;
  bool match = false;
  std::string note;

  nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  unsigned jobs = 1;
  bool force = false;
};

struct VerifyReport {
  int n = 0;
  int k = 0;
  std::vector<ClaimResult> claims;
  std::vector<std::string> notes;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
  /// Fixed-width PASS/FAIL table, one claim per line.
  std::string table() const;
};

// Claim groups. Each returns the claims applicable to the parity of n/2.

/// Walsh spectra of the single-term forms, the aggregate over E x F, the
/// E* x F* distributions at 0 and 1, the joint distributions, and the
/// orbit equalities used for n/2 even.
std::vector<ClaimResult> walsh_claims(const Field& field, int k);
/// Rank of f_{b,0}, f_{0,c}, and f_{b,c} for c != 0.
std::vector<ClaimResult> rank_claims(const Field& field, int k);
/// Root bound for eps x^{2^l+1} + v x + theta, l = 1, exhaustive.
ClaimResult affine_root_bound_claim(const Field& field);
/// Three-root theta counts, triple and pair set sizes, power sums at 0.
std::vector<ClaimResult> equation_claims(const Field& field, int k, bool force);
/// Code weight distribution and vanishing low dual weights.
std::vector<ClaimResult> code_claims(const Field& field, int k, bool force);
/// Sizes, distinctness, subfamily relations and imbalance.
std::vector<ClaimResult> family_claims(const Field& field, int k);
/// Correlation distribution (spectral), R_max, value set and, for n <= 6 or
/// when forced, agreement with the brute engine.
std::vector<ClaimResult> correlation_claims(const Field& field, int k, const VerifyOptions& options);

/// Every group. Throws TooLarge above n = 8 (n = 10 is allowed when forced),
/// InvalidK for a bad k.
VerifyReport verify(const Field& field, int k, const VerifyOptions& options = {});

}  // namespace gkasami
