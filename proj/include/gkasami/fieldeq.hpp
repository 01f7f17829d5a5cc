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

#include <array>
#include <cstdint>
#include <vector>

#include "gkasami/gf2n.hpp"
#include "gkasami/histogram.hpp"

namespace gkasami {

/// L(x) = sum_i coeffs[i] x^{2^i}, a GF(2)-linear map on E.
struct LinearizedPoly {
  std::vector<Element> coeffs;

  Element apply(const Field& field, Element x) const;
};

/// GF(2)-basis of {x : L(x) = 0}.
std::vector<Element> linearized_kernel(const Field& field, const LinearizedPoly& poly);

/// Number of x in E with eps x^{2^l+1} + v x + theta = 0, by exhaustive
/// evaluation. Requires eps, theta nonzero and gcd(l, n) = 1.
int count_affine_roots(const Field& field, Element eps, Element v, Element theta, int l);

/// Nonzero z with theta^{2^{n-k}} z^{2^{n-k}} + theta z^{2^k} + z^{2^{n/2}} = 0.
int count_rank_equation(const Field& field, Element theta, int k);

struct ReducedRootCount {
  /// Roots w of the reduced equation selected by the sign of k - n/2.
  int reduced = 0;
  /// Nonzero roots of the unreduced equation, for comparison.
  int unreduced = 0;
};

/// For k < n/2 counts w with theta^{2^{n-k}} w^{2^{n/2-k}+1} + w + theta = 0;
/// for k > n/2 counts w with theta w^{2^{k-n/2}+1} + w + theta^{2^{n-k}} = 0.
ReducedRootCount count_reduced_equation(const Field& field, Element theta, int k);

/// Number of theta in E* for which the reduced equation (k < n/2 form when
/// `small_side`, else the k > n/2 form, using k or n - k as appropriate) has
/// three roots.
long long count_three_root_thetas(const Field& field, int k, bool small_side);

struct CensusEntry {
  BigInt empirical;
  BigInt predicted;
  bool match() const { return empirical == predicted; }
};

/// Brute-force counts behind the rank, cardinality and power-sum results.
/// The E^3 scans (pi1, pi2, pi12) are only filled for n <= 6.
struct EquationCensus {
  int n = 0;
  int k = 0;
  CensusEntry n1;
  CensusEntry n2;
  bool triple_scans = false;
  CensusEntry pi1;
  CensusEntry pi2;
  CensusEntry pi12;
  bool pi12_shape = false;  // solutions are exactly (0,0,0) and the (x,x,0) permutations
  CensusEntry phi1;
  CensusEntry phi2;
  CensusEntry phi12;
  std::array<CensusEntry, 3> power_sums;  // degree 1, 2, 3 over E* x F* at lambda = 0

  bool all_match() const;
  nlohmann::ordered_json to_json() const;
};

struct CensusOptions {
  bool triple_scans = true;
  /// Lifts the resource guards (E^3 scans above n = 6, anything above n = 8).
  bool force = false;
};

/// Throws TooLarge for triple scans above n = 6 or any census above n = 8
/// unless forced. Requires a valid k.
EquationCensus census(const Field& field, int k, CensusOptions options = {});

}  // namespace gkasami
