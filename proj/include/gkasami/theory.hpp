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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkasami/gf2n.hpp"
#include "gkasami/histogram.hpp"

namespace gkasami {

/// 2^e as an exact integer.
BigInt pow2(int e);

// Scalar closed forms. All take the even field degree n.

/// Number of theta in E* whose rank equation has three nonzero roots; also
/// the number of b in E* giving rank n-2 for each fixed c in F*.
BigInt rank_deficient_count(int n);
BigInt family_size(int n);
/// |{(x,y,z) : x^{2^k+1} + y^{2^k+1} + z^{2^k+1} = 0}|
BigInt kasami_triple_count(int n);
/// |{(x,y,z) : x^{2^{n/2}+1} + y^{2^{n/2}+1} + z^{2^{n/2}+1} = 0}|
BigInt norm_triple_count(int n);
BigInt common_triple_count(int n);
BigInt kasami_pair_count(int n);
BigInt norm_pair_count(int n);
BigInt common_pair_count(int n);
/// Sum over (b, c) in E* x F* of f^w_{b,c}(0)^degree, degree in 1..3.
BigInt power_sum_at_zero(int n, int degree);

/// A closed-form distribution evaluated exactly at (n, k).
struct Prediction {
  std::string name;
  int n = 0;
  int k = 0;
  ValueHistogram histogram;
  std::optional<BigInt> scalar;

  nlohmann::ordered_json to_json() const;
};

/// Named predictors:
///   b_only_walsh_at_one_odd, b_only_walsh_at_zero_even, b_only_walsh_at_one_even,
///   c_only_walsh_at_zero, c_only_walsh_at_one, walsh_aggregate, code_weights,
///   walsh_at_zero_odd, walsh_at_one_odd, walsh_at_zero_even, walsh_at_one_even,
///   joint_walsh_odd, joint_walsh_even, correlation_odd, correlation_even,
///   imbalance_odd, imbalance_even, rank_deficient_count (scalar).
/// Throws UnknownName, ParityMismatch, or NonIntegerResult if a count fails
/// to divide exactly or comes out negative.
Prediction predict(std::string_view name, int n, int k = 0);
std::vector<std::string_view> prediction_names();
/// The population a prediction's counts must sum to.
BigInt expected_population(std::string_view name, int n);

/// Parity-dispatched helpers.
std::string_view correlation_prediction_name(int n);
std::string_view imbalance_prediction_name(int n);

/// The generalized Kasami code: codewords c(gamma, delta, eta) indexed by
/// x = alpha^t, t = 0 .. 2^n - 2.
struct CodeSpec {
  Field field;
  int k = 0;
  int length = 0;
  int dimension = 0;
  /// Empirical weight histogram over all 2^{5n/2} codewords (value = weight).
  ValueHistogram weights;
};

/// Bits of c(gamma, delta, eta), LSB of word 0 = position t = 0.
std::vector<std::uint64_t> codeword(const Field& field, int k, Element gamma, Element delta, Element eta);

/// Enumerates every codeword. Throws TooLarge above n = 8 unless forced.
CodeSpec build_code(const Field& field, int k, bool force = false);

/// Krawtchouk coefficient K_j(i) for length `length`.
BigInt krawtchouk(int length, int j, int i);
/// B_j of the dual code, by MacWilliams in Krawtchouk form.
BigInt dual_weight(const CodeSpec& code, int j);
/// B_1 .. B_{j_max}, j_max <= 4.
std::vector<BigInt> dual_low_weights(const CodeSpec& code, int j_max);

}  // namespace gkasami
