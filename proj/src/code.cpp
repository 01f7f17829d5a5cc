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

#include <bit>

#include "gkasami/error.hpp"
#include "gkasami/theory.hpp"

namespace gkasami {

std::vector<std::uint64_t> codeword(const Field& field, int k, Element gamma, Element delta, Element eta) {
  const std::uint32_t len = field.order();
  std::vector<std::uint64_t> words((len + 63) / 64, 0);
  const long long ek = (1LL << k) + 1;
  const long long eh = (1LL << field.half()) + 1;
  for (std::uint32_t t = 0; t < len; ++t) {
    const int bit = field.trace1(field.mul(gamma, field.exp(t)) + field.mul(delta, field.exp(ek * t))) ^
                    field.subtrace1(field.mul(eta, field.exp(eh * t)));
    if (bit) words[t / 64] |= std::uint64_t{1} << (t % 64);
  }
  return words;
}

CodeSpec build_code(const Field& field, int k, bool force) {
  if (!k_is_valid(field.n(), k)) throw Error(ErrorCode::InvalidK, "k violates the gcd condition");
  if (field.n() > 8 && !force) throw Error(ErrorCode::TooLarge, "code enumeration is limited to n <= 8");

  CodeSpec code{field, k, static_cast<int>(field.order()), 5 * field.half(), {}};

  // The code is linear in (gamma, delta, eta), so a Gray-code walk over the
  // coordinate basis visits every codeword with one XOR per step.
  std::vector<std::vector<std::uint64_t>> basis;
  for (int i = 0; i < field.n(); ++i) basis.push_back(codeword(field, k, Element(1u << i), kZero, kZero));
  for (int i = 0; i < field.n(); ++i) basis.push_back(codeword(field, k, kZero, Element(1u << i), kZero));
  const auto sub = field.subfield_elements();
  for (int i = 0; i < field.half(); ++i) basis.push_back(codeword(field, k, kZero, kZero, sub[std::size_t{1} << i]));

  const std::size_t words = basis.front().size();
  std::vector<std::uint64_t> cur(words, 0);
  std::vector<std::uint64_t> counts(code.length + 1, 0);
  counts[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto& flip = basis[std::countr_zero(g)];
    int weight = 0;
    for (std::size_t w = 0; w < words; ++w) {
      cur[w] ^= flip[w];
      weight += std::popcount(cur[w]);
    }
    ++counts[weight];
  }
  for (int w = 0; w <= code.length; ++w)
    if (counts[w]) code.weights.add(w, BigInt(counts[w]));
  return code;
}

namespace {

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

BigInt krawtchouk(int length, int j, int i) {
  BigInt sum = 0;
  for (int s = 0; s <= j; ++s) {
    const BigInt term = binomial(i, s) * binomial(length - i, j - s);
    if (s % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

BigInt dual_weight(const CodeSpec& code, int j) {
  BigInt sum = 0;
  for (const auto& [weight, count] : code.weights) sum += count * krawtchouk(code.length, j, static_cast<int>(weight));
  const BigInt size = pow2(code.dimension);
  if (sum % size != 0)
    throw Error(ErrorCode::NonIntegerResult, "dual weight B_" + std::to_string(j) + " is not an integer");
  const BigInt b = sum / size;
  if (b < 0) throw Error(ErrorCode::NonIntegerResult, "dual weight B_" + std::to_string(j) + " is negative");
  return b;
}

std::vector<BigInt> dual_low_weights(const CodeSpec& code, int j_max) {
  if (j_max < 0 || j_max > 4) throw Error(ErrorCode::BadParams, "j_max must be in 0..4");
  std::vector<BigInt> out;
  for (int j = 1; j <= j_max; ++j) out.push_back(dual_weight(code, j));
  return out;
}

}  // namespace gkasami
