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
#include <span>
#include <vector>

#include "gkasami/gf2n.hpp"
#include "gkasami/histogram.hpp"

namespace gkasami {

/// Parameters of the quadratic form
///   f_{b,c}(x) = tr_1^n(b x^{2^k+1}) + tr_1^{n/2}(c x^{2^{n/2}+1}),
/// with b in E and c in F.
struct QuadFormParams {
  Field field;
  int k = 0;
  Element b;
  Element c;

  /// Throws InvalidK if k fails the gcd condition, BadParams if c is not in F.
  void validate() const;
};

/// Walsh (trace-transform) spectrum, values[lambda.bits] = f^w(lambda).
struct WalshSpectrum {
  std::vector<std::int32_t> values;

  std::int32_t operator[](Element lambda) const { return values[lambda.bits]; }
};

/// Precomputed monomial tables for one (field, k). Every f_{b,c} over the
/// same field and k is evaluated through one of these.
class QuadForms {
 public:
  QuadForms(Field field, int k);

  const Field& field() const { return field_; }
  int k() const { return k_; }

  /// x^{2^k+1}
  Element kasami_power(Element x) const { return Element(pk_[x.bits]); }
  /// x^{2^{n/2}+1}, always in F.
  Element norm(Element x) const { return Element(ph_[x.bits]); }

  int eval(Element b, Element c, Element x) const {
    return field_.trace1(field_.mul(b, kasami_power(x))) ^ field_.subtrace1(field_.mul(c, norm(x)));
  }

  /// Direct sum over all x in E.
  std::int64_t walsh_point(Element b, Element c, Element lambda) const;
  /// Fast transform of the truth table; `out` must hold 2^n entries.
  void spectrum(Element b, Element c, std::span<std::int32_t> out) const;
  WalshSpectrum spectrum(Element b, Element c) const;
  /// n minus the nullity of the linearized map
  ///   z -> b^{2^{n-k}} z^{2^{n-k}} + b z^{2^k} + c z^{2^{n/2}}.
  int rank(Element b, Element c) const;

 private:
  Field field_;
  int k_;
  std::vector<std::uint32_t> pk_;
  std::vector<std::uint32_t> ph_;
};

int eval_f(const QuadFormParams& params, Element x);
std::int64_t walsh_point(const QuadFormParams& params, Element lambda);
WalshSpectrum walsh_spectrum(const QuadFormParams& params);
/// Throws ZeroForm when b = c = 0.
int symplectic_rank(const QuadFormParams& params);

/// In-place Walsh-Hadamard butterfly over 2^m entries.
void fast_walsh_hadamard(std::span<std::int32_t> data);

/// Histogram of f^w_{b,c}(lambda) over b_set x c_set x lambda_set, each
/// triple counted `multiplicity` times.
ValueHistogram spectrum_distribution(const QuadForms& forms, std::span<const Element> b_set,
                                     std::span<const Element> c_set, std::span<const Element> lambda_set,
                                     const BigInt& multiplicity = 1);
ValueHistogram spectrum_distribution(const Field& field, int k, std::span<const Element> b_set,
                                     std::span<const Element> c_set, std::span<const Element> lambda_set,
                                     const BigInt& multiplicity = 1);

// Element sets used throughout.
std::vector<Element> all_elements(const Field& field);
std::vector<Element> nonzero_elements(const Field& field);
std::vector<Element> subfield_all(const Field& field);
std::vector<Element> subfield_nonzero(const Field& field);

}  // namespace gkasami
