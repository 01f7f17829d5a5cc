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

#include "gkasami/quadform.hpp"

#include <algorithm>
#include <string>

#include "gkasami/error.hpp"
#include "gkasami/gf2_linalg.hpp"

namespace gkasami {

void QuadFormParams::validate() const {
  if (!k_is_valid(field.n(), k))
    throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " violates the gcd condition for n = " +
                                         std::to_string(field.n()));
  if (!field.in_subfield(c)) throw Error(ErrorCode::BadParams, "c is not in the subfield");
  if (b.bits >= field.size()) throw Error(ErrorCode::BadParams, "b is not a field element");
}

QuadForms::QuadForms(Field field, int k) : field_(std::move(field)), k_(k) {
  if (!k_is_valid(field_.n(), k))
    throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " violates the gcd condition for n = " +
                                         std::to_string(field_.n()));
  const std::uint32_t size = field_.size();
  const long long ek = (1LL << k) + 1;
  const long long eh = (1LL << field_.half()) + 1;
  pk_.resize(size);
  ph_.resize(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    pk_[x] = field_.pow(Element(x), ek).bits;
    ph_[x] = field_.pow(Element(x), eh).bits;
  }
}

std::int64_t QuadForms::walsh_point(Element b, Element c, Element lambda) const {
  std::int64_t sum = 0;
  for (std::uint32_t x = 0; x < field_.size(); ++x) {
    const Element e(x);
    const int bit = eval(b, c, e) ^ field_.trace1(field_.mul(lambda, e));
    sum += bit ? -1 : 1;
  }
  return sum;
}

void fast_walsh_hadamard(std::span<std::int32_t> data) {
  const std::size_t len = data.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t u = data[j];
        const std::int32_t v = data[j + h];
        data[j] = u + v;
        data[j + h] = u - v;
      }
    }
  }
}

void QuadForms::spectrum(Element b, Element c, std::span<std::int32_t> out) const {
  const std::uint32_t size = field_.size();
  std::vector<std::int32_t> table(size);
  for (std::uint32_t x = 0; x < size; ++x) table[x] = eval(b, c, Element(x)) ? -1 : 1;
  fast_walsh_hadamard(table);
  // The butterfly pairs with the bitwise dot product; tr(lambda x) is the
  // dot product of x with dual_mask(lambda).
  for (std::uint32_t lam = 0; lam < size; ++lam) out[lam] = table[field_.dual_mask(Element(lam))];
}

WalshSpectrum QuadForms::spectrum(Element b, Element c) const {
  WalshSpectrum s;
  s.values.resize(field_.size());
  spectrum(b, c, s.values);
  return s;
}

int QuadForms::rank(Element b, Element c) const {
  if (b.is_zero() && c.is_zero()) throw Error(ErrorCode::ZeroForm, "rank of the zero form");
  const int n = field_.n();
  const Element bk = field_.frobenius(b, n - k_);
  std::vector<std::uint32_t> cols(n);
  for (int i = 0; i < n; ++i) {
    const Element z(std::uint32_t{1} << i);
    const Element lz = field_.mul(bk, field_.frobenius(z, n - k_)) + field_.mul(b, field_.frobenius(z, k_)) +
                       field_.mul(c, field_.frobenius(z, n / 2));
    cols[i] = lz.bits;
  }
  return gf2_rank(cols);
}

int eval_f(const QuadFormParams& params, Element x) {
  params.validate();
  const Field& f = params.field;
  const Element xk = f.pow(x, (1LL << params.k) + 1);
  const Element xh = f.pow(x, (1LL << f.half()) + 1);
  return f.trace1(f.mul(params.b, xk)) ^ f.subtrace1(f.mul(params.c, xh));
}

std::int64_t walsh_point(const QuadFormParams& params, Element lambda) {
  params.validate();
  return QuadForms(params.field, params.k).walsh_point(params.b, params.c, lambda);
}

WalshSpectrum walsh_spectrum(const QuadFormParams& params) {
  params.validate();
  return QuadForms(params.field, params.k).spectrum(params.b, params.c);
}

int symplectic_rank(const QuadFormParams& params) {
  params.validate();
  return QuadForms(params.field, params.k).rank(params.b, params.c);
}

ValueHistogram spectrum_distribution(const QuadForms& forms, std::span<const Element> b_set,
                                     std::span<const Element> c_set, std::span<const Element> lambda_set,
                                     const BigInt& multiplicity) {
  const Field& f = forms.field();
  const std::int64_t bound = f.size();
  DenseCounter counter(-bound, bound);
  // Full spectra pay off once more than a handful of points are needed.
  const bool use_spectrum = lambda_set.size() > static_cast<std::size_t>(2 * f.n());
  std::vector<std::int32_t> spec(use_spectrum ? f.size() : 0);
  for (Element b : b_set) {
    for (Element c : c_set) {
      if (use_spectrum) {
        forms.spectrum(b, c, spec);
        for (Element lam : lambda_set) counter.add(spec[lam.bits]);
      } else {
        for (Element lam : lambda_set) counter.add(forms.walsh_point(b, c, lam));
      }
    }
  }
  return counter.histogram().scaled(multiplicity);
}

ValueHistogram spectrum_distribution(const Field& field, int k, std::span<const Element> b_set,
                                     std::span<const Element> c_set, std::span<const Element> lambda_set,
                                     const BigInt& multiplicity) {
  for (Element c : c_set)
    if (!field.in_subfield(c)) throw Error(ErrorCode::BadParams, "c_set contains an element outside the subfield");
  return spectrum_distribution(QuadForms(field, k), b_set, c_set, lambda_set, multiplicity);
}

std::vector<Element> all_elements(const Field& field) {
  std::vector<Element> v(field.size());
  for (std::uint32_t x = 0; x < field.size(); ++x) v[x] = Element(x);
  return v;
}

std::vector<Element> nonzero_elements(const Field& field) {
  std::vector<Element> v;
  v.reserve(field.order());
  for (std::uint32_t x = 1; x < field.size(); ++x) v.emplace_back(x);
  return v;
}

std::vector<Element> subfield_all(const Field& field) {
  auto s = field.subfield_elements();
  return {s.begin(), s.end()};
}

std::vector<Element> subfield_nonzero(const Field& field) {
  std::vector<Element> v;
  for (Element y : field.subfield_elements())
    if (!y.is_zero()) v.push_back(y);
  return v;
}

}  // namespace gkasami
