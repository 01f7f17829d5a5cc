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

#include "gkasami/gf2n.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <numeric>

#include "gkasami/error.hpp"

namespace gkasami {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::NonPrimitivePolynomial: return "NonPrimitivePolynomial";
    case ErrorCode::NonDivisor: return "NonDivisor";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

long long gcd(long long a, long long b) { return std::gcd(a, b); }

bool k_is_valid(int n, int k) {
  if (n % 2 != 0 || k <= 0 || k >= n) return false;
  const long long want = (n / 2) % 2 == 1 ? 2 : 1;
  return gcd(k, n) == want;
}

namespace {

// Powers of x modulo poly; empty if x does not have order exactly 2^n - 1.
std::vector<std::uint32_t> power_table(std::uint32_t poly, int n) {
  const std::uint32_t size = std::uint32_t{1} << n;
  const std::uint32_t order = size - 1;
  std::vector<std::uint32_t> pw(order);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    if (i > 0 && x == 1) return {};
    if (x == 0) return {};
    pw[i] = x;
    x <<= 1;
    if (x & size) x ^= poly;
  }
  if (x != 1) return {};
  return pw;
}

}  // namespace

bool is_primitive_poly(std::uint32_t poly, int n) {
  if (n < 1 || n > 31) return false;
  if ((poly >> n) != 1) return false;
  return !power_table(poly, n).empty();
}

std::uint32_t default_poly(int n) {
  switch (n) {
    case 4: return 0x13;     // x^4+x+1
    case 6: return 0x43;     // x^6+x+1
    case 8: return 0x11D;    // x^8+x^4+x^3+x^2+1
    case 10: return 0x409;   // x^10+x^3+1
    case 12: return 0x1053;  // x^12+x^6+x^4+x+1
    default: break;
  }
  if (n % 2 != 0 || n < kMinN || n > kMaxN)
    throw Error(ErrorCode::UnsupportedN, "n must be even with 4 <= n <= 20, got " + std::to_string(n));
  // Smallest primitive polynomial of degree n, by bitmask value.
  for (std::uint32_t p = (std::uint32_t{1} << n) | 1; p < (std::uint32_t{2} << n); p += 2) {
    if (is_primitive_poly(p, n)) return p;
  }
  throw Error(ErrorCode::NonPrimitivePolynomial, "no primitive polynomial found");
}

Field Field::make(int n, std::optional<std::uint32_t> poly) {
  if (n % 2 != 0 || n < kMinN || n > kMaxN)
    throw Error(ErrorCode::UnsupportedN, "n must be even with 4 <= n <= 20, got " + std::to_string(n));
  const std::uint32_t p = poly.value_or(default_poly(n));
  if ((p >> n) != 1)
    throw Error(ErrorCode::NonPrimitivePolynomial, "polynomial " + poly_to_hex(p) + " does not have degree " + std::to_string(n));

  auto pw = power_table(p, n);
  if (pw.empty())
    throw Error(ErrorCode::NonPrimitivePolynomial, "polynomial " + poly_to_hex(p) + " is not primitive");

  auto t = std::make_shared<Tables>();
  t->n = n;
  t->poly = p;
  t->size = std::uint32_t{1} << n;
  const std::uint32_t order = t->size - 1;

  t->exp.resize(2 * std::size_t{order});
  t->log.assign(t->size, 0);
  for (std::uint32_t i = 0; i < order; ++i) {
    t->exp[i] = pw[i];
    t->exp[i + order] = pw[i];
    t->log[pw[i]] = i;
  }

  const std::uint32_t half_size = std::uint32_t{1} << (n / 2);
  t->beta = Element(pw[half_size + 1]);
  if (std::gcd(order, half_size + 1) != half_size + 1)
    throw Error(ErrorCode::NonPrimitivePolynomial, "beta is not primitive in the subfield");

  Field f(t);

  // tr_1^n is linear, so it is the parity of x against tr(alpha^i).
  for (int i = 0; i < n; ++i) {
    if (!f.trace(Element(std::uint32_t{1} << i), 1).is_zero()) t->trace_mask |= std::uint32_t{1} << i;
  }

  t->dual.resize(t->size);
  for (std::uint32_t lam = 0; lam < t->size; ++lam) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (f.trace1(f.mul(Element(lam), Element(std::uint32_t{1} << i)))) mask |= std::uint32_t{1} << i;
    }
    t->dual[lam] = mask;
  }

  // Subfield: coordinates in the basis 1, beta, ..., beta^{n/2-1}.
  const int h = n / 2;
  std::vector<Element> basis(h);
  for (int i = 0; i < h; ++i) basis[i] = f.pow(t->beta, i);
  t->subfield_coord.assign(t->size, -1);
  t->subfield_elems.resize(half_size);
  for (std::uint32_t c = 0; c < half_size; ++c) {
    Element y;
    for (int i = 0; i < h; ++i)
      if (c >> i & 1) y += basis[i];
    if (t->subfield_coord[y.bits] != -1 || f.frobenius(y, h) != y)
      throw Error(ErrorCode::NonPrimitivePolynomial, "subfield basis is degenerate");
    t->subfield_coord[y.bits] = static_cast<std::int32_t>(c);
    t->subfield_elems[c] = y;
  }

  t->subtrace.assign(t->size, 0);
  for (Element y : t->subfield_elems) {
    Element s;
    for (int i = 0; i < h; ++i) s += f.frobenius(y, i);
    t->subtrace[y.bits] = static_cast<std::uint8_t>(s.bits & 1);
  }

  return f;
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::BadParams, "inverse of zero");
  const std::uint32_t l = log(a);
  return Element(t_->exp[l == 0 ? 0 : order() - l]);
}

Element Field::exp(long long e) const {
  const long long ord = order();
  long long r = e % ord;
  if (r < 0) r += ord;
  return Element(t_->exp[static_cast<std::size_t>(r)]);
}

Element Field::pow(Element a, long long e) const {
  if (a.is_zero()) {
    if (e == 0) return kOne;
    if (e < 0) throw Error(ErrorCode::BadParams, "negative power of zero");
    return kZero;
  }
  const long long ord = order();
  long long r = e % ord;
  if (r < 0) r += ord;
  // log < 2^20 and r < 2^20, so the product fits easily.
  return exp(static_cast<long long>(log(a)) * r);
}

Element Field::frobenius(Element x, int i) const {
  int r = i % n();
  if (r < 0) r += n();
  if (x.is_zero()) return x;
  return exp(static_cast<long long>(log(x)) << r);
}

Element Field::trace(Element x, int m) const {
  if (m <= 0 || n() % m != 0)
    throw Error(ErrorCode::NonDivisor, std::to_string(m) + " does not divide " + std::to_string(n()));
  Element s;
  for (int j = 0; j < n() / m; ++j) s += frobenius(x, j * m);
  return s;
}

std::string poly_to_hex(std::uint32_t poly) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%X", poly);
  return buf;
}

std::uint32_t poly_from_hex(const std::string& text) {
  std::string_view s = text;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  std::uint32_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "bad polynomial '" + text + "'");
  return v;
}

std::string element_to_string(const Field& field, Element x) {
  if (x.is_zero()) return "0";
  return "a^" + std::to_string(field.log(x));
}

Element element_from_string(const Field& field, const std::string& text) {
  if (text == "0") return kZero;
  if (text.rfind("a^", 0) != 0) throw Error(ErrorCode::ParseError, "bad element '" + text + "'");
  try {
    return field.exp(std::stoll(text.substr(2)));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad element '" + text + "'");
  }
}

}  // namespace gkasami
