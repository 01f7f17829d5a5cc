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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gkasami {

/// An element of GF(2^n) in the polynomial basis; bit i is the coefficient
/// of alpha^i. Addition is XOR.
struct Element {
  std::uint32_t bits = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const { return bits == 0; }
  constexpr Element& operator+=(Element o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr Element operator+(Element a, Element b) { return Element(a.bits ^ b.bits); }
  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

inline constexpr Element kZero{0};
inline constexpr Element kOne{1};

inline constexpr int kMinN = 4;
inline constexpr int kMaxN = 20;

/// The field E = GF(2^n), n even, together with its subfield F = GF(2^{n/2})
/// embedded as the elements fixed by x -> x^{2^{n/2}}.
///
/// A Field is an immutable handle onto shared tables; copies are cheap and
/// may be used from any number of threads.
class Field {
 public:
  /// Builds the field for n (even, 4..20). Without `poly` the built-in
  /// default polynomial for n is used. Primitivity is always checked.
  static Field make(int n, std::optional<std::uint32_t> poly = std::nullopt);

  int n() const { return t_->n; }
  int half() const { return t_->n / 2; }
  std::uint32_t poly() const { return t_->poly; }
  /// 2^n
  std::uint32_t size() const { return t_->size; }
  /// 2^n - 1, the period of every sequence over this field.
  std::uint32_t order() const { return t_->size - 1; }
  /// 2^{n/2}
  std::uint32_t subfield_size() const { return std::uint32_t{1} << half(); }

  Element alpha() const { return Element(2); }
  /// alpha^{2^{n/2}+1}, a primitive element of F.
  Element beta() const { return t_->beta; }

  Element mul(Element a, Element b) const {
    if (a.is_zero() || b.is_zero()) return kZero;
    return Element(t_->exp[t_->log[a.bits] + t_->log[b.bits]]);
  }
  Element inv(Element a) const;
  Element pow(Element a, long long e) const;
  /// alpha^e for any integer e.
  Element exp(long long e) const;
  /// Discrete log base alpha; `a` must be nonzero.
  std::uint32_t log(Element a) const { return t_->log[a.bits]; }

  /// x^{2^i}; i is taken mod n.
  Element frobenius(Element x, int i) const;
  /// tr_m^n(x) as an element of E. Throws NonDivisor unless m | n.
  Element trace(Element x, int m) const;
  /// tr_1^n(x) as a bit.
  int trace1(Element x) const { return __builtin_parity(x.bits & t_->trace_mask); }
  /// tr_1^{n/2}(y) as a bit, for y in F. Result is unspecified otherwise.
  int subtrace1(Element y) const { return t_->subtrace[y.bits]; }

  bool in_subfield(Element x) const { return t_->subfield_coord[x.bits] >= 0; }

  /// The mask u with u.v = tr_1^n(lambda * v) for every v; bit i is
  /// tr_1^n(lambda * alpha^i).
  std::uint32_t dual_mask(Element lambda) const { return t_->dual[lambda.bits]; }

  /// Elements of F ordered by their coordinates in the basis
  /// {1, beta, ..., beta^{n/2-1}}; this coordinate map is GF(2)-linear.
  std::span<const Element> subfield_elements() const { return t_->subfield_elems; }
  /// Coordinate of y in F, or -1 if y is not in F.
  int subfield_coord(Element y) const { return t_->subfield_coord[y.bits]; }

 private:
  struct Tables {
    int n = 0;
    std::uint32_t poly = 0;
    std::uint32_t size = 0;
    std::uint32_t trace_mask = 0;
    Element beta;
    std::vector<std::uint32_t> exp;  // length 2 * order, so exp[i + j] needs no reduction
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> dual;
    std::vector<std::uint8_t> subtrace;
    std::vector<std::int32_t> subfield_coord;
    std::vector<Element> subfield_elems;
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

inline Field make_field(int n, std::optional<std::uint32_t> poly = std::nullopt) {
  return Field::make(n, poly);
}

/// Default defining polynomial for n, as a bitmask (bit i = coefficient of x^i).
std::uint32_t default_poly(int n);

/// True iff `poly` (degree n) makes x a generator of the full multiplicative
/// group of GF(2)[x]/(poly).
bool is_primitive_poly(std::uint32_t poly, int n);

std::string poly_to_hex(std::uint32_t poly);
std::uint32_t poly_from_hex(const std::string& text);

/// Elements rendered as discrete logs: "0" or "a^j".
std::string element_to_string(const Field& field, Element x);
Element element_from_string(const Field& field, const std::string& text);

long long gcd(long long a, long long b);

/// gcd(k, n) = 2 when n/2 is odd, gcd(k, n) = 1 when n/2 is even; k in [1, n).
bool k_is_valid(int n, int k);

}  // namespace gkasami
