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

#include "doctest.h"
#include "gkasami/error.hpp"
#include "gkasami/gf2_linalg.hpp"
#include "gkasami/quadform.hpp"
#include "gkasami/theory.hpp"
#include "oracles.hpp"

using namespace gkasami;

namespace {

Element random_element(const Field& f) { return Element(oracle::uniform(0, f.size() - 1)); }
Element random_sub(const Field& f) {
  const auto s = f.subfield_elements();
  return s[oracle::uniform(0, static_cast<std::uint32_t>(s.size() - 1))];
}

}  // namespace

TEST_CASE("parameter validation") {
  const auto f = make_field(6);
  CHECK_THROWS_AS((QuadFormParams{f, 3, kOne, kZero}.validate()), Error);
  CHECK_THROWS_AS((QuadFormParams{f, 2, kOne, f.alpha()}.validate()), Error);
  CHECK_NOTHROW((QuadFormParams{f, 2, kOne, f.beta()}.validate()));
  CHECK_THROWS_AS(symplectic_rank({f, 2, kZero, kZero}), Error);
}

TEST_CASE("evaluation agrees with the reference") {
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}, {6, 4}}) {
    const auto f = make_field(n);
    const QuadForms forms(f, k);
    for (int trial = 0; trial < 30; ++trial) {
      const Element b = random_element(f), c = random_sub(f);
      for (std::uint32_t x = 0; x < f.size(); ++x)
        REQUIRE(forms.eval(b, c, Element(x)) == oracle::f(b.bits, c.bits, x, k, f.poly(), n));
      CHECK(eval_f({f, k, b, c}, kZero) == 0);
    }
    for (std::uint32_t x = 0; x < f.size(); ++x) CHECK(forms.eval(kZero, kZero, Element(x)) == 0);
  }
}

TEST_CASE("walsh points against direct sums") {
  const auto f = make_field(4);
  for (std::uint32_t b = 0; b < f.size(); ++b)
    for (Element c : f.subfield_elements())
      for (std::uint32_t l = 0; l < f.size(); ++l)
        REQUIRE(walsh_point({f, 1, Element(b), c}, Element(l)) == oracle::walsh(b, c.bits, l, 1, f.poly(), 4));
}

TEST_CASE("trivial spectra") {
  const auto f = make_field(6);
  CHECK(walsh_point({f, 2, kZero, kZero}, kZero) == 64);
  const auto s = walsh_spectrum({f, 2, kZero, kZero});
  for (std::uint32_t l = 1; l < f.size(); ++l) REQUIRE(s.values[l] == 0);
  for (Element c : subfield_nonzero(f)) CHECK(walsh_point({f, 2, kZero, c}, kZero) == -8);
}

TEST_CASE("fast spectrum equals pointwise sums") {
  SUBCASE("exhaustive at n = 4") {
    const auto f = make_field(4);
    const QuadForms forms(f, 1);
    for (std::uint32_t b = 0; b < f.size(); ++b)
      for (Element c : f.subfield_elements()) {
        const auto s = forms.spectrum(Element(b), c);
        for (std::uint32_t l = 0; l < f.size(); ++l) REQUIRE(s.values[l] == forms.walsh_point(Element(b), c, Element(l)));
      }
  }
  SUBCASE("sampled at n = 6, 8") {
    for (auto [n, k] : {std::pair{6, 2}, {8, 3}}) {
      const auto f = make_field(n);
      const QuadForms forms(f, k);
      for (int trial = 0; trial < 10; ++trial) {
        const Element b = random_element(f), c = random_sub(f);
        const auto s = forms.spectrum(b, c);
        for (int i = 0; i < 40; ++i) {
          const Element l = random_element(f);
          REQUIRE(s[l] == oracle::walsh(b.bits, c.bits, l.bits, k, f.poly(), n));
        }
      }
    }
  }
}

TEST_CASE("Parseval") {
  const auto f = make_field(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = walsh_spectrum({f, 2, random_element(f), random_sub(f)});
    long long sum = 0;
    for (auto v : s.values) sum += static_cast<long long>(v) * v;
    REQUIRE(sum == 1LL << 12);
  }
}

TEST_CASE("fast transform of a delta") {
  std::vector<std::int32_t> d(16, 0);
  d[5] = 1;
  fast_walsh_hadamard(d);
  for (std::uint32_t u = 0; u < 16; ++u) CHECK(d[u] == (__builtin_parity(u & 5) ? -1 : 1));
}

TEST_CASE("spectrum shape follows the rank") {
  // A form of rank 2h has +2^{n-h} on 2^{2h-1}+2^{h-1} points, -2^{n-h} on
  // 2^{2h-1}-2^{h-1} points and zero elsewhere.
  for (auto [n, k] : {std::pair{4, 1}, {4, 3}, {6, 2}, {6, 4}}) {
    const auto f = make_field(n);
    const QuadForms forms(f, k);
    for (std::uint32_t b = 0; b < f.size(); ++b)
      for (Element c : f.subfield_elements()) {
        if (b == 0 && c.is_zero()) continue;
        const int r = forms.rank(Element(b), c);
        REQUIRE(r % 2 == 0);
        REQUIRE((r == n || r == n - 2));
        const int h = r / 2;
        const auto s = forms.spectrum(Element(b), c);
        long long plus = 0, minus = 0, zero = 0;
        const int mag = 1 << (n - h);
        for (auto v : s.values) {
          if (v == mag) ++plus;
          else if (v == -mag) ++minus;
          else if (v == 0) ++zero;
          else FAIL("value off the rank grid");
        }
        REQUIRE(plus == (1LL << (2 * h - 1)) + (1LL << (h - 1)));
        REQUIRE(minus == (1LL << (2 * h - 1)) - (1LL << (h - 1)));
        REQUIRE(zero == (1LL << n) - (1LL << (2 * h)));
      }
  }
}

TEST_CASE("rank from the kernel of L matches the radical of the bilinear form") {
  // z is in the radical iff f(x) + f(z) + f(x + z) = 0 for every x.
  const auto f = make_field(4);
  const int k = 1;
  for (std::uint32_t b = 0; b < f.size(); ++b)
    for (Element c : f.subfield_elements()) {
      if (b == 0 && c.is_zero()) continue;
      int radical = 0;
      for (std::uint32_t z = 0; z < f.size(); ++z) {
        bool in = true;
        for (std::uint32_t x = 0; x < f.size() && in; ++x)
          in = (oracle::f(b, c.bits, x, k, f.poly(), 4) ^ oracle::f(b, c.bits, z, k, f.poly(), 4) ^
                oracle::f(b, c.bits, x ^ z, k, f.poly(), 4)) == 0;
        radical += in;
      }
      int dim = 0;
      while ((1 << dim) < radical) ++dim;
      REQUIRE((1 << dim) == radical);
      REQUIRE(symplectic_rank({f, k, Element(b), c}) == 4 - dim);
    }
}

TEST_CASE("single-term ranks") {
  SUBCASE("c only has full rank") {
    for (auto [n, k] : {std::pair{4, 1}, {6, 2}, {8, 1}}) {
      const auto f = make_field(n);
      for (Element c : subfield_nonzero(f)) CHECK(symplectic_rank({f, k, kZero, c}) == n);
    }
  }
  SUBCASE("b only, n/2 even: full rank exactly off the cubes") {
    const auto f = make_field(8);
    for (std::uint32_t b = 1; b < f.size(); ++b) {
      const bool cube = f.log(Element(b)) % 3 == 0;
      REQUIRE(symplectic_rank({f, 3, Element(b), kZero}) == (cube ? 6 : 8));
    }
  }
  SUBCASE("b only, n/2 odd: spectrum values in {0, +-2^{n/2+1}}") {
    const auto f = make_field(6);
    for (std::uint32_t b = 1; b < f.size(); ++b) {
      const auto s = walsh_spectrum({f, 2, Element(b), kZero});
      for (auto v : s.values) REQUIRE((v == 0 || v == 16 || v == -16));
    }
  }
}

TEST_CASE("f_{1,c} rank deficiency count at n = 6") {
  const auto f = make_field(6);
  int deficient = 0;
  for (Element c : subfield_nonzero(f)) deficient += symplectic_rank({f, 2, kOne, c}) == 4;
  CHECK(deficient == 4);
}

TEST_CASE("rank-deficient b per c") {
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}, {6, 4}, {8, 1}, {8, 5}}) {
    const auto f = make_field(n);
    const QuadForms forms(f, k);
    for (Element c : subfield_nonzero(f)) {
      long long deficient = 0;
      for (std::uint32_t b = 1; b < f.size(); ++b) deficient += forms.rank(Element(b), c) == n - 2;
      REQUIRE(BigInt(deficient) == rank_deficient_count(n));
    }
  }
}

TEST_CASE("transform value shift under scaling of b") {
  // f^w_{b a^{2^k+1}, 0}(a) = f^w_{b,0}(1)
  const auto f = make_field(4);
  const QuadForms forms(f, 1);
  for (std::uint32_t b = 1; b < f.size(); ++b)
    for (std::uint32_t a = 1; a < f.size(); ++a) {
      const Element scaled = f.mul(Element(b), forms.kasami_power(Element(a)));
      REQUIRE(forms.walsh_point(scaled, kZero, Element(a)) == forms.walsh_point(Element(b), kZero, kOne));
    }
}

TEST_CASE("spectrum distributions") {
  const auto f = make_field(6);
  const auto all = spectrum_distribution(f, 2, all_elements(f), subfield_all(f), all_elements(f));
  CHECK(all.total() == BigInt(1) << 15);
  CHECK(all.count(64) == 1);

  const std::vector<Element> zero{kZero}, one{kOne};
  const auto b_only = spectrum_distribution(f, 2, nonzero_elements(f), zero, one);
  CHECK(b_only == ValueHistogram{{16, 10}, {0, 47}, {-16, 6}});

  const auto at0 = spectrum_distribution(f, 2, nonzero_elements(f), subfield_nonzero(f), zero);
  CHECK(at0.count(8) == 189);
  CHECK(at0.count(-8) == 0);

  const auto doubled = spectrum_distribution(f, 2, nonzero_elements(f), zero, one, 2);
  CHECK(doubled == b_only.scaled(2));

  CHECK_THROWS_AS(spectrum_distribution(f, 2, zero, std::vector<Element>{f.alpha()}, zero), Error);
}

TEST_CASE("kernel basis") {
  const std::vector<std::uint32_t> cols{0b011, 0b011, 0b100};
  const auto basis = kernel_basis(cols);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == 0b011);
  CHECK(gf2_rank(cols) == 2);
}
