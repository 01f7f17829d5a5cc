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

#include "gkasami/fieldeq.hpp"

#include <algorithm>
#include <string>

#include "gkasami/error.hpp"
#include "gkasami/gf2_linalg.hpp"
#include "gkasami/quadform.hpp"
#include "gkasami/theory.hpp"

namespace gkasami {

Element LinearizedPoly::apply(const Field& field, Element x) const {
  Element sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i) sum += field.mul(coeffs[i], field.frobenius(x, static_cast<int>(i)));
  return sum;
}

std::vector<Element> linearized_kernel(const Field& field, const LinearizedPoly& poly) {
  std::vector<std::uint32_t> cols(field.n());
  for (int i = 0; i < field.n(); ++i) cols[i] = poly.apply(field, Element(std::uint32_t{1} << i)).bits;
  std::vector<Element> basis;
  for (std::uint32_t v : kernel_basis(cols)) basis.emplace_back(v);
  return basis;
}

int count_affine_roots(const Field& field, Element eps, Element v, Element theta, int l) {
  if (eps.is_zero() || theta.is_zero() || l <= 0 || gcd(l, field.n()) != 1)
    throw Error(ErrorCode::BadParams, "affine root count needs eps, theta nonzero and gcd(l, n) = 1");
  int roots = 0;
  for (std::uint32_t xb = 0; xb < field.size(); ++xb) {
    const Element x(xb);
    const Element lhs = field.mul(eps, field.mul(field.frobenius(x, l), x)) + field.mul(v, x) + theta;
    if (lhs.is_zero()) ++roots;
  }
  return roots;
}

namespace {

void check_theta_k(const Field& field, Element theta, int k) {
  if (theta.is_zero()) throw Error(ErrorCode::BadParams, "theta must be nonzero");
  if (!k_is_valid(field.n(), k)) throw Error(ErrorCode::BadParams, "k violates the gcd condition");
}

}  // namespace

int count_rank_equation(const Field& field, Element theta, int k) {
  check_theta_k(field, theta, k);
  const int n = field.n();
  const Element t1 = field.frobenius(theta, n - k);
  int roots = 0;
  for (std::uint32_t zb = 1; zb < field.size(); ++zb) {
    const Element z(zb);
    const Element lhs = field.mul(t1, field.frobenius(z, n - k)) + field.mul(theta, field.frobenius(z, k)) +
                        field.frobenius(z, n / 2);
    if (lhs.is_zero()) ++roots;
  }
  return roots;
}

ReducedRootCount count_reduced_equation(const Field& field, Element theta, int k) {
  check_theta_k(field, theta, k);
  const int n = field.n();
  const int h = n / 2;
  ReducedRootCount out;
  const Element tk = field.frobenius(theta, n - k);
  for (std::uint32_t wb = 0; wb < field.size(); ++wb) {
    const Element w(wb);
    Element lhs;
    if (k < h) {
      lhs = field.mul(tk, field.mul(field.frobenius(w, h - k), w)) + w + theta;
    } else {
      lhs = field.mul(theta, field.mul(field.frobenius(w, k - h), w)) + w + tk;
    }
    if (lhs.is_zero()) ++out.reduced;
  }
  out.unreduced = count_rank_equation(field, theta, k);
  return out;
}

long long count_three_root_thetas(const Field& field, int k, bool small_side) {
  const int n = field.n();
  if (!k_is_valid(n, k)) throw Error(ErrorCode::BadParams, "k violates the gcd condition");
  const int kk = small_side ? std::min(k, n - k) : std::max(k, n - k);
  const int h = n / 2;
  long long count = 0;
  for (std::uint32_t tb = 1; tb < field.size(); ++tb) {
    const Element theta(tb);
    const Element tk = field.frobenius(theta, n - kk);
    int roots = 0;
    for (std::uint32_t wb = 1; wb < field.size() && roots <= 3; ++wb) {
      const Element w(wb);
      const Element lhs = kk < h ? field.mul(tk, field.mul(field.frobenius(w, h - kk), w)) + w + theta
                                 : field.mul(theta, field.mul(field.frobenius(w, kk - h), w)) + w + tk;
      if (lhs.is_zero()) ++roots;
    }
    if (roots == 3) ++count;
  }
  return count;
}

bool EquationCensus::all_match() const {
  bool ok = n1.match() && n2.match() && phi1.match() && phi2.match() && phi12.match();
  for (const auto& p : power_sums) ok = ok && p.match();
  if (triple_scans) ok = ok && pi1.match() && pi2.match() && pi12.match() && pi12_shape;
  return ok;
}

namespace {

nlohmann::ordered_json entry_json(const CensusEntry& e) {
  nlohmann::ordered_json j;
  j["empirical"] = to_decimal(e.empirical);
  j["predicted"] = to_decimal(e.predicted);
  j["match"] = e.match();
  return j;
}

}  // namespace

nlohmann::ordered_json EquationCensus::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["N1"] = entry_json(n1);
  j["N2"] = entry_json(n2);
  if (triple_scans) {
    j["pi1"] = entry_json(pi1);
    j["pi2"] = entry_json(pi2);
    j["pi12"] = entry_json(pi12);
    j["pi12_solution_shape"] = pi12_shape;
  } else {
    j["pi"] = "skipped: triple scans run only for n <= 6 unless forced";
  }
  j["phi1"] = entry_json(phi1);
  j["phi2"] = entry_json(phi2);
  j["phi12"] = entry_json(phi12);
  auto sums = nlohmann::ordered_json::array();
  for (int d = 0; d < 3; ++d) {
    auto e = entry_json(power_sums[d]);
    e["degree"] = d + 1;
    sums.push_back(std::move(e));
  }
  j["power_sums_at_zero"] = std::move(sums);
  j["match"] = all_match();
  return j;
}

EquationCensus census(const Field& field, int k, CensusOptions options) {
  const int n = field.n();
  if (!k_is_valid(n, k)) throw Error(ErrorCode::InvalidK, "k violates the gcd condition");
  if (n > 8 && !options.force) throw Error(ErrorCode::TooLarge, "census is limited to n <= 8");
  if (options.triple_scans && n > 6 && !options.force)
    throw Error(ErrorCode::TooLarge, "E^3 scans are limited to n <= 6");

  const QuadForms forms(field, k);
  const std::uint32_t size = field.size();

  EquationCensus c;
  c.n = n;
  c.k = k;
  c.n1 = {count_three_root_thetas(field, k, true), rank_deficient_count(n)};
  c.n2 = {count_three_root_thetas(field, k, false), rank_deficient_count(n)};

  std::vector<std::uint32_t> pk(size), ph(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    pk[x] = forms.kasami_power(Element(x)).bits;
    ph[x] = forms.norm(Element(x)).bits;
  }

  if (options.triple_scans) {
    c.triple_scans = true;
    long long p1 = 0, p2 = 0, p12 = 0;
    bool shape = true;
    for (std::uint32_t x = 0; x < size; ++x) {
      for (std::uint32_t y = 0; y < size; ++y) {
        for (std::uint32_t z = 0; z < size; ++z) {
          const bool in1 = (pk[x] ^ pk[y] ^ pk[z]) == 0;
          const bool in2 = (ph[x] ^ ph[y] ^ ph[z]) == 0;
          p1 += in1;
          p2 += in2;
          if (in1 && in2) {
            ++p12;
            const bool expected = (x == y && z == 0) || (x == z && y == 0) || (y == z && x == 0);
            shape = shape && expected;
          }
        }
      }
    }
    c.pi1 = {p1, kasami_triple_count(n)};
    c.pi2 = {p2, norm_triple_count(n)};
    c.pi12 = {p12, common_triple_count(n)};
    c.pi12_shape = shape && p12 == 3 * static_cast<long long>(size) - 2;
  }

  long long f1 = 0, f2 = 0, f12 = 0;
  for (std::uint32_t x = 0; x < size; ++x) {
    for (std::uint32_t y = 0; y < size; ++y) {
      const bool in1 = pk[x] == pk[y];
      const bool in2 = ph[x] == ph[y];
      f1 += in1;
      f2 += in2;
      f12 += in1 && in2;
    }
  }
  c.phi1 = {f1, kasami_pair_count(n)};
  c.phi2 = {f2, norm_pair_count(n)};
  c.phi12 = {f12, common_pair_count(n)};

  std::array<BigInt, 3> sums{0, 0, 0};
  const auto cs = subfield_nonzero(field);
  for (std::uint32_t b = 1; b < size; ++b) {
    for (Element cc : cs) {
      const BigInt v = forms.walsh_point(Element(b), cc, kZero);
      sums[0] += v;
      sums[1] += v * v;
      sums[2] += v * v * v;
    }
  }
  for (int d = 0; d < 3; ++d) c.power_sums[d] = {sums[d], power_sum_at_zero(n, d + 1)};
  return c;
}

}  // namespace gkasami
