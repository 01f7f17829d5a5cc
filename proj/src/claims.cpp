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

#include "gkasami/claims.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "gkasami/correlation.hpp"
#include "gkasami/error.hpp"
#include "gkasami/families.hpp"
#include "gkasami/fieldeq.hpp"
#include "gkasami/quadform.hpp"
#include "gkasami/theory.hpp"

namespace gkasami {

nlohmann::ordered_json ClaimResult::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["statement"] = statement;
  j["predicted"] = predicted;
  j["empirical"] = empirical;
  j["match"] = match;
  if (!note.empty()) j["note"] = note;
  return j;
}

bool VerifyReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.match; });
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  auto blocks = nlohmann::ordered_json::array();
  for (const auto& c : claims) blocks.push_back(c.to_json());
  j["claims"] = std::move(blocks);
  j["notes"] = notes;
  j["match"] = all_pass();
  return j;
}

std::string VerifyReport::table() const {
  std::size_t width = 0;
  for (const auto& c : claims) width = std::max(width, c.name.size());
  std::string out;
  for (const auto& c : claims) {
    out += c.match ? "PASS  " : "FAIL  ";
    out += c.name;
    out.append(width - c.name.size() + 2, ' ');
    out += c.statement;
    out += '\n';
  }
  for (const auto& note : notes) out += "note: " + note + "\n";
  return out;
}

namespace {

bool half_odd(const Field& f) { return f.half() % 2 == 1; }

ClaimResult histogram_claim(std::string name, std::string statement, const ValueHistogram& predicted,
                            const ValueHistogram& empirical) {
  return {std::move(name), std::move(statement), predicted.entries_json(), empirical.entries_json(),
          predicted == empirical, {}};
}

ClaimResult prediction_claim(std::string name, std::string statement, std::string_view prediction, int n, int k,
                             const ValueHistogram& empirical) {
  return histogram_claim(std::move(name), std::move(statement), predict(prediction, n, k).histogram, empirical);
}

ClaimResult count_claim(std::string name, std::string statement, const BigInt& predicted, const BigInt& empirical) {
  return {std::move(name), std::move(statement), to_decimal(predicted), to_decimal(empirical), predicted == empirical,
          {}};
}

ClaimResult flag_claim(std::string name, std::string statement, bool holds, nlohmann::ordered_json empirical = {}) {
  return {std::move(name), std::move(statement), true, empirical.is_null() ? nlohmann::ordered_json(holds) : empirical,
          holds, {}};
}

}  // namespace

std::vector<ClaimResult> walsh_claims(const Field& field, int k) {
  const int n = field.n();
  const QuadForms forms(field, k);
  const auto e_all = all_elements(field);
  const auto e_star = nonzero_elements(field);
  const auto f_all = subfield_all(field);
  const auto f_star = subfield_nonzero(field);
  const std::vector<Element> zero{kZero}, one{kOne};
  std::vector<ClaimResult> out;

  // b in E*, c = 0
  {
    const auto at0 = spectrum_distribution(forms, e_star, zero, zero);
    const auto at1 = spectrum_distribution(forms, e_star, zero, one);
    if (half_odd(field)) {
      out.push_back(flag_claim("walsh.b_only.at_zero_vanishes", "f^w_{b,0}(0) = 0 for every b in E*",
                               at0 == ValueHistogram{{0, BigInt(field.order())}}, at0.entries_json()));
      out.push_back(prediction_claim("walsh.b_only.at_one", "distribution of f^w_{b,0}(1), b in E*",
                                     "b_only_walsh_at_one_odd", n, k, at1));
    } else {
      out.push_back(prediction_claim("walsh.b_only.at_zero", "distribution of f^w_{b,0}(0), b in E*",
                                     "b_only_walsh_at_zero_even", n, k, at0));
      out.push_back(prediction_claim("walsh.b_only.at_one", "distribution of f^w_{b,0}(1), b in E*",
                                     "b_only_walsh_at_one_even", n, k, at1));
    }
  }

  // b = 0, c in F*
  out.push_back(prediction_claim("walsh.c_only.at_zero", "distribution of f^w_{0,c}(0), c in F*",
                                 "c_only_walsh_at_zero", n, k, spectrum_distribution(forms, zero, f_star, zero)));
  out.push_back(prediction_claim("walsh.c_only.at_one", "distribution of f^w_{0,c}(1), c in F*",
                                 "c_only_walsh_at_one", n, k, spectrum_distribution(forms, zero, f_star, one)));

  out.push_back(prediction_claim("walsh.aggregate", "all transform values of f_{b,c}, (b, c) in E x F",
                                 "walsh_aggregate", n, k, spectrum_distribution(forms, e_all, f_all, e_all)));

  const std::string parity = half_odd(field) ? "odd" : "even";
  out.push_back(prediction_claim("walsh.at_zero", "distribution of f^w_{b,c}(0), (b, c) in E* x F*",
                                 "walsh_at_zero_" + parity, n, k, spectrum_distribution(forms, e_star, f_star, zero)));
  out.push_back(prediction_claim("walsh.at_one", "distribution of f^w_{b,c}(1), (b, c) in E* x F*",
                                 "walsh_at_one_" + parity, n, k, spectrum_distribution(forms, e_star, f_star, one)));

  const auto at1_all = spectrum_distribution(forms, e_all, f_all, one);
  if (half_odd(field)) {
    ValueHistogram joint = at1_all;
    joint.merge(spectrum_distribution(forms, one, f_all, zero));
    out.push_back(prediction_claim("walsh.joint",
                                   "f^w_{b,c}(1) over E x F together with f^w_{1,c}(0) over F", "joint_walsh_odd",
                                   n, k, joint));
  } else {
    const auto [gammas, deltas] = gamma_delta_sets(field);
    const BigInt reps = BigInt(field.size()) + field.subfield_size() - 1;
    ValueHistogram joint = at1_all.scaled(reps);
    for (Element z : gammas)
      for (Element e : deltas) {
        std::vector<Element> cs;
        for (Element c : f_all)
          if (c != e) cs.push_back(c);
        const std::vector<Element> zs{z}, es{e};
        joint.merge(spectrum_distribution(forms, zs, cs, zero));
        joint.merge(spectrum_distribution(forms, e_all, es, zero));
      }
    out.push_back(prediction_claim(
        "walsh.joint",
        "f^w_{b,c}(1) over E x F (2^n + 2^{n/2} - 1 times) together with f^w_{b',c'}(0) over the "
        "union of {z} x (F minus {e}) and E x {e}, (z, e) in Gamma x Delta",
        "joint_walsh_even", n, k, joint));

    // Orbit equalities behind the even joint distribution.
    const auto base = spectrum_distribution(forms, e_star, f_star, zero);
    const BigInt third = (BigInt(field.order())) / 3;
    out.push_back(histogram_claim("walsh.orbit.gamma_times_fstar",
                                  "f^w(0) over Gamma x F*, (2^n - 1)/3 times, equals f^w(0) over E* x F*", base,
                                  spectrum_distribution(forms, gammas, f_star, zero, third)));
    out.push_back(histogram_claim("walsh.orbit.estar_times_delta",
                                  "f^w(0) over E* x Delta, 3 times, equals f^w(0) over E* x F*", base,
                                  spectrum_distribution(forms, e_star, deltas, zero, 3)));
    out.push_back(histogram_claim("walsh.orbit.gamma_times_delta",
                                  "f^w(0) over Gamma x Delta, 3 times, equals f^w(0) over Gamma x F*",
                                  spectrum_distribution(forms, gammas, f_star, zero),
                                  spectrum_distribution(forms, gammas, deltas, zero, 3)));
  }
  return out;
}

std::vector<ClaimResult> rank_claims(const Field& field, int k) {
  const int n = field.n();
  const QuadForms forms(field, k);
  std::vector<ClaimResult> out;

  {
    bool ok = true;
    ValueHistogram ranks;
    for (Element b : nonzero_elements(field)) {
      const int r = forms.rank(b, kZero);
      ranks.add(r);
      const bool cubic = field.log(b) % 3 == 0;
      const int expected = (half_odd(field) || cubic) ? n - 2 : n;
      ok = ok && r == expected;
    }
    out.push_back(flag_claim("rank.b_only",
                             half_odd(field) ? "f_{b,0} has rank n - 2 for every b in E*"
                                             : "f_{b,0} has rank n - 2 iff b is a cube, n otherwise",
                             ok, ranks.entries_json()));
  }
  {
    ValueHistogram ranks;
    for (Element c : subfield_nonzero(field)) ranks.add(forms.rank(kZero, c));
    out.push_back(flag_claim("rank.c_only", "f_{0,c} has rank n for every c in F*",
                             ranks == ValueHistogram{{n, BigInt(field.subfield_size() - 1)}}, ranks.entries_json()));
  }
  {
    const BigInt expected = rank_deficient_count(n);
    bool ok = true;
    std::set<long long> deficient_counts;
    std::set<int> seen;
    for (Element c : subfield_nonzero(field)) {
      long long deficient = 0;
      for (Element b : nonzero_elements(field)) {
        const int r = forms.rank(b, c);
        seen.insert(r);
        if (r == n - 2) ++deficient;
        else ok = ok && r == n;
      }
      deficient_counts.insert(deficient);
      ok = ok && BigInt(deficient) == expected;
    }
    nlohmann::ordered_json emp;
    emp["ranks_seen"] = seen;
    emp["deficient_counts_per_c"] = deficient_counts;
    ClaimResult c{"rank.b_and_c", "for each c in F*, rank f_{b,c} is n - 2 or n, with n - 2 for exactly the closed-form "
                                  "number of b in E*",
                  to_decimal(expected), emp, ok, {}};
    out.push_back(std::move(c));
  }
  return out;
}

ClaimResult affine_root_bound_claim(const Field& field) {
  // For fixed (eps, v) the root count of eps x^3 + v x + theta is the size of
  // the fibre of x -> eps x^3 + v x over theta; every theta is covered.
  const std::uint32_t size = field.size();
  std::vector<std::uint32_t> fibre(size);
  std::vector<std::uint32_t> cube(size);
  for (std::uint32_t x = 0; x < size; ++x) cube[x] = field.mul(field.mul(Element(x), Element(x)), Element(x)).bits;
  std::uint32_t worst = 0;
  ValueHistogram counts;
  std::vector<std::uint64_t> by_roots(size + 1, 0);
  for (std::uint32_t e = 1; e < size; ++e) {
    for (std::uint32_t v = 0; v < size; ++v) {
      std::fill(fibre.begin(), fibre.end(), 0);
      for (std::uint32_t x = 0; x < size; ++x)
        ++fibre[field.mul(Element(e), Element(cube[x])).bits ^ field.mul(Element(v), Element(x)).bits];
      for (std::uint32_t theta = 1; theta < size; ++theta) {
        worst = std::max(worst, fibre[theta]);
        ++by_roots[fibre[theta]];
      }
    }
  }
  for (std::uint32_t r = 0; r <= size; ++r)
    if (by_roots[r]) counts.add(r, BigInt(by_roots[r]));
  nlohmann::ordered_json emp;
  emp["max_roots"] = worst;
  emp["root_count_histogram"] = counts.entries_json();
  return {"equation.affine_root_bound",
          "eps x^3 + v x + theta = 0 has at most 3 roots for all (eps, v, theta) in E* x E x E*",
          "<= 3",
          emp,
          worst <= 3,
          {}};
}

std::vector<ClaimResult> equation_claims(const Field& field, int k, bool force) {
  const int n = field.n();
  std::vector<ClaimResult> out;
  CensusOptions opts;
  opts.force = force;
  opts.triple_scans = n <= 6 || force;
  const auto c = census(field, k, opts);
  out.push_back(count_claim("equation.three_root_thetas",
                            "number of theta in E* whose reduced equation (min(k, n-k) form) has three roots",
                            c.n1.predicted, c.n1.empirical));
  out.push_back(count_claim("equation.three_root_thetas_other_side",
                            "the same count for the max(k, n-k) form of the reduced equation", c.n2.predicted,
                            c.n2.empirical));
  if (c.triple_scans) {
    out.push_back(count_claim("equation.triples_kasami", "|{(x,y,z) : x^{2^k+1} + y^{2^k+1} + z^{2^k+1} = 0}|",
                              c.pi1.predicted, c.pi1.empirical));
    out.push_back(count_claim("equation.triples_norm",
                              "|{(x,y,z) : x^{2^{n/2}+1} + y^{2^{n/2}+1} + z^{2^{n/2}+1} = 0}|", c.pi2.predicted,
                              c.pi2.empirical));
    auto both = count_claim("equation.triples_common", "size of the intersection of the two triple sets",
                            c.pi12.predicted, c.pi12.empirical);
    both.match = both.match && c.pi12_shape;
    both.note = c.pi12_shape ? "solutions are (0,0,0) and permutations of (x,x,0)"
                             : "solution set differs from (0,0,0) and permutations of (x,x,0)";
    out.push_back(std::move(both));
  } else {
    ClaimResult skipped{"equation.triples", "E^3 scans", nullptr, nullptr, true,
                        "skipped above n = 6 (use --force)"};
    out.push_back(std::move(skipped));
  }
  out.push_back(count_claim("equation.pairs_kasami", "|{(x,y) : x^{2^k+1} = y^{2^k+1}}|", c.phi1.predicted,
                            c.phi1.empirical));
  out.push_back(count_claim("equation.pairs_norm", "|{(x,y) : x^{2^{n/2}+1} = y^{2^{n/2}+1}}|", c.phi2.predicted,
                            c.phi2.empirical));
  out.push_back(count_claim("equation.pairs_common", "size of the intersection of the two pair sets",
                            c.phi12.predicted, c.phi12.empirical));
  for (int d = 0; d < 3; ++d)
    out.push_back(count_claim("equation.power_sum_" + std::to_string(d + 1),
                              "sum of f^w_{b,c}(0)^" + std::to_string(d + 1) + " over E* x F*",
                              c.power_sums[d].predicted, c.power_sums[d].empirical));
  out.push_back(affine_root_bound_claim(field));
  return out;
}

std::vector<ClaimResult> code_claims(const Field& field, int k, bool force) {
  const int n = field.n();
  std::vector<ClaimResult> out;
  const auto code = build_code(field, k, force);
  out.push_back(prediction_claim("code.weights", "weight distribution of the [2^n - 1, 5n/2] code", "code_weights", n,
                                 k, code.weights));
  const auto b = dual_low_weights(code, 3);
  nlohmann::ordered_json emp = nlohmann::ordered_json::array();
  bool zero = true;
  for (const auto& v : b) {
    emp.push_back(to_decimal(v));
    zero = zero && v == 0;
  }
  out.push_back({"code.dual_low_weights", "dual code has B_1 = B_2 = B_3 = 0", {"0", "0", "0"}, emp, zero, {}});
  return out;
}

namespace {

std::vector<std::vector<std::uint64_t>> sorted_bits(const SequenceFamily& fam) {
  std::vector<std::vector<std::uint64_t>> v;
  v.reserve(fam.size());
  for (const auto* s : fam.all()) v.push_back(s->words());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::vector<std::uint64_t>> sorted_bits(const std::vector<BinarySequence>& seqs) {
  std::vector<std::vector<std::uint64_t>> v;
  for (const auto& s : seqs) v.push_back(s.words());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<ClaimResult> family_claims(const Field& field, int k) {
  const int n = field.n();
  const int h = field.half();
  std::vector<ClaimResult> out;
  const auto fam = build_family({field, k, FamilyKind::GeneralizedFk});

  out.push_back(count_claim("family.size",
                            half_odd(field) ? "family size 2^{3n/2} + 2^{n/2}" : "family size 2^{3n/2} + 2^{n/2} - 1",
                            family_size(n), fam.size()));

  const auto bits = sorted_bits(fam);
  const bool distinct = std::adjacent_find(bits.begin(), bits.end()) == bits.end();
  out.push_back(flag_claim("family.distinct", "all sequences are pairwise distinct", distinct));

  const auto small = build_family({field, k, FamilyKind::SmallKasami});
  const auto part1 = sorted_bits(fam.part1);
  bool subset = true;
  for (const auto& s : small.part1) subset = subset && std::binary_search(part1.begin(), part1.end(), s.words());
  out.push_back(flag_claim("family.contains_small_set", "the small Kasami set is a subfamily of the first part",
                           subset));

  const auto large = build_family({field, h + 1, FamilyKind::LargeKasami});
  const auto fk_large = build_family({field, h + 1, FamilyKind::GeneralizedFk});
  out.push_back(flag_claim("family.large_set_at_half_plus_one",
                           "F^k with k = n/2 + 1 equals the large Kasami set as a set of bit strings",
                           sorted_bits(large) == sorted_bits(fk_large)));

  out.push_back(prediction_claim("family.imbalance", "imbalance distribution over the family",
                                 imbalance_prediction_name(n), n, k, imbalance_histogram(fam)));

  // I(s) equals f^w_{gamma,delta}(1) - 1 on the first part and
  // f^w_{zeta,eta}(0) - 1 on the second.
  const QuadForms forms(field, k);
  bool bridge = true;
  for (const auto* s : fam.all()) {
    const auto& t = s->tag();
    const Element lambda = t.linear_coeff();
    bridge = bridge && imbalance(*s) == forms.walsh_point(t.kasami_coeff(), t.norm_coeff(), lambda) - 1;
  }
  out.push_back(flag_claim("family.imbalance_bridge",
                           "each sequence's imbalance equals the transform value of its form minus one", bridge));
  return out;
}

std::vector<ClaimResult> correlation_claims(const Field& field, int k, const VerifyOptions& options) {
  const int n = field.n();
  const int h = field.half();
  std::vector<ClaimResult> out;
  CorrelationOptions copts{options.jobs, options.force};
  const auto fam = build_family({field, k, FamilyKind::GeneralizedFk});
  const auto spectral = full_distribution_spectral(fam, copts);

  out.push_back(prediction_claim("correlation.distribution", "correlation distribution over all (i, j, tau)",
                                 correlation_prediction_name(n), n, k, spectral.histogram));

  const std::int64_t rm = r_max(spectral);
  out.push_back({"correlation.r_max", "maximum out-of-phase correlation magnitude 2^{n/2+1} + 1",
                 expected_r_max(n, FamilyKind::GeneralizedFk), rm, rm == expected_r_max(n, FamilyKind::GeneralizedFk),
                 {}});

  std::vector<std::int64_t> values;
  for (const auto& [v, c] : spectral.histogram) values.push_back(v);
  const std::int64_t s = std::int64_t{1} << h;
  std::vector<std::int64_t> expected{(std::int64_t{1} << n) - 1, 2 * s - 1, s - 1, -1, -s - 1, -2 * s - 1};
  out.push_back({"correlation.value_set", "exactly six correlation values occur", expected, values,
                 values == expected, {}});

  out.push_back(count_claim("correlation.in_phase", "value 2^n - 1 occurs exactly once per sequence",
                            BigInt(fam.size()), spectral.histogram.count(spectral.period)));

  const auto small = build_family({field, k, FamilyKind::SmallKasami});
  const auto small_report = full_distribution_spectral(small, copts);
  const std::int64_t small_rm = r_max(small_report);
  out.push_back({"correlation.small_set_r_max", "small Kasami set has maximum correlation 2^{n/2} + 1",
                 expected_r_max(n, FamilyKind::SmallKasami), small_rm,
                 small_rm == expected_r_max(n, FamilyKind::SmallKasami), {}});

  if (n <= 6 || options.force) {
    const auto brute = full_distribution_brute(fam, copts);
    out.push_back(histogram_claim("correlation.engines_agree", "brute and spectral engines give the same histogram",
                                  brute.histogram, spectral.histogram));
  } else {
    out.push_back({"correlation.engines_agree", "brute and spectral engines give the same histogram", nullptr,
                   nullptr, true, "brute engine skipped above n = 6 (use --force)"});
  }
  return out;
}

VerifyReport verify(const Field& field, int k, const VerifyOptions& options) {
  const int n = field.n();
  if (n > 10 || (n > 8 && !options.force))
    throw Error(ErrorCode::TooLarge, "verify runs for n <= 8 (n = 10 with --force)");
  if (!k_is_valid(n, k))
    throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " violates the gcd condition for n = " +
                                         std::to_string(n));
  VerifyReport report;
  report.n = n;
  report.k = k;
  auto append = [&](std::vector<ClaimResult> v) {
    for (auto& c : v) report.claims.push_back(std::move(c));
  };
  append(walsh_claims(field, k));
  append(rank_claims(field, k));
  append(equation_claims(field, k, options.force));
  append(code_claims(field, k, options.force));
  append(family_claims(field, k));
  append(correlation_claims(field, k, options));
  if (k == field.half() + 1)
    report.notes.push_back("k = n/2 + 1: this family is the large Kasami set (checked by family.large_set_at_half_plus_one)");
  return report;
}

}  // namespace gkasami
