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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gkasami/claims.hpp"
#include "gkasami/correlation.hpp"
#include "gkasami/error.hpp"
#include "gkasami/families.hpp"
#include "gkasami/fieldeq.hpp"
#include "gkasami/theory.hpp"

using namespace gkasami;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
auto timed(F&& fn, double& secs) {
  const auto start = Clock::now();
  auto out = fn();
  secs = seconds_since(start);
  return out;
}

SequenceFamily family(int n, int k, FamilyKind kind = FamilyKind::GeneralizedFk) {
  return build_family({make_field(n), k, kind});
}

const ValueHistogram kSixHistogram{{63, 520},      {15, 1637600},  {7, 3668224},
                                   {-1, 7893232},  {-9, 2853064},  {-17, 982560}};
const ValueHistogram kFourHistogram{{15, 67}, {7, 6902}, {3, 18418}, {-1, 28598}, {-5, 11044}, {-9, 2306}};

std::string fmt_time(const char* label, double secs) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s %.2fs", label, secs);
  return buf;
}

Outcome exact_n6() {
  Outcome o;
  const auto fam = family(6, 2);
  double tb = 0, ts = 0;
  const auto brute = timed([&] { return full_distribution_brute(fam); }, tb);
  const auto spec = timed([&] { return full_distribution_spectral(fam); }, ts);
  o.require(brute.histogram == kSixHistogram, "brute histogram differs");
  o.require(spec.histogram == kSixHistogram, "spectral histogram differs");
  o.require(tb <= 60, "brute over 60 s");
  o.require(ts <= 5, "spectral over 5 s");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt_time("brute", tb) + ", " + fmt_time("spectral", ts);
  return o;
}

Outcome exact_n4() {
  Outcome o;
  const auto start = Clock::now();
  const auto fam = family(4, 1);
  const auto brute = full_distribution_brute(fam);
  const auto spec = full_distribution_spectral(fam);
  const double t = seconds_since(start);
  o.require(brute.histogram == kFourHistogram, "brute histogram differs");
  o.require(spec.histogram == kFourHistogram, "spectral histogram differs");
  o.require(t < 1, "over 1 s");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt_time("both engines", t);
  return o;
}

Outcome closed_form_correlation() {
  Outcome o;
  o.require(predict("correlation_odd", 6, 2).histogram == full_distribution_spectral(family(6, 2)).histogram,
            "n = 6 differs");
  o.require(predict("correlation_even", 4, 1).histogram == full_distribution_spectral(family(4, 1)).histogram,
            "n = 4 differs");
  double t = 0;
  const auto eight = timed([] { return full_distribution_spectral(family(8, 3)); }, t);
  o.require(predict("correlation_even", 8, 3).histogram == eight.histogram, "n = 8 (extended) differs");
  o.require(t <= 600, "n = 8 over 10 min");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt_time("n = 8 extended", t);
  return o;
}

Outcome max_correlation() {
  Outcome o;
  const auto r4 = r_max(full_distribution_spectral(family(4, 1)));
  const auto r6 = r_max(full_distribution_spectral(family(6, 2)));
  const auto rs = r_max(full_distribution_brute(family(6, 0, FamilyKind::SmallKasami)));
  o.require(r4 == 9, "n = 4 gives " + std::to_string(r4));
  o.require(r6 == 17, "n = 6 gives " + std::to_string(r6));
  o.require(rs == 9, "small set at n = 6 gives " + std::to_string(rs));
  if (o.pass) o.detail = "9, 17, small 9";
  return o;
}

Outcome three_root_count() {
  Outcome o;
  const auto start = Clock::now();
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}, {8, 3}, {10, 4}}) {
    const BigInt expected = (n / 2) % 2 ? (pow2(n + 1) - pow2(n / 2 + 1) - 4) / 3 : (pow2(n + 1) - 2) / 3;
    const auto got = count_three_root_thetas(make_field(n), k, true);
    o.require(BigInt(got) == expected, "n = " + std::to_string(n) + " gives " + std::to_string(got));
  }
  const double t = seconds_since(start);
  o.require(t <= 30, "over 30 s");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt_time("n = 4..10", t);
  return o;
}

Outcome code_weights() {
  Outcome o;
  const auto start = Clock::now();
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}}) {
    const auto code = build_code(make_field(n), k);
    o.require(code.weights == predict("code_weights", n, k).histogram, "n = " + std::to_string(n) + " differs");
  }
  const double t = seconds_since(start);
  o.require(t <= 10, "over 10 s");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt_time("n = 4, 6", t);
  return o;
}

Outcome dual_weights() {
  Outcome o;
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}}) {
    const auto b = dual_low_weights(build_code(make_field(n), k), 3);
    o.require(b == std::vector<BigInt>{0, 0, 0}, "n = " + std::to_string(n) + " has a nonzero B_1..B_3");
  }
  if (o.pass) o.detail = "B_1 = B_2 = B_3 = 0 at n = 4, 6";
  return o;
}

Outcome walsh_suite() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t count = 0;
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}, {8, 3}}) {
    for (const auto& c : walsh_claims(make_field(n), k)) {
      ++count;
      o.require(c.match, c.name + " at n = " + std::to_string(n));
    }
  }
  const double t = seconds_since(start);
  o.require(t <= 60, "over 60 s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(count) + " distributions, " + fmt_time("total", t);
  return o;
}

Outcome affine_bound() {
  Outcome o;
  for (int n : {4, 6}) {
    const auto c = affine_root_bound_claim(make_field(n));
    o.require(c.match, "n = " + std::to_string(n) + ": " + c.empirical.dump());
  }
  if (o.pass) o.detail = "at most 3 roots over E* x E x E* at n = 4, 6";
  return o;
}

Outcome census_counts() {
  Outcome o;
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}}) {
    const auto c = census(make_field(n), k);
    o.require(c.all_match(), "n = " + std::to_string(n) + ": " + c.to_json().dump());
  }
  if (o.pass) o.detail = "triples, pairs and power sums at n = 4, 6";
  return o;
}

Outcome imbalance_distribution() {
  Outcome o;
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}, {8, 3}}) {
    const auto got = imbalance_histogram(family(n, k));
    o.require(got == predict(imbalance_prediction_name(n), n).histogram, "n = " + std::to_string(n) + " differs");
  }
  if (o.pass) o.detail = "n = 4, 6, 8";
  return o;
}

Outcome structure() {
  Outcome o;
  auto bits = [](const SequenceFamily& fam) {
    std::set<std::vector<std::uint64_t>> s;
    for (const auto* q : fam.all()) s.insert(q->words());
    return s;
  };
  o.require(bits(family(6, 4)) == bits(family(6, 0, FamilyKind::LargeKasami)), "n = 6 large set differs");
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}}) {
    std::set<std::vector<std::uint64_t>> part1;
    for (const auto& s : family(n, k).part1) part1.insert(s.words());
    for (const auto& s : family(n, 0, FamilyKind::SmallKasami).part1)
      o.require(part1.count(s.words()) == 1, "small set not inside part1 at n = " + std::to_string(n));
  }
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}, {8, 3}}) {
    const BigInt expected = pow2(3 * n / 2) + pow2(n / 2) - ((n / 2) % 2 ? 0 : 1);
    const auto fam = family(n, k);
    o.require(BigInt(fam.size()) == expected, "size at n = " + std::to_string(n));
    o.require(bits(fam).size() == fam.size(), "duplicate sequences at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "large set, small subfamily, sizes 67, 520, 4111";
  return o;
}

Outcome engine_equivalence() {
  Outcome o;
  for (int n : {4, 6})
    for (auto kind : {FamilyKind::GeneralizedFk, FamilyKind::SmallKasami, FamilyKind::LargeKasami}) {
      const auto fam = family(n, n == 4 ? 1 : 2, kind);
      const auto b = full_distribution_brute(fam);
      const auto s = full_distribution_spectral(fam);
      auto jb = report_json(b, predicted_histogram(b));
      auto js = report_json(s, predicted_histogram(s));
      jb.erase("engine");
      js.erase("engine");
      o.require(jb.dump() == js.dump(),
                std::string(to_string(kind)) + " at n = " + std::to_string(n) + " differs");
    }
  if (o.pass) o.detail = "reports identical apart from the engine name";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"correlation distribution n=6, both engines", exact_n6},
      {"correlation distribution n=4", exact_n4},
      {"closed-form correlation distribution n=4, 6, 8", closed_form_correlation},
      {"maximum correlation", max_correlation},
      {"three-root theta count n=4..10", three_root_count},
      {"code weight distribution n=4, 6", code_weights},
      {"vanishing low dual weights", dual_weights},
      {"Walsh distribution suite n=4, 6, 8", walsh_suite},
      {"affine root bound", affine_bound},
      {"triple, pair and power-sum counts", census_counts},
      {"imbalance distribution", imbalance_distribution},
      {"family structure", structure},
      {"engine equivalence", engine_equivalence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s %2zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures ? 1 : 0;
}
