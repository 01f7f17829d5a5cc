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
#include "gkasami/correlation.hpp"
#include "gkasami/error.hpp"
#include "gkasami/theory.hpp"
#include "oracles.hpp"

using namespace gkasami;

namespace {

FamilyParams params(int n, int k, FamilyKind kind = FamilyKind::GeneralizedFk) { return {make_field(n), k, kind}; }

}  // namespace

TEST_CASE("pairwise correlation against the plain loop") {
  const auto fam = build_family(params(6, 2));
  for (int i = 0; i < 500; ++i) {
    const auto& a = fam[oracle::uniform(0, 519)];
    const auto& b = fam[oracle::uniform(0, 519)];
    const auto tau = oracle::uniform(0, 62);
    REQUIRE(correlate(a, b, tau) == oracle::correlate(a, b, tau));
    REQUIRE(correlate(a, b, tau) == correlate(b, a, (63 - tau) % 63));
  }
  for (const auto* s : fam.all()) REQUIRE(correlate(*s, *s, 0) == 63);
}

TEST_CASE("m-sequence autocorrelation is two-valued") {
  const auto m = m_sequence(make_field(8));
  CHECK(correlate(m, m, 0) == 255);
  for (std::uint32_t tau = 1; tau < 255; ++tau) REQUIRE(correlate(m, m, tau) == -1);
}

TEST_CASE("length mismatch") {
  const auto a = m_sequence(make_field(4)), b = m_sequence(make_field(6));
  CHECK_THROWS_AS(correlate(a, b, 0), Error);
}

TEST_CASE("reference distributions") {
  const auto six = full_distribution(build_family(params(6, 2)), Engine::Spectral);
  CHECK(six.histogram == ValueHistogram{{63, 520}, {15, 1637600}, {7, 3668224}, {-1, 7893232}, {-9, 2853064}, {-17, 982560}});
  CHECK(six.histogram.total() == 17035200);
  CHECK(six.in_phase == 520);
  CHECK(r_max(six) == 17);

  const auto four = full_distribution(build_family(params(4, 1)), Engine::Brute);
  CHECK(four.histogram == ValueHistogram{{15, 67}, {7, 6902}, {3, 18418}, {-1, 28598}, {-5, 11044}, {-9, 2306}});
  CHECK(r_max(four) == 9);
  CHECK(report_matches(four, predicted_histogram(four)));

  const auto small = full_distribution(build_family(params(6, 0, FamilyKind::SmallKasami)), Engine::Brute);
  CHECK(r_max(small) == 9);
  CHECK_FALSE(predicted_histogram(small).has_value());
  CHECK(report_matches(small, std::nullopt));
  CHECK(expected_r_max(6, FamilyKind::SmallKasami) == 9);
  CHECK(expected_r_max(6, FamilyKind::LargeKasami) == 17);
}

TEST_CASE("engines agree") {
  for (int n : {4, 6})
    for (auto kind : {FamilyKind::GeneralizedFk, FamilyKind::SmallKasami, FamilyKind::LargeKasami}) {
      const int k = n == 4 ? 1 : 2;
      const auto fam = build_family(params(n, k, kind));
      const auto b = full_distribution_brute(fam);
      const auto s = full_distribution_spectral(fam);
      REQUIRE(b.histogram == s.histogram);
      REQUIRE(b.histogram.total() == BigInt(fam.size()) * fam.size() * fam.params.field.order());
      auto jb = report_json(b, predicted_histogram(b));
      auto js = report_json(s, predicted_histogram(s));
      CHECK(jb["engine"] == "brute");
      CHECK(js["engine"] == "spectral");
      jb.erase("engine");
      js.erase("engine");
      CHECK(jb.dump() == js.dump());
    }
  const auto other = build_family(params(6, 4));
  CHECK(full_distribution_brute(other).histogram == full_distribution_spectral(other).histogram);
}

TEST_CASE("worker count does not change the result") {
  const auto fam = build_family(params(6, 2));
  const auto one = report_json(full_distribution_brute(fam, {.jobs = 1}), std::nullopt).dump();
  CHECK(report_json(full_distribution_brute(fam, {.jobs = 3}), std::nullopt).dump() == one);
  const auto spec = report_json(full_distribution_spectral(fam, {.jobs = 1}), std::nullopt).dump();
  CHECK(report_json(full_distribution_spectral(fam, {.jobs = 4}), std::nullopt).dump() == spec);
}

TEST_CASE("resource guards") {
  const auto fam = build_family(params(8, 1));
  CHECK_THROWS_AS(full_distribution_brute(fam), Error);
  CHECK(engine_from_string("brute") == Engine::Brute);
  CHECK_THROWS_AS(engine_from_string("fast"), Error);
}

TEST_CASE("report JSON shape") {
  const auto r = full_distribution(build_family(params(4, 1)), Engine::Spectral);
  const auto j = report_json(r, predicted_histogram(r));
  CHECK(j["n"] == 4);
  CHECK(j["family_size"] == 67);
  CHECK(j["period"] == 15);
  CHECK(j["r_max"] == 9);
  CHECK(j["match"] == true);
  CHECK(ValueHistogram::from_json(j["histogram"]) == r.histogram);
}
