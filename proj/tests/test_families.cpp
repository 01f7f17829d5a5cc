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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "gkasami/error.hpp"
#include "gkasami/families.hpp"
#include "gkasami/theory.hpp"
#include "oracles.hpp"

using namespace gkasami;

namespace {

FamilyParams fk(int n, int k) { return {make_field(n), k, FamilyKind::GeneralizedFk}; }

std::set<std::vector<std::uint64_t>> bit_set(const SequenceFamily& fam) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto* s : fam.all()) out.insert(s->words());
  return out;
}

/// s(t) from the definition, with oracle arithmetic.
int reference_term(const Field& f, int k, const SequenceTag& tag, std::uint32_t t) {
  const int n = f.n();
  const std::uint32_t x = oracle::pow(2, t, f.poly(), n);
  return oracle::trace1(oracle::mul(tag.linear_coeff().bits, x, f.poly(), n), f.poly(), n) ^
         oracle::f(tag.kasami_coeff().bits, tag.norm_coeff().bits, x, k, f.poly(), n);
}

}  // namespace

TEST_CASE("kind names") {
  for (auto kind : {FamilyKind::GeneralizedFk, FamilyKind::SmallKasami, FamilyKind::LargeKasami})
    CHECK(family_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS_AS(family_kind_from_string("gold"), Error);
  CHECK(export_format_from_string("hex") == ExportFormat::Hex);
  CHECK_THROWS_AS(export_format_from_string("csv"), Error);
}

TEST_CASE("gamma and delta sets") {
  {
    const auto f = make_field(6);
    const auto [g, d] = gamma_delta_sets(f);
    CHECK(g == std::vector<Element>{kOne});
    CHECK(d.size() == 8);
  }
  {
    const auto f = make_field(4);
    const auto [g, d] = gamma_delta_sets(f);
    CHECK(g == std::vector<Element>{kOne, f.alpha(), f.exp(2)});
    CHECK(d == std::vector<Element>{kOne});
  }
  {
    const auto f = make_field(8);
    const auto [g, d] = gamma_delta_sets(f);
    CHECK(g.size() * d.size() == 15);
    for (Element x : d) CHECK(f.in_subfield(x));
  }
}

TEST_CASE("family sizes") {
  for (int n : {4, 6, 8}) {
    const auto f = make_field(n);
    const int k = n / 2 + 1;
    const auto fam = build_family({f, k, FamilyKind::GeneralizedFk});
    CHECK(BigInt(fam.size()) == family_size(n));
    CHECK(fam.part1.size() == std::size_t{1} << (3 * n / 2));
    CHECK(fam.part2.size() == (std::size_t{1} << (n / 2)) - ((n / 2) % 2 ? 0 : 1));
    for (const auto* s : fam.all()) REQUIRE(s->length() == f.order());
  }
  CHECK(build_family(fk(6, 2)).size() == 520);
  CHECK(build_family(fk(4, 1)).size() == 67);
  CHECK(build_family({make_field(6), 0, FamilyKind::SmallKasami}).size() == 8);
}

TEST_CASE("bad k is rejected") {
  CHECK_THROWS_AS(build_family(fk(6, 3)), Error);
  CHECK_THROWS_AS(build_family(fk(4, 2)), Error);
  CHECK_NOTHROW(build_family({make_field(6), 3, FamilyKind::LargeKasami}));
  CHECK(FamilyParams{make_field(6), 3, FamilyKind::LargeKasami}.effective_k() == 4);
}

TEST_CASE("sequence terms") {
  const auto p = fk(6, 2);
  const auto f = p.field;
  for (std::uint32_t t = 0; t < 63; ++t)
    CHECK(sequence_term(p, SequenceTag::gamma_delta(kZero, kZero), t) == f.trace1(f.exp(t)));
  CHECK(sequence_term(p, SequenceTag::zeta_eta(kOne, kZero), 0) == 0);
}

TEST_CASE("built bits equal the definition") {
  for (auto [n, k] : {std::pair{4, 1}, {4, 3}, {6, 2}, {6, 4}}) {
    const auto p = fk(n, k);
    const auto fam = build_family(p);
    for (const auto* s : fam.all())
      for (std::uint32_t t = 0; t < s->length(); ++t) {
        REQUIRE(s->bit(t) == sequence_term(p, s->tag(), t));
        REQUIRE(s->bit(t) == reference_term(p.field, k, s->tag(), t));
      }
  }
}

TEST_CASE("recurrence output is the trace sequence") {
  for (int n : {4, 6, 8, 10}) {
    const auto f = make_field(n);
    const auto m = m_sequence(f);
    REQUIRE(m.length() == f.order());
    for (std::uint32_t t = 0; t < m.length(); ++t) REQUIRE(m.bit(t) == oracle::trace1(oracle::pow(2, t, f.poly(), n), f.poly(), n));
    CHECK(imbalance(m) == -1);
  }
}

TEST_CASE("sequences are pairwise distinct") {
  for (auto [n, k] : {std::pair{4, 1}, {6, 2}, {6, 4}, {8, 3}}) {
    const auto fam = build_family(fk(n, k));
    CHECK(bit_set(fam).size() == fam.size());
  }
}

TEST_CASE("small set sits inside part1") {
  for (auto [n, k] : {std::pair{4, 1}, {4, 3}, {6, 2}, {6, 4}}) {
    const auto small = build_family({make_field(n), 0, FamilyKind::SmallKasami});
    const auto fam = build_family(fk(n, k));
    std::set<std::vector<std::uint64_t>> part1;
    for (const auto& s : fam.part1) part1.insert(s.words());
    for (const auto& s : small.part1) REQUIRE(part1.count(s.words()) == 1);
  }
}

TEST_CASE("k = n/2 + 1 gives the large set") {
  for (int n : {4, 6, 8}) {
    const auto f = make_field(n);
    const auto large = build_family({f, 0, FamilyKind::LargeKasami});
    const auto fam = build_family({f, n / 2 + 1, FamilyKind::GeneralizedFk});
    CHECK(bit_set(large) == bit_set(fam));
    // tags carry over as well
    REQUIRE(large.size() == fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) REQUIRE(large[i].tag() == fam[i].tag());
  }
}

TEST_CASE("imbalance histograms") {
  CHECK(imbalance_histogram(build_family(fk(6, 2))) == predict("imbalance_odd", 6).histogram);
  CHECK(imbalance_histogram(build_family(fk(4, 1))) == predict("imbalance_even", 4).histogram);
  CHECK(imbalance_histogram(build_family(fk(8, 3))) == predict("imbalance_even", 8).histogram);
  const auto fam = build_family(fk(6, 2));
  for (const auto* s : fam.all()) {
    std::int64_t ref = 0;
    for (std::uint32_t t = 0; t < s->length(); ++t) ref += s->bit(t) ? -1 : 1;
    REQUIRE(imbalance(*s) == ref);
  }
  BinarySequence zeros(63);
  CHECK(imbalance(zeros) == 63);
}

TEST_CASE("rotation") {
  const auto m = m_sequence(make_field(6));
  for (std::uint32_t tau : {0u, 1u, 17u, 62u}) {
    const auto r = m.rotated(tau);
    for (std::uint32_t t = 0; t < 63; ++t) REQUIRE(r.bit(t) == m.bit((t + tau) % 63));
  }
  CHECK(m.rotated(63).same_bits(m));
}

TEST_CASE("export formats") {
  const auto fam = build_family(fk(4, 1));
  const auto bits = export_family(fam, ExportFormat::Bits);
  const auto hex = export_family(fam, ExportFormat::Hex);
  CHECK(std::count(bits.begin(), bits.end(), '\n') == 67);
  CHECK(std::count(hex.begin(), hex.end(), '\n') == 67);
  CHECK(bits.substr(0, 15) == fam[0].to_bits());
  // 15 bits -> 2 bytes
  CHECK(fam[0].to_hex().size() == 4);

  BinarySequence s(15);
  s.set(0, 1);
  s.set(9, 1);
  CHECK(s.to_bits() == "100000000100000");
  CHECK(s.to_hex() == "0102");
  CHECK(s.weight() == 2);

  const auto j = nlohmann::json::parse(export_family(fam, ExportFormat::Json));
  CHECK(j["family_size"] == 67);
  CHECK(j["period"] == 15);
  CHECK(j["poly"] == "0x13");
  CHECK(j["sequences"].size() == 67);
  CHECK(j["sequences"][0]["tag"]["gamma"] == "0");
  CHECK(j["sequences"][66]["tag"]["variant"] == "zeta_eta");
  CHECK(j["sequences"][0]["bits_hex"] == fam[0].to_hex());
}
