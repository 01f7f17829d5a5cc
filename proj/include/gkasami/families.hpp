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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gkasami/gf2n.hpp"
#include "gkasami/histogram.hpp"

namespace gkasami {

enum class FamilyKind { GeneralizedFk, SmallKasami, LargeKasami };

std::string_view to_string(FamilyKind kind);
FamilyKind family_kind_from_string(std::string_view text);

struct FamilyParams {
  Field field;
  int k = 0;
  FamilyKind kind = FamilyKind::GeneralizedFk;

  /// The k actually used: n/2 + 1 for the Kasami kinds, `k` otherwise.
  int effective_k() const;
  /// Throws InvalidK for a generalized family whose k fails the gcd condition.
  void validate() const;
};

/// Which construction parameters a sequence carries:
///   GammaDelta: s(t) = tr(alpha^t + gamma alpha^{t(2^k+1)}) + tr_F(delta alpha^{t(2^{n/2}+1)})
///   ZetaEta:    s(t) = tr(zeta alpha^{t(2^k+1)}) + tr_F(eta alpha^{t(2^{n/2}+1)})
struct SequenceTag {
  enum class Variant { GammaDelta, ZetaEta };

  Variant variant = Variant::GammaDelta;
  Element gamma;
  Element delta;
  Element zeta;
  Element eta;

  static SequenceTag gamma_delta(Element g, Element d) { return {Variant::GammaDelta, g, d, {}, {}}; }
  static SequenceTag zeta_eta(Element z, Element e) { return {Variant::ZetaEta, {}, {}, z, e}; }

  /// Coefficient of tr(alpha^t): 1 for GammaDelta, 0 for ZetaEta.
  Element linear_coeff() const { return variant == Variant::GammaDelta ? kOne : kZero; }
  Element kasami_coeff() const { return variant == Variant::GammaDelta ? gamma : zeta; }
  Element norm_coeff() const { return variant == Variant::GammaDelta ? delta : eta; }

  nlohmann::ordered_json to_json(const Field& field) const;

  friend bool operator==(const SequenceTag&, const SequenceTag&) = default;
};

/// A period-N binary sequence, bit-packed LSB-first (bit t of the packed
/// array is s(t)).
class BinarySequence {
 public:
  BinarySequence() = default;
  explicit BinarySequence(std::uint32_t length, SequenceTag tag = {});

  std::uint32_t length() const { return length_; }
  const SequenceTag& tag() const { return tag_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  int bit(std::uint32_t t) const { return static_cast<int>(words_[t / 64] >> (t % 64) & 1); }
  void set(std::uint32_t t, int value);

  std::uint32_t weight() const;
  /// The sequence u(t) = s(t + tau mod N).
  BinarySequence rotated(std::uint32_t tau) const;

  std::string to_bits() const;
  /// LSB-first bytes, ceil(N/8) of them, as lowercase hex.
  std::string to_hex() const;

  /// Equality of the bit strings only; tags are ignored.
  bool same_bits(const BinarySequence& other) const { return length_ == other.length_ && words_ == other.words_; }

 private:
  std::uint32_t length_ = 0;
  SequenceTag tag_;
  std::vector<std::uint64_t> words_;
};

struct SequenceFamily {
  FamilyParams params;
  std::vector<BinarySequence> part1;
  std::vector<BinarySequence> part2;

  std::size_t size() const { return part1.size() + part2.size(); }
  const BinarySequence& operator[](std::size_t i) const {
    return i < part1.size() ? part1[i] : part2[i - part1.size()];
  }
  /// part1 then part2.
  std::vector<const BinarySequence*> all() const;
};

/// (Gamma, Delta): ({1}, F) when n/2 is odd, ({1, alpha, alpha^2},
/// {beta^0, ..., beta^{(2^{n/2}-1)/3 - 1}}) when n/2 is even.
std::pair<std::vector<Element>, std::vector<Element>> gamma_delta_sets(const Field& field);

/// tr(alpha^t) produced by the linear recurrence of the defining polynomial.
BinarySequence m_sequence(const Field& field);

int sequence_term(const FamilyParams& params, const SequenceTag& tag, std::uint32_t t);

SequenceFamily build_family(const FamilyParams& params);

/// #zeros - #ones over one period.
std::int64_t imbalance(const BinarySequence& seq);
ValueHistogram imbalance_histogram(const SequenceFamily& family);

enum class ExportFormat { Bits, Hex, Json };
ExportFormat export_format_from_string(std::string_view text);
/// One line per sequence for bits and hex; a JSON document for json.
std::string export_family(const SequenceFamily& family, ExportFormat format);

}  // namespace gkasami
