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

#include "gkasami/families.hpp"

#include <bit>
#include <cstdio>

#include "gkasami/error.hpp"

namespace gkasami {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::GeneralizedFk: return "fk";
    case FamilyKind::SmallKasami: return "small-kasami";
    case FamilyKind::LargeKasami: return "large-kasami";
  }
  return "?";
}

FamilyKind family_kind_from_string(std::string_view text) {
  if (text == "fk") return FamilyKind::GeneralizedFk;
  if (text == "small-kasami") return FamilyKind::SmallKasami;
  if (text == "large-kasami") return FamilyKind::LargeKasami;
  throw Error(ErrorCode::ParseError, "unknown family kind '" + std::string(text) + "'");
}

int FamilyParams::effective_k() const {
  return kind == FamilyKind::GeneralizedFk ? k : field.half() + 1;
}

void FamilyParams::validate() const {
  if (kind == FamilyKind::GeneralizedFk && !k_is_valid(field.n(), k))
    throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " violates the gcd condition for n = " +
                                         std::to_string(field.n()));
}

nlohmann::ordered_json SequenceTag::to_json(const Field& field) const {
  nlohmann::ordered_json j;
  if (variant == Variant::GammaDelta) {
    j["variant"] = "gamma_delta";
    j["gamma"] = element_to_string(field, gamma);
    j["delta"] = element_to_string(field, delta);
  } else {
    j["variant"] = "zeta_eta";
    j["zeta"] = element_to_string(field, zeta);
    j["eta"] = element_to_string(field, eta);
  }
  return j;
}

BinarySequence::BinarySequence(std::uint32_t length, SequenceTag tag)
    : length_(length), tag_(tag), words_((length + 63) / 64, 0) {}

void BinarySequence::set(std::uint32_t t, int value) {
  const std::uint64_t m = std::uint64_t{1} << (t % 64);
  if (value) words_[t / 64] |= m;
  else words_[t / 64] &= ~m;
}

std::uint32_t BinarySequence::weight() const {
  std::uint32_t w = 0;
  for (auto x : words_) w += static_cast<std::uint32_t>(std::popcount(x));
  return w;
}

BinarySequence BinarySequence::rotated(std::uint32_t tau) const {
  BinarySequence out(length_, tag_);
  if (length_ == 0) return out;
  tau %= length_;
  for (std::uint32_t t = 0; t < length_; ++t) {
    std::uint32_t src = t + tau;
    if (src >= length_) src -= length_;
    if (bit(src)) out.words_[t / 64] |= std::uint64_t{1} << (t % 64);
  }
  return out;
}

std::string BinarySequence::to_bits() const {
  std::string s(length_, '0');
  for (std::uint32_t t = 0; t < length_; ++t)
    if (bit(t)) s[t] = '1';
  return s;
}

std::string BinarySequence::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const std::uint32_t bytes = (length_ + 7) / 8;
  std::string s;
  s.reserve(2 * bytes);
  for (std::uint32_t i = 0; i < bytes; ++i) {
    const auto byte = static_cast<unsigned>(words_[i / 8] >> (8 * (i % 8)) & 0xFF);
    s.push_back(digits[byte >> 4]);
    s.push_back(digits[byte & 0xF]);
  }
  return s;
}

std::vector<const BinarySequence*> SequenceFamily::all() const {
  std::vector<const BinarySequence*> out;
  out.reserve(size());
  for (const auto& s : part1) out.push_back(&s);
  for (const auto& s : part2) out.push_back(&s);
  return out;
}

std::pair<std::vector<Element>, std::vector<Element>> gamma_delta_sets(const Field& field) {
  const int h = field.half();
  std::vector<Element> gammas, deltas;
  if (h % 2 == 1) {
    gammas = {kOne};
    const auto sub = field.subfield_elements();
    deltas.assign(sub.begin(), sub.end());
  } else {
    gammas = {kOne, field.alpha(), field.mul(field.alpha(), field.alpha())};
    const std::uint32_t count = (field.subfield_size() - 1) / 3;
    Element d = kOne;
    for (std::uint32_t i = 0; i < count; ++i) {
      deltas.push_back(d);
      d = field.mul(d, field.beta());
    }
  }
  return {gammas, deltas};
}

BinarySequence m_sequence(const Field& field) {
  const int n = field.n();
  const std::uint32_t poly = field.poly();
  const std::uint32_t len = field.order();
  auto p = [&](int i) { return static_cast<int>(poly >> i & 1); };

  // Newton's identities over GF(2) give the power sums tr(alpha^i) directly
  // from the coefficients of the minimal polynomial of alpha.
  std::vector<int> u(len, 0);
  for (int i = 1; i < n; ++i) {
    int s = (i % 2) ? p(n - i) : 0;
    for (int j = 1; j < i; ++j) s ^= p(n - j) & u[i - j];
    u[i] = s;
  }
  for (std::uint32_t t = n; t < len; ++t) {
    int s = 0;
    for (int i = 0; i < n; ++i) s ^= p(i) & u[t - n + i];
    u[t] = s;
  }
  BinarySequence seq(len, SequenceTag::gamma_delta(kZero, kZero));
  for (std::uint32_t t = 0; t < len; ++t) seq.set(t, u[t]);
  return seq;
}

int sequence_term(const FamilyParams& params, const SequenceTag& tag, std::uint32_t t) {
  const Field& f = params.field;
  const long long ek = (1LL << params.effective_k()) + 1;
  const long long eh = (1LL << f.half()) + 1;
  const Element x = f.exp(t);
  const Element lin = f.mul(tag.linear_coeff(), x);
  const Element quad = f.mul(tag.kasami_coeff(), f.exp(ek * t));
  return f.trace1(lin + quad) ^ f.subtrace1(f.mul(tag.norm_coeff(), f.exp(eh * t)));
}

namespace {

std::vector<std::uint64_t> term_words(const Field& f, int k, Element lin, Element quad, Element norm) {
  FamilyParams p{f, k, FamilyKind::GeneralizedFk};
  SequenceTag tag = SequenceTag::zeta_eta(quad, norm);
  BinarySequence s(f.order());
  for (std::uint32_t t = 0; t < f.order(); ++t) {
    int b = sequence_term(p, tag, t);
    if (!lin.is_zero()) b ^= f.trace1(f.mul(lin, f.exp(t)));
    s.set(t, b);
  }
  return s.words();
}

void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

BinarySequence from_words(std::uint32_t len, SequenceTag tag, const std::vector<std::uint64_t>& words) {
  BinarySequence s(len, tag);
  for (std::uint32_t t = 0; t < len; ++t)
    if (words[t / 64] >> (t % 64) & 1) s.set(t, 1);
  return s;
}

// F^k and the small set, from the GF(2)-linearity of s in (gamma, delta):
// every sequence is the m-sequence XOR a combination of basis sequences.
SequenceFamily build_linear(const FamilyParams& params) {
  const Field& f = params.field;
  const int h = f.half();
  const int k = params.effective_k();
  const std::uint32_t len = f.order();
  const auto sub = f.subfield_elements();

  const auto base = term_words(f, k, kOne, kZero, kZero);
  std::vector<std::vector<std::uint64_t>> delta_basis, gamma_basis;
  for (int i = 0; i < h; ++i) delta_basis.push_back(term_words(f, k, kZero, kZero, sub[std::size_t{1} << i]));
  const bool small = params.kind == FamilyKind::SmallKasami;
  if (!small)
    for (int i = 0; i < f.n(); ++i) gamma_basis.push_back(term_words(f, k, kZero, Element(1u << i), kZero));

  SequenceFamily fam{params, {}, {}};
  const std::uint32_t gamma_count = small ? 1 : f.size();
  fam.part1.reserve(std::size_t{gamma_count} << h);
  for (std::uint32_t g = 0; g < gamma_count; ++g) {
    auto gw = base;
    for (int i = 0; i < f.n(); ++i)
      if (g >> i & 1) xor_into(gw, gamma_basis[i]);
    for (std::uint32_t d = 0; d < f.subfield_size(); ++d) {
      auto w = gw;
      for (int i = 0; i < h; ++i)
        if (d >> i & 1) xor_into(w, delta_basis[i]);
      fam.part1.push_back(from_words(len, SequenceTag::gamma_delta(Element(g), sub[d]), w));
    }
  }
  if (small) return fam;

  const auto [gammas, deltas] = gamma_delta_sets(f);
  for (Element z : gammas) {
    const auto zw = term_words(f, k, kZero, z, kZero);
    for (Element e : deltas) {
      auto w = zw;
      xor_into(w, term_words(f, k, kZero, kZero, e));
      fam.part2.push_back(from_words(len, SequenceTag::zeta_eta(z, e), w));
    }
  }
  return fam;
}

// The large set, assembled as the m-sequence u(t) = tr(alpha^t) plus shifted
// decimations of itself:
//   tr(gamma alpha^{td})  = u(log gamma + t d)
//   tr_F(delta alpha^{te}) = tr(lambda delta alpha^{te}) = u(log lambda + log delta + t e)
// where lambda + lambda^{2^{n/2}} = 1.
SequenceFamily build_large(const FamilyParams& params) {
  const Field& f = params.field;
  const int h = f.half();
  const std::uint64_t len = f.order();
  const std::uint64_t d = (std::uint64_t{1} << (h + 1)) + 1;
  const std::uint64_t e = (std::uint64_t{1} << h) + 1;
  const BinarySequence u = m_sequence(f);

  std::uint64_t lambda_log = 0;
  for (std::uint32_t x = 1; x < f.size(); ++x) {
    if ((Element(x) + f.frobenius(Element(x), h)) == kOne) {
      lambda_log = f.log(Element(x));
      break;
    }
  }

  auto make = [&](SequenceTag tag, bool with_u, Element g, Element dl) {
    BinarySequence s(static_cast<std::uint32_t>(len), tag);
    const std::uint64_t gl = g.is_zero() ? 0 : f.log(g);
    const std::uint64_t dlog = dl.is_zero() ? 0 : (lambda_log + f.log(dl)) % len;
    for (std::uint64_t t = 0; t < len; ++t) {
      int b = with_u ? u.bit(static_cast<std::uint32_t>(t)) : 0;
      if (!g.is_zero()) b ^= u.bit(static_cast<std::uint32_t>((gl + t * d) % len));
      if (!dl.is_zero()) b ^= u.bit(static_cast<std::uint32_t>((dlog + t * e) % len));
      s.set(static_cast<std::uint32_t>(t), b);
    }
    return s;
  };

  SequenceFamily fam{params, {}, {}};
  const auto sub = f.subfield_elements();
  fam.part1.reserve(std::size_t{f.size()} << h);
  for (std::uint32_t g = 0; g < f.size(); ++g)
    for (Element dl : sub) fam.part1.push_back(make(SequenceTag::gamma_delta(Element(g), dl), true, Element(g), dl));
  const auto [gammas, deltas] = gamma_delta_sets(f);
  for (Element z : gammas)
    for (Element dl : deltas) fam.part2.push_back(make(SequenceTag::zeta_eta(z, dl), false, z, dl));
  return fam;
}

}  // namespace

SequenceFamily build_family(const FamilyParams& params) {
  params.validate();
  if (params.kind == FamilyKind::LargeKasami) return build_large(params);
  return build_linear(params);
}

std::int64_t imbalance(const BinarySequence& seq) {
  return static_cast<std::int64_t>(seq.length()) - 2 * static_cast<std::int64_t>(seq.weight());
}

ValueHistogram imbalance_histogram(const SequenceFamily& family) {
  ValueHistogram h;
  for (const auto* s : family.all()) h.add(imbalance(*s));
  return h;
}

ExportFormat export_format_from_string(std::string_view text) {
  if (text == "bits") return ExportFormat::Bits;
  if (text == "hex") return ExportFormat::Hex;
  if (text == "json") return ExportFormat::Json;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(text) + "'");
}

std::string export_family(const SequenceFamily& family, ExportFormat format) {
  std::string out;
  if (format == ExportFormat::Json) {
    const Field& f = family.params.field;
    nlohmann::ordered_json j;
    j["n"] = f.n();
    j["k"] = family.params.effective_k();
    j["kind"] = to_string(family.params.kind);
    j["poly"] = poly_to_hex(f.poly());
    j["family_size"] = family.size();
    j["period"] = f.order();
    auto seqs = nlohmann::ordered_json::array();
    for (const auto* s : family.all()) {
      nlohmann::ordered_json e;
      e["tag"] = s->tag().to_json(f);
      e["bits_hex"] = s->to_hex();
      seqs.push_back(std::move(e));
    }
    j["sequences"] = std::move(seqs);
    return j.dump(2) + "\n";
  }
  for (const auto* s : family.all()) {
    out += format == ExportFormat::Bits ? s->to_bits() : s->to_hex();
    out += '\n';
  }
  return out;
}

}  // namespace gkasami
