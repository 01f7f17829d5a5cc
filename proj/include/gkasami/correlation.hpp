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
#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gkasami/families.hpp"
#include "gkasami/histogram.hpp"

namespace gkasami {

enum class Engine { Brute, Spectral };

std::string_view to_string(Engine engine);
Engine engine_from_string(std::string_view text);

/// Periodic correlation distribution over every ordered triple (i, j, tau),
/// in-phase autocorrelations included.
struct CorrelationReport {
  int n = 0;
  int k = 0;
  FamilyKind kind = FamilyKind::GeneralizedFk;
  Engine engine = Engine::Brute;
  std::uint64_t family_size = 0;
  std::uint32_t period = 0;
  ValueHistogram histogram;
  /// Number of (i, i, 0) triples, all of which have value `period`.
  std::uint64_t in_phase = 0;
};

/// sum_t (-1)^{s1(t) + s2(t + tau)}, computed as N - 2 wt(s1 xor s2 shifted).
std::int64_t correlate(const BinarySequence& s1, const BinarySequence& s2, std::uint32_t tau);

struct CorrelationOptions {
  unsigned jobs = 1;
  bool force = false;
};

/// Direct bit-packed inner products. Throws TooLarge above n = 6 unless forced.
CorrelationReport full_distribution_brute(const SequenceFamily& family, CorrelationOptions options = {});

/// Walsh-spectrum lookups: with s_i carrying (a_i, b_i, c_i) coefficients on
/// (x, x^{2^k+1}, x^{2^{n/2}+1}),
///   R_{i,j}(tau) = f^w_{b,c}(a) - 1,  a = a_i + a_j alpha^tau,
///   b = b_i + b_j alpha^{tau(2^k+1)},  c = c_i + c_j alpha^{tau(2^{n/2}+1)}.
/// Throws TooLarge above n = 10, where the spectrum cache passes 2 GB.
CorrelationReport full_distribution_spectral(const SequenceFamily& family, CorrelationOptions options = {});

CorrelationReport full_distribution(const SequenceFamily& family, Engine engine, CorrelationOptions options = {});

/// Largest |R| over all triples except i = j, tau = 0.
std::int64_t r_max(const CorrelationReport& report);

/// The abstract bound for the kind: 2^{n/2}+1 for the small set, 2^{n/2+1}+1 otherwise.
std::int64_t expected_r_max(int n, FamilyKind kind);

/// Report JSON. With a prediction, "match" is histogram equality; without
/// one (the small set), "predicted" is null and "match" compares r_max with
/// its expected value.
nlohmann::ordered_json report_json(const CorrelationReport& report, const std::optional<ValueHistogram>& predicted);

/// The closed-form histogram for the family's kind, if it has one.
std::optional<ValueHistogram> predicted_histogram(const CorrelationReport& report);

bool report_matches(const CorrelationReport& report, const std::optional<ValueHistogram>& predicted);

}  // namespace gkasami
