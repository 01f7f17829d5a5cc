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

#include "gkasami/correlation.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <thread>

#include "gkasami/error.hpp"
#include "gkasami/quadform.hpp"
#include "gkasami/theory.hpp"

namespace gkasami {

std::string_view to_string(Engine engine) { return engine == Engine::Brute ? "brute" : "spectral"; }

Engine engine_from_string(std::string_view text) {
  if (text == "brute") return Engine::Brute;
  if (text == "spectral") return Engine::Spectral;
  throw Error(ErrorCode::ParseError, "unknown engine '" + std::string(text) + "'");
}

std::int64_t correlate(const BinarySequence& s1, const BinarySequence& s2, std::uint32_t tau) {
  if (s1.length() != s2.length())
    throw Error(ErrorCode::LengthMismatch, "sequences of length " + std::to_string(s1.length()) + " and " +
                                               std::to_string(s2.length()));
  const BinarySequence r = s2.rotated(tau);
  std::int64_t diff = 0;
  for (std::size_t w = 0; w < r.words().size(); ++w) diff += std::popcount(s1.words()[w] ^ r.words()[w]);
  return static_cast<std::int64_t>(s1.length()) - 2 * diff;
}

namespace {

CorrelationReport empty_report(const SequenceFamily& family, Engine engine) {
  CorrelationReport r;
  r.n = family.params.field.n();
  r.k = family.params.effective_k();
  r.kind = family.params.kind;
  r.engine = engine;
  r.family_size = family.size();
  r.period = family.params.field.order();
  r.in_phase = family.size();
  return r;
}

/// Runs body(row_begin, row_end, counter) over row blocks on `jobs` threads
/// and merges the counters in block order.
template <typename Body>
ValueHistogram parallel_rows(std::size_t rows, unsigned jobs, std::int64_t lo, std::int64_t hi, Body body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(rows, 1))));
  std::vector<DenseCounter> counters(jobs, DenseCounter(lo, hi));
  std::vector<std::thread> workers;
  const std::size_t chunk = (rows + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t begin = std::min(rows, w * chunk);
    const std::size_t end = std::min(rows, begin + chunk);
    if (jobs == 1) body(begin, end, counters[w]);
    else workers.emplace_back([&, w, begin, end] { body(begin, end, counters[w]); });
  }
  for (auto& t : workers) t.join();
  for (unsigned w = 1; w < jobs; ++w) counters[0].merge(counters[w]);
  return counters[0].histogram();
}

}  // namespace

CorrelationReport full_distribution_brute(const SequenceFamily& family, CorrelationOptions options) {
  const Field& field = family.params.field;
  if (field.n() > 6 && !options.force)
    throw Error(ErrorCode::TooLarge, "brute engine is limited to n <= 6 (use --force)");
  CorrelationReport report = empty_report(family, Engine::Brute);
  const auto seqs = family.all();
  const std::uint32_t len = field.order();
  const std::size_t words = (len + 63) / 64;

  // rotations[j][tau] holds s_j shifted left by tau.
  std::vector<std::uint64_t> rotations(seqs.size() * len * words);
  for (std::size_t j = 0; j < seqs.size(); ++j)
    for (std::uint32_t tau = 0; tau < len; ++tau) {
      const auto r = seqs[j]->rotated(tau);
      std::copy(r.words().begin(), r.words().end(), rotations.begin() + static_cast<std::ptrdiff_t>((j * len + tau) * words));
    }

  const std::int64_t n_len = len;
  report.histogram = parallel_rows(seqs.size(), options.jobs, -n_len, n_len,
                                   [&](std::size_t begin, std::size_t end, DenseCounter& counter) {
                                     for (std::size_t i = begin; i < end; ++i) {
                                       const auto& a = seqs[i]->words();
                                       for (std::size_t j = 0; j < seqs.size(); ++j) {
                                         const std::uint64_t* rot = &rotations[j * len * words];
                                         for (std::uint32_t tau = 0; tau < len; ++tau, rot += words) {
                                           std::int64_t diff = 0;
                                           for (std::size_t w = 0; w < words; ++w) diff += std::popcount(a[w] ^ rot[w]);
                                           counter.add(n_len - 2 * diff);
                                         }
                                       }
                                     }
                                   });
  return report;
}

CorrelationReport full_distribution_spectral(const SequenceFamily& family, CorrelationOptions options) {
  const Field& field = family.params.field;
  const int n = field.n();
  const int h = field.half();
  if (n > 10 && !options.force)
    throw Error(ErrorCode::TooLarge, "spectral engine is limited to n <= 10 (spectrum cache)");
  CorrelationReport report = empty_report(family, Engine::Spectral);
  const int k = family.params.effective_k();
  const QuadForms forms(field, k);
  const std::uint32_t size = field.size();
  const std::uint32_t len = field.order();
  const std::size_t stride = std::size_t{size} << h;

  // cache[lambda * stride + (b << h | coord(c))] = f^w_{b,c}(lambda)
  std::vector<std::int32_t> cache(std::size_t{size} * stride);
  {
    std::vector<std::int32_t> spec(size);
    const auto sub = field.subfield_elements();
    for (std::uint32_t b = 0; b < size; ++b)
      for (std::uint32_t c = 0; c < field.subfield_size(); ++c) {
        forms.spectrum(Element(b), sub[c], spec);
        const std::size_t idx = (std::size_t{b} << h) | c;
        for (std::uint32_t l = 0; l < size; ++l) cache[l * stride + idx] = spec[l];
      }
  }

  struct Coeffs {
    bool linear;
    std::uint32_t b;
    std::uint32_t c;  // subfield coordinate
  };
  const auto seqs = family.all();
  std::vector<Coeffs> co;
  co.reserve(seqs.size());
  for (const auto* s : seqs) {
    const auto& t = s->tag();
    co.push_back({!t.linear_coeff().is_zero(), t.kasami_coeff().bits,
                  static_cast<std::uint32_t>(field.subfield_coord(t.norm_coeff()))});
  }

  const long long ek = (1LL << k) + 1;
  const long long eh = (1LL << h) + 1;
  const std::int64_t lim = std::int64_t{size} + 1;
  report.histogram = parallel_rows(
      len, options.jobs, -lim, lim, [&](std::size_t begin, std::size_t end, DenseCounter& counter) {
        std::vector<std::uint64_t> local(2 * static_cast<std::size_t>(lim) + 1, 0);
        for (std::size_t tau = begin; tau < end; ++tau) {
          const Element shift = field.exp(static_cast<long long>(tau));
          const Element mk = field.exp(ek * static_cast<long long>(tau));
          const Element mh = field.exp(eh * static_cast<long long>(tau));
          // The four possible linear coefficients a = a_i + a_j alpha^tau.
          const std::int32_t* slice[2][2] = {
              {&cache[0], &cache[std::size_t{shift.bits} * stride]},
              {&cache[std::size_t{1} * stride], &cache[std::size_t{(kOne + shift).bits} * stride]}};
          for (const auto& cj : co) {
            const std::uint32_t bj = field.mul(Element(cj.b), mk).bits;
            const int cjc = field.subfield_coord(field.mul(field.subfield_elements()[cj.c], mh));
            const std::size_t key = (std::size_t{bj} << h) | static_cast<std::size_t>(cjc);
            const std::int32_t* with_lin = slice[1][cj.linear];
            const std::int32_t* without_lin = slice[0][cj.linear];
            for (const auto& ci : co) {
              const std::size_t idx = ((std::size_t{ci.b} << h) | ci.c) ^ key;
              const std::int32_t w = (ci.linear ? with_lin : without_lin)[idx];
              ++local[static_cast<std::size_t>(w - 1 + lim)];
            }
          }
        }
        for (std::size_t v = 0; v < local.size(); ++v)
          if (local[v]) counter.add(static_cast<std::int64_t>(v) - lim, local[v]);
      });
  return report;
}

CorrelationReport full_distribution(const SequenceFamily& family, Engine engine, CorrelationOptions options) {
  return engine == Engine::Brute ? full_distribution_brute(family, options)
                                 : full_distribution_spectral(family, options);
}

std::int64_t r_max(const CorrelationReport& report) {
  std::int64_t best = 0;
  for (const auto& [value, count] : report.histogram) {
    BigInt c = count;
    if (value == static_cast<std::int64_t>(report.period)) c -= report.in_phase;
    if (c > 0) best = std::max(best, std::abs(value));
  }
  return best;
}

std::int64_t expected_r_max(int n, FamilyKind kind) {
  const int h = n / 2;
  return kind == FamilyKind::SmallKasami ? (std::int64_t{1} << h) + 1 : (std::int64_t{1} << (h + 1)) + 1;
}

std::optional<ValueHistogram> predicted_histogram(const CorrelationReport& report) {
  if (report.kind == FamilyKind::SmallKasami) return std::nullopt;
  return predict(correlation_prediction_name(report.n), report.n, report.k).histogram;
}

bool report_matches(const CorrelationReport& report, const std::optional<ValueHistogram>& predicted) {
  if (predicted) return *predicted == report.histogram;
  return r_max(report) == expected_r_max(report.n, report.kind);
}

nlohmann::ordered_json report_json(const CorrelationReport& report, const std::optional<ValueHistogram>& predicted) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["kind"] = to_string(report.kind);
  j["engine"] = to_string(report.engine);
  j["family_size"] = report.family_size;
  j["period"] = report.period;
  j["histogram"] = report.histogram.entries_json();
  j["r_max"] = r_max(report);
  j["predicted"] = predicted ? predicted->entries_json() : nlohmann::ordered_json(nullptr);
  j["match"] = report_matches(report, predicted);
  return j;
}

}  // namespace gkasami
