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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace gkasami {

using BigInt = boost::multiprecision::cpp_int;

/// Exact multiset of signed integer values. Counts are arbitrary precision
/// and strictly positive; iteration is in descending value order.
class ValueHistogram {
 public:
  using Map = std::map<std::int64_t, BigInt, std::greater<>>;

  ValueHistogram() = default;
  ValueHistogram(std::initializer_list<std::pair<const std::int64_t, BigInt>> init);

  void add(std::int64_t value, const BigInt& count = 1);
  void merge(const ValueHistogram& other);
  /// Every count multiplied by `factor` (> 0).
  ValueHistogram scaled(const BigInt& factor) const;
  /// Every value shifted by `delta`.
  ValueHistogram shifted(std::int64_t delta) const;

  BigInt count(std::int64_t value) const;
  BigInt total() const;
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const Map& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// {"entries":[{"value":v,"count":"decimal"}...]}, values descending.
  nlohmann::ordered_json to_json() const;
  /// The bare entry array used inside larger reports.
  nlohmann::ordered_json entries_json() const;
  static ValueHistogram from_json(const nlohmann::json& j);

  friend bool operator==(const ValueHistogram&, const ValueHistogram&) = default;

 private:
  Map entries_;
};

/// Dense counter for hot loops over a bounded value range [lo, hi].
/// Converted to a ValueHistogram once accumulation finishes.
class DenseCounter {
 public:
  DenseCounter(std::int64_t lo, std::int64_t hi)
      : lo_(lo), counts_(static_cast<std::size_t>(hi - lo + 1), 0) {}

  void add(std::int64_t value, std::uint64_t times = 1) { counts_[static_cast<std::size_t>(value - lo_)] += times; }
  void merge(const DenseCounter& other);
  ValueHistogram histogram() const;

 private:
  std::int64_t lo_;
  std::vector<std::uint64_t> counts_;
};

std::string to_decimal(const BigInt& v);

}  // namespace gkasami
