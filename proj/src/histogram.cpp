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

#include "gkasami/histogram.hpp"

#include "gkasami/error.hpp"

namespace gkasami {

std::string to_decimal(const BigInt& v) { return v.str(); }

ValueHistogram::ValueHistogram(std::initializer_list<std::pair<const std::int64_t, BigInt>> init) {
  for (const auto& [v, c] : init) add(v, c);
}

void ValueHistogram::add(std::int64_t value, const BigInt& count) {
  if (count < 0) throw Error(ErrorCode::BadParams, "negative histogram count");
  if (count == 0) return;
  entries_[value] += count;
}

void ValueHistogram::merge(const ValueHistogram& other) {
  for (const auto& [v, c] : other.entries_) entries_[v] += c;
}

ValueHistogram ValueHistogram::scaled(const BigInt& factor) const {
  ValueHistogram out;
  for (const auto& [v, c] : entries_) out.add(v, c * factor);
  return out;
}

ValueHistogram ValueHistogram::shifted(std::int64_t delta) const {
  ValueHistogram out;
  for (const auto& [v, c] : entries_) out.add(v + delta, c);
  return out;
}

BigInt ValueHistogram::count(std::int64_t value) const {
  auto it = entries_.find(value);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt ValueHistogram::total() const {
  BigInt t = 0;
  for (const auto& [v, c] : entries_) t += c;
  return t;
}

nlohmann::ordered_json ValueHistogram::entries_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [v, c] : entries_) {
    nlohmann::ordered_json e;
    e["value"] = v;
    e["count"] = to_decimal(c);
    arr.push_back(std::move(e));
  }
  return arr;
}

nlohmann::ordered_json ValueHistogram::to_json() const {
  nlohmann::ordered_json j;
  j["entries"] = entries_json();
  return j;
}

ValueHistogram ValueHistogram::from_json(const nlohmann::json& j) {
  const auto& arr = j.is_array() ? j : j.at("entries");
  ValueHistogram h;
  try {
    for (const auto& e : arr) {
      const auto& c = e.at("count");
      BigInt count = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::uint64_t>());
      h.add(e.at("value").get<std::int64_t>(), count);
    }
  } catch (const std::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("bad histogram JSON: ") + ex.what());
  }
  return h;
}

void DenseCounter::merge(const DenseCounter& other) {
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
}

ValueHistogram DenseCounter::histogram() const {
  ValueHistogram h;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i]) h.add(lo_ + static_cast<std::int64_t>(i), BigInt(counts_[i]));
  }
  return h;
}

}  // namespace gkasami
