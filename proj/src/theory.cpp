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

#include "gkasami/theory.hpp"

#include <array>
#include <functional>

#include "gkasami/error.hpp"

namespace gkasami {

BigInt pow2(int e) {
  if (e < 0) throw Error(ErrorCode::BadParams, "negative power of two");
  return BigInt(1) << e;
}

namespace {

void require_even(int n) {
  if (n % 2 != 0 || n < kMinN) throw Error(ErrorCode::UnsupportedN, "n must be even and at least 4");
}

bool half_odd(int n) { return (n / 2) % 2 == 1; }

BigInt div_exact(const BigInt& num, int den, std::string_view what) {
  if (num % den != 0)
    throw Error(ErrorCode::NonIntegerResult, std::string(what) + ": " + to_decimal(num) + " is not divisible by " +
                                                 std::to_string(den));
  return num / den;
}

// Builds a histogram from signed rows, rejecting negative counts and
// dropping zero rows.
class Rows {
 public:
  explicit Rows(std::string_view name) : name_(name) {}

  Rows& row(std::int64_t value, const BigInt& count) {
    if (count < 0)
      throw Error(ErrorCode::NonIntegerResult, name_ + ": negative count for value " + std::to_string(value));
    h_.add(value, count);
    return *this;
  }
  BigInt third(const BigInt& num) const { return div_exact(num, 3, name_); }
  ValueHistogram take() { return std::move(h_); }

 private:
  std::string name_;
  ValueHistogram h_;
};

using P = BigInt;

// Each predictor gets h = n/2 and P2(e) = 2^e.
struct Ctx {
  int n;
  int h;
  static P p(int e) { return pow2(e); }
  std::int64_t v(int e) const { return std::int64_t{1} << e; }
};

ValueHistogram b_only_at_one_odd(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  return r.row(c.v(h + 1), Ctx::p(n - 3) + Ctx::p(h - 2))
      .row(-c.v(h + 1), Ctx::p(n - 3) - Ctx::p(h - 2))
      .row(0, Ctx::p(n) - Ctx::p(n - 2) - 1)
      .take();
}

ValueHistogram b_only_at_zero_even(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  return r.row(-c.v(h + 1), r.third(Ctx::p(n) - 1)).row(c.v(h), r.third(2 * (Ctx::p(n) - 1))).take();
}

ValueHistogram b_only_at_one_even(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  return r.row(c.v(h + 1), r.third(Ctx::p(n - 3) + Ctx::p(h - 2)))
      .row(-c.v(h + 1), r.third(Ctx::p(n - 3) - Ctx::p(h - 2) - 1))
      .row(0, r.third(Ctx::p(n) - Ctx::p(n - 2)))
      .row(c.v(h), r.third(2 * (Ctx::p(n - 1) + Ctx::p(h - 1) - 1)))
      .row(-c.v(h), r.third(2 * (Ctx::p(n - 1) - Ctx::p(h - 1))))
      .take();
}

ValueHistogram c_only_at_zero(const Ctx& c, Rows& r) {
  return r.row(c.v(c.h), 0).row(-c.v(c.h), Ctx::p(c.h) - 1).take();
}

ValueHistogram c_only_at_one(const Ctx& c, Rows& r) {
  return r.row(c.v(c.h), Ctx::p(c.h - 1)).row(-c.v(c.h), Ctx::p(c.h - 1) - 1).take();
}

ValueHistogram walsh_aggregate(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  const P m = Ctx::p(h) - 1;
  const P big = Ctx::p(n + 1) + Ctx::p(h) - 1;
  const P small = Ctx::p(n) + Ctx::p(h + 1) + 4;
  return r.row(c.v(h + 1), r.third(m * (Ctx::p(n - 3) + Ctx::p(h - 2)) * big))
      .row(-c.v(h + 1), r.third(m * (Ctx::p(n - 3) - Ctx::p(h - 2)) * big))
      .row(0, m * (Ctx::p(2 * n - 1) + Ctx::p(3 * h - 2) - Ctx::p(n - 2) + Ctx::p(h) + 1))
      .row(c.v(h), r.third(m * (Ctx::p(n - 1) + Ctx::p(h - 1)) * small))
      .row(-c.v(h), r.third(m * (Ctx::p(n - 1) - Ctx::p(h - 1)) * small))
      .row(c.v(n), 1)
      .take();
}

// Weight w corresponds to transform value 2^n - 2w, so the weight rows are
// the aggregate rows with the sign of the offset flipped.
ValueHistogram code_weights(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  const P m = Ctx::p(h) - 1;
  const P big = Ctx::p(n + 1) + Ctx::p(h) - 1;
  const P small = Ctx::p(n) + Ctx::p(h + 1) + 4;
  const std::int64_t mid = c.v(n - 1);
  return r.row(mid + c.v(h), r.third(m * (Ctx::p(n - 3) - Ctx::p(h - 2)) * big))
      .row(mid - c.v(h), r.third(m * (Ctx::p(n - 3) + Ctx::p(h - 2)) * big))
      .row(mid, m * (Ctx::p(2 * n - 1) + Ctx::p(3 * h - 2) - Ctx::p(n - 2) + Ctx::p(h) + 1))
      .row(mid + c.v(h - 1), r.third(m * (Ctx::p(n - 1) - Ctx::p(h - 1)) * small))
      .row(mid - c.v(h - 1), r.third(m * (Ctx::p(n - 1) + Ctx::p(h - 1)) * small))
      .row(0, 1)
      .take();
}

ValueHistogram at_zero_odd(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  const P q = Ctx::p(n) - 1;
  return r.row(c.v(h + 1), 0)
      .row(-c.v(h + 1), r.third(q * (Ctx::p(h - 1) - 1)))
      .row(0, q * (Ctx::p(h - 1) - 1))
      .row(c.v(h), r.third(q * (Ctx::p(h) + 1)))
      .row(-c.v(h), 0)
      .take();
}

ValueHistogram at_one_odd(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  return r.row(c.v(h + 1), r.third((Ctx::p(n - 3) + Ctx::p(h - 2)) * (Ctx::p(h + 1) - 4)))
      .row(-c.v(h + 1), r.third(Ctx::p(3 * h - 2) - Ctx::p(n) + Ctx::p(h - 1) + 1))
      .row(0, Ctx::p(3 * h - 1) - Ctx::p(n) - Ctx::p(h - 1) + 1)
      .row(c.v(h), r.third((Ctx::p(n - 1) + Ctx::p(h - 1) - 1) * (Ctx::p(h) + 1)))
      .row(-c.v(h), r.third((Ctx::p(n - 1) - Ctx::p(h - 1)) * (Ctx::p(h) + 1)))
      .take();
}

ValueHistogram at_zero_even(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  const P q = Ctx::p(n) - 1;
  return r.row(c.v(h + 1), 0)
      .row(-c.v(h + 1), r.third(q * (Ctx::p(h - 1) - 2)))
      .row(0, q * Ctx::p(h - 1))
      .row(c.v(h), r.third(q * (Ctx::p(h) - 1)))
      .row(-c.v(h), 0)
      .take();
}

ValueHistogram at_one_even(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  return r.row(c.v(h + 1), r.third((Ctx::p(h + 1) - 2) * (Ctx::p(n - 3) + Ctx::p(h - 2))))
      .row(-c.v(h + 1), r.third(Ctx::p(3 * h - 2) - 3 * Ctx::p(n - 2) + 2))
      .row(0, Ctx::p(3 * h - 1) - Ctx::p(n - 1) - Ctx::p(h - 1))
      .row(c.v(h), r.third((Ctx::p(n - 1) + Ctx::p(h - 1) - 1) * (Ctx::p(h) - 1)))
      .row(-c.v(h), r.third((Ctx::p(n - 1) - Ctx::p(h - 1)) * (Ctx::p(h) - 1)))
      .take();
}

ValueHistogram joint_odd(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  return r.row(c.v(h + 1), r.third((Ctx::p(n - 3) + Ctx::p(h - 2)) * (Ctx::p(h + 1) - 1)))
      .row(-c.v(h + 1), r.third((Ctx::p(n - 3) - Ctx::p(h - 2)) * (Ctx::p(h + 1) - 1)))
      .row(0, Ctx::p(3 * h - 1) - Ctx::p(n - 2) + 1)
      .row(c.v(h), r.third(Ctx::p(3 * h - 1) + Ctx::p(n) + Ctx::p(h + 1)))
      .row(-c.v(h), r.third(Ctx::p(3 * h - 1) + Ctx::p(h) - 3))
      .take();
}

ValueHistogram joint_even(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  return r.row(c.v(h + 1), r.third((Ctx::p(n) + Ctx::p(h) - 1) * (Ctx::p(h + 1) - 1) * (Ctx::p(n - 3) + Ctx::p(h - 2))))
      .row(-c.v(h + 1), r.third(Ctx::p(5 * h - 2) - 3 * Ctx::p(2 * n - 3) - 5 * Ctx::p(3 * h - 3) - Ctx::p(n - 3) -
                                5 * Ctx::p(h - 2) + 4))
      .row(0, Ctx::p(5 * h - 1) + Ctx::p(2 * n - 2) - 3 * Ctx::p(3 * h - 2) + 5 * Ctx::p(n - 2) - 1)
      .row(c.v(h), r.third(Ctx::p(5 * h - 1) + 3 * Ctx::p(2 * n - 1) + 5 * Ctx::p(3 * h - 1) - Ctx::p(n) -
                           Ctx::p(h + 2) + 2))
      .row(-c.v(h), r.third(Ctx::p(5 * h - 1) + Ctx::p(2 * n - 1) + Ctx::p(3 * h - 1) - Ctx::p(n + 1) - Ctx::p(h)))
      .take();
}

ValueHistogram correlation_odd(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  const std::int64_t N = c.v(n) - 1;
  const P tail = (Ctx::p(2 * n - 1) - 1) * (Ctx::p(h + 1) - 1);
  return r.row(N, Ctx::p(3 * h) + Ctx::p(h))
      .row(-1, Ctx::p(h + 1) * (Ctx::p(7 * h - 2) - Ctx::p(3 * n - 3) + Ctx::p(2 * n - 1) - Ctx::p(3 * h - 1) +
                                Ctx::p(n - 2) - 1))
      .row(c.v(h) - 1, r.third(Ctx::p(4 * n - 1) + Ctx::p(7 * h) + Ctx::p(3 * n + 1) - Ctx::p(2 * n) -
                               Ctx::p(3 * h + 1) - Ctx::p(n + 2)))
      .row(-c.v(h) - 1, r.third(Ctx::p(4 * n - 1) + Ctx::p(3 * n) - 3 * Ctx::p(5 * h) + Ctx::p(2 * n + 1) -
                                3 * Ctx::p(3 * h) + Ctx::p(n) + 3 * Ctx::p(h)))
      .row(c.v(h + 1) - 1, r.third(Ctx::p(h + 1) * (Ctx::p(n - 3) + Ctx::p(h - 2)) * tail))
      .row(-c.v(h + 1) - 1, r.third(Ctx::p(h + 1) * (Ctx::p(n - 3) - Ctx::p(h - 2)) * tail))
      .take();
}

ValueHistogram correlation_even(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  const std::int64_t N = c.v(n) - 1;
  return r.row(N, Ctx::p(3 * h) + Ctx::p(h) - 1)
      .row(-1, Ctx::p(4 * n - 1) - Ctx::p(7 * h - 2) - Ctx::p(2 * n - 1) + 3 * Ctx::p(3 * h - 1) -
                   5 * Ctx::p(n - 1) - Ctx::p(h) + 2)
      .row(c.v(h) - 1, r.third(Ctx::p(4 * n - 1) + Ctx::p(7 * h) + Ctx::p(3 * n + 1) - Ctx::p(5 * h) -
                               3 * Ctx::p(2 * n) - 5 * Ctx::p(3 * h) + 3 * Ctx::p(h + 1) - 2))
      .row(-c.v(h) - 1, r.third(Ctx::p(4 * n - 1) + Ctx::p(3 * n) - Ctx::p(5 * h + 2) + Ctx::p(2 * n + 1) -
                                Ctx::p(3 * h + 2) + 7 * Ctx::p(n) - Ctx::p(h)))
      .row(c.v(h + 1) - 1, r.third(Ctx::p(4 * n - 2) + 3 * Ctx::p(7 * h - 3) - Ctx::p(3 * n - 2) -
                                   Ctx::p(5 * h - 1) - 5 * Ctx::p(2 * n - 2) + Ctx::p(3 * h - 2) +
                                   5 * Ctx::p(n - 2) - Ctx::p(h - 1)))
      .row(-c.v(h + 1) - 1, r.third(Ctx::p(4 * n - 2) - 5 * Ctx::p(7 * h - 3) + Ctx::p(3 * n - 2) -
                                    Ctx::p(5 * h - 1) + 3 * Ctx::p(2 * n - 2) + 5 * Ctx::p(3 * h - 2) -
                                    3 * Ctx::p(n - 2) + 3 * Ctx::p(h - 1) - 4))
      .take();
}

ValueHistogram imbalance_odd(const Ctx& c, Rows& r) { return joint_odd(c, r).shifted(-1); }

ValueHistogram imbalance_even(const Ctx& c, Rows& r) {
  const int n = c.n, h = c.h;
  return r.row(c.v(h + 1) - 1, r.third((Ctx::p(h + 1) - 1) * (Ctx::p(n - 3) + Ctx::p(h - 2))))
      .row(-c.v(h + 1) - 1, r.third(Ctx::p(3 * h - 2) - 5 * Ctx::p(n - 3) + Ctx::p(h - 2) - 1))
      .row(-1, Ctx::p(3 * h - 1) - Ctx::p(n - 2) + 1)
      .row(c.v(h) - 1, r.third(Ctx::p(3 * h - 1) + Ctx::p(n) + Ctx::p(h + 1) - 2))
      .row(-c.v(h) - 1, r.third(Ctx::p(3 * h - 1) + Ctx::p(h) - 3))
      .take();
}

enum class Parity { Any, Odd, Even };

struct Predictor {
  std::string_view name;
  Parity parity;
  ValueHistogram (*fn)(const Ctx&, Rows&);
};

constexpr std::array kPredictors = {
    Predictor{"b_only_walsh_at_one_odd", Parity::Odd, b_only_at_one_odd},
    Predictor{"b_only_walsh_at_zero_even", Parity::Even, b_only_at_zero_even},
    Predictor{"b_only_walsh_at_one_even", Parity::Even, b_only_at_one_even},
    Predictor{"c_only_walsh_at_zero", Parity::Any, c_only_at_zero},
    Predictor{"c_only_walsh_at_one", Parity::Any, c_only_at_one},
    Predictor{"walsh_aggregate", Parity::Any, walsh_aggregate},
    Predictor{"code_weights", Parity::Any, code_weights},
    Predictor{"walsh_at_zero_odd", Parity::Odd, at_zero_odd},
    Predictor{"walsh_at_one_odd", Parity::Odd, at_one_odd},
    Predictor{"walsh_at_zero_even", Parity::Even, at_zero_even},
    Predictor{"walsh_at_one_even", Parity::Even, at_one_even},
    Predictor{"joint_walsh_odd", Parity::Odd, joint_odd},
    Predictor{"joint_walsh_even", Parity::Even, joint_even},
    Predictor{"correlation_odd", Parity::Odd, correlation_odd},
    Predictor{"correlation_even", Parity::Even, correlation_even},
    Predictor{"imbalance_odd", Parity::Odd, imbalance_odd},
    Predictor{"imbalance_even", Parity::Even, imbalance_even},
};

constexpr std::string_view kRankDeficient = "rank_deficient_count";

}  // namespace

BigInt rank_deficient_count(int n) {
  require_even(n);
  const int h = n / 2;
  if (half_odd(n)) return div_exact(pow2(n + 1) - pow2(h + 1) - 4, 3, kRankDeficient);
  return div_exact(pow2(n + 1) - 2, 3, kRankDeficient);
}

BigInt family_size(int n) {
  require_even(n);
  const int h = n / 2;
  return pow2(3 * h) + pow2(h) - (half_odd(n) ? 0 : 1);
}

BigInt kasami_triple_count(int n) {
  require_even(n);
  const int h = n / 2;
  if (half_odd(n)) return pow2(2 * n);
  return pow2(2 * n) - pow2(3 * h + 1) + pow2(h + 1);
}

BigInt norm_triple_count(int n) {
  require_even(n);
  const int h = n / 2;
  return pow2(5 * h) - pow2(3 * h) + pow2(n);
}

BigInt common_triple_count(int n) {
  require_even(n);
  return 3 * pow2(n) - 2;
}

BigInt kasami_pair_count(int n) {
  require_even(n);
  return half_odd(n) ? pow2(n) : 1 + 3 * (pow2(n) - 1);
}

BigInt norm_pair_count(int n) {
  require_even(n);
  return 1 + (pow2(n / 2) + 1) * (pow2(n) - 1);
}

BigInt common_pair_count(int n) {
  require_even(n);
  return pow2(n);
}

BigInt power_sum_at_zero(int n, int degree) {
  require_even(n);
  const int h = n / 2;
  const bool odd = half_odd(n);
  switch (degree) {
    case 1: return pow2(h) * (pow2(n) - 1);
    case 2: return pow2(n) * (pow2(n) - 1) * (pow2(h) - (odd ? 1 : 3));
    case 3: return -pow2(3 * h) * (pow2(n) - 1) * (pow2(h) - (odd ? 3 : 5));
    default: throw Error(ErrorCode::BadParams, "power sum degree must be 1, 2 or 3");
  }
}

nlohmann::ordered_json Prediction::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["n"] = n;
  j["k"] = k;
  if (scalar) j["value"] = to_decimal(*scalar);
  else j["histogram"] = histogram.entries_json();
  return j;
}

Prediction predict(std::string_view name, int n, int k) {
  require_even(n);
  Prediction p;
  p.name = std::string(name);
  p.n = n;
  p.k = k;
  if (name == kRankDeficient) {
    p.scalar = rank_deficient_count(n);
    return p;
  }
  for (const auto& pr : kPredictors) {
    if (pr.name != name) continue;
    if ((pr.parity == Parity::Odd && !half_odd(n)) || (pr.parity == Parity::Even && half_odd(n)))
      throw Error(ErrorCode::ParityMismatch, std::string(name) + " requires n/2 " +
                                                 (pr.parity == Parity::Odd ? "odd" : "even") + ", got n = " +
                                                 std::to_string(n));
    Rows rows(name);
    p.histogram = pr.fn(Ctx{n, n / 2}, rows);
    return p;
  }
  throw Error(ErrorCode::UnknownName, "unknown prediction '" + std::string(name) + "'");
}

std::vector<std::string_view> prediction_names() {
  std::vector<std::string_view> names;
  for (const auto& pr : kPredictors) names.push_back(pr.name);
  names.push_back(kRankDeficient);
  return names;
}

BigInt expected_population(std::string_view name, int n) {
  require_even(n);
  const int h = n / 2;
  const BigInt q = pow2(n) - 1;
  const BigInt m = family_size(n);
  if (name.starts_with("b_only_walsh")) return q;
  if (name.starts_with("c_only_walsh")) return pow2(h) - 1;
  if (name == "walsh_aggregate" || name == "code_weights") return pow2(5 * h);
  if (name.starts_with("walsh_at_")) return q * (pow2(h) - 1);
  if (name == "joint_walsh_odd") return pow2(3 * h) + pow2(h);
  if (name == "joint_walsh_even") return (pow2(n) + pow2(h) - 1) * (pow2(3 * h) + pow2(h) - 1);
  if (name.starts_with("correlation_")) return m * m * q;
  if (name.starts_with("imbalance_")) return m;
  throw Error(ErrorCode::UnknownName, "no population for '" + std::string(name) + "'");
}

std::string_view correlation_prediction_name(int n) { return half_odd(n) ? "correlation_odd" : "correlation_even"; }
std::string_view imbalance_prediction_name(int n) { return half_odd(n) ? "imbalance_odd" : "imbalance_even"; }

}  // namespace gkasami
