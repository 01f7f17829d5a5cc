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

#include "gkasami/gf2_linalg.hpp"

#include <array>
#include <bit>

namespace gkasami {

std::vector<std::uint32_t> kernel_basis(std::span<const std::uint32_t> columns) {
  // pivot[r] holds a reduced column whose highest set bit is r, along with
  // the combination of original columns that produced it.
  struct Reduced {
    std::uint32_t value = 0;
    std::uint32_t combo = 0;
  };
  std::array<Reduced, 32> pivot{};
  std::vector<std::uint32_t> kernel;

  for (std::size_t i = 0; i < columns.size(); ++i) {
    Reduced cur{columns[i], std::uint32_t{1} << i};
    while (cur.value != 0) {
      const int top = 31 - std::countl_zero(cur.value);
      if (pivot[top].value == 0) {
        pivot[top] = cur;
        break;
      }
      cur.value ^= pivot[top].value;
      cur.combo ^= pivot[top].combo;
    }
    if (cur.value == 0) kernel.push_back(cur.combo);
  }
  return kernel;
}

int gf2_rank(std::span<const std::uint32_t> columns) {
  return static_cast<int>(columns.size() - kernel_basis(columns).size());
}

}  // namespace gkasami
