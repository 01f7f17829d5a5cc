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
#include <span>
#include <vector>

namespace gkasami {

/// Basis of the kernel of the GF(2)-linear map whose i-th column (image of
/// the i-th unit vector) is columns[i]. Vectors are bitmasks of at most 32
/// coordinates; the returned vectors are over the column index.
std::vector<std::uint32_t> kernel_basis(std::span<const std::uint32_t> columns);

/// Rank of the same map.
int gf2_rank(std::span<const std::uint32_t> columns);

}  // namespace gkasami
