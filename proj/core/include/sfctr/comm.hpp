/*
 * Copyright (c) 2026, the sfctr authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

#include "sfctr/error.hpp"

namespace sfctr {

/// Bytes each of 4 per stored parameter element for ledger accounting
/// (float32 storage), independent of the double-precision internal arithmetic.
inline constexpr std::int64_t kParamBytes = 4;

/// Embedding plus momentum plus velocity: a cached feature's state is three
/// times the embedding size.
inline constexpr std::int64_t kStateVectorsPerFeature = 3;

/// Per-participant traffic of a ring all-reduce: each of the W nodes sends
/// 2*(W-1)/W times the payload (reduce-scatter then all-gather), rounded down.
/// A single worker communicates nothing.
inline std::int64_t allreduce_bytes(std::int64_t payload_bytes, int num_workers) {
  SFCTR_CHECK_MSG(num_workers >= 1, "all-reduce needs at least one participant");
  SFCTR_CHECK_MSG(payload_bytes >= 0, "negative payload");
  const std::int64_t w = num_workers;
  return 2 * (w - 1) * payload_bytes / w;
}

}  // namespace sfctr
