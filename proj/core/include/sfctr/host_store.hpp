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
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "sfctr/error.hpp"
#include "sfctr/types.hpp"

namespace sfctr {

/// One feature's trainable state: embedding plus Adam momentum and velocity,
/// stored contiguously, plus the per-feature Adam step count (lazy Adam:
/// bias correction advances only on steps where the feature is updated).
struct ParamEntry {
  std::vector<double> data;  // [embedding | momentum | velocity], 3*dim values
  std::int64_t adam_steps = 0;

  ParamEntry() = default;
  explicit ParamEntry(int dim) : data(static_cast<std::size_t>(3) * dim, 0.0) {}

  std::span<double> embedding(int dim) { return {data.data(), static_cast<std::size_t>(dim)}; }
  std::span<double> momentum(int dim) { return {data.data() + dim, static_cast<std::size_t>(dim)}; }
  std::span<double> velocity(int dim) {
    return {data.data() + 2 * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
  std::span<const double> embedding(int dim) const {
    return {data.data(), static_cast<std::size_t>(dim)};
  }
  std::span<const double> momentum(int dim) const {
    return {data.data() + dim, static_cast<std::size_t>(dim)};
  }
  std::span<const double> velocity(int dim) const {
    return {data.data() + 2 * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

/// The authoritative embedding table in host memory. Entries are created
/// lazily on first touch with a deterministic per-feature initialization, so
/// touch order never matters. While a feature is resident in a cache buffer
/// its entry is physically moved out of the store (host xor exactly one
/// buffer holds it at any quiescent point).
class HostStore {
 public:
  HostStore(std::uint64_t seed, int dim);

  int dim() const { return dim_; }

  /// Entry reference, lazily initializing on first touch.
  ParamEntry& get_or_init(FeatureId f);

  /// Read-only lookup of a feature that is known to be host-resident.
  const ParamEntry& peek(FeatureId f) const;

  bool contains(FeatureId f) const { return table_.contains(f); }

  /// Moves the entry out of the store (for admission into a cache buffer).
  /// Lazily initializes first if the feature was never seen.
  ParamEntry take(FeatureId f);

  /// Moves an entry back into the store. The feature must not already be
  /// host-resident (conservation).
  void put(FeatureId f, ParamEntry entry);

  std::size_t size() const { return table_.size(); }

  /// Entries sorted by feature id, for reproducible comparison dumps.
  std::map<std::uint64_t, ParamEntry> snapshot_sorted() const;

 private:
  std::uint64_t seed_;
  int dim_;
  std::unordered_map<FeatureId, ParamEntry> table_;
};

}  // namespace sfctr
