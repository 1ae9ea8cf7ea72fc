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
#include <string>
#include <unordered_map>
#include <vector>

#include "sfctr/host_store.hpp"
#include "sfctr/types.hpp"

namespace sfctr {

/// One worker's fixed-capacity store of working parameters.
///
/// Slots hold moved-in ParamEntry state plus the flags the eviction protocol
/// needs: pinned ("currently required by an in-flight batch", cleared once
/// that batch's update lands) and needed_soon ("appears within the lookahead
/// window"). Either flag makes a slot non-evictable; evict() enforces that as
/// a hard invariant, not a recoverable condition.
///
/// last_use is the last step index in which the feature appeared in an issued
/// batch, maintained by the manager (never by trainer timing); admit_seq
/// breaks ties deterministically.
class CacheBuffer {
 public:
  struct Slot {
    bool occupied = false;
    bool pinned = false;
    bool needed_soon = false;
    FeatureId feature;
    std::int64_t last_use = -1;
    std::uint64_t admit_seq = 0;
    ParamEntry entry;
  };

  CacheBuffer(std::uint64_t capacity, int dim);

  std::uint64_t capacity() const { return slots_.size(); }
  std::size_t occupied_count() const { return index_.size(); }
  std::size_t free_count() const { return free_.size(); }

  bool resident(FeatureId f) const { return index_.contains(f); }
  SlotId slot_of(FeatureId f) const;

  Slot& slot(SlotId s) { return slots_[s.value]; }
  const Slot& slot(SlotId s) const { return slots_[s.value]; }
  const std::vector<Slot>& slots() const { return slots_; }

  /// Places an entry into a free slot. The caller must have made room first.
  SlotId admit(FeatureId f, ParamEntry entry, std::int64_t step);

  /// Removes a feature and returns its state. The slot must be unpinned and
  /// outside the lookahead window — eviction safety is asserted, not handled.
  ParamEntry evict(FeatureId f);

  void touch(FeatureId f, std::int64_t step);

  void pin(FeatureId f);
  void unpin(FeatureId f);
  void set_needed_soon(FeatureId f, bool value);

  std::string occupancy_diagnostics() const;

 private:
  int dim_;
  std::vector<Slot> slots_;
  std::unordered_map<FeatureId, std::uint64_t> index_;
  std::vector<std::uint64_t> free_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace sfctr
