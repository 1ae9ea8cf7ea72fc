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

#include "sfctr/cache_buffer.hpp"

#include <sstream>

namespace sfctr {

CacheBuffer::CacheBuffer(std::uint64_t capacity, int dim) : dim_(dim) {
  SFCTR_CHECK_MSG(capacity > 0, "cache buffer needs at least one slot");
  slots_.resize(capacity);
  free_.reserve(capacity);
  // Keep lower slot indices at the back so cold admission fills slot 0 first.
  for (std::uint64_t i = capacity; i-- > 0;) free_.push_back(i);
  index_.reserve(capacity);
}

SlotId CacheBuffer::slot_of(FeatureId f) const {
  auto it = index_.find(f);
  SFCTR_CHECK_MSG(it != index_.end(), "feature " << f << " not resident");
  return SlotId{it->second};
}

SlotId CacheBuffer::admit(FeatureId f, ParamEntry entry, std::int64_t step) {
  SFCTR_CHECK_MSG(!resident(f), "feature " << f << " already resident");
  SFCTR_CHECK_MSG(!free_.empty(), "admit with no free slot; evict first");
  const std::uint64_t idx = free_.back();
  free_.pop_back();
  Slot& s = slots_[idx];
  s.occupied = true;
  s.pinned = false;
  s.needed_soon = true;  // an admitted feature is by definition in the window
  s.feature = f;
  s.last_use = step;
  s.admit_seq = next_seq_++;
  s.entry = std::move(entry);
  index_.emplace(f, idx);
  return SlotId{idx};
}

ParamEntry CacheBuffer::evict(FeatureId f) {
  auto it = index_.find(f);
  SFCTR_CHECK_MSG(it != index_.end(), "evicting non-resident feature " << f);
  Slot& s = slots_[it->second];
  SFCTR_CHECK_MSG(!s.pinned, "evicting pinned feature " << f);
  SFCTR_CHECK_MSG(!s.needed_soon, "evicting feature " << f << " inside the lookahead window");
  ParamEntry entry = std::move(s.entry);
  s.occupied = false;
  s.entry = ParamEntry{};
  free_.push_back(it->second);
  index_.erase(it);
  return entry;
}

void CacheBuffer::touch(FeatureId f, std::int64_t step) {
  Slot& s = slots_[slot_of(f).value];
  if (step > s.last_use) s.last_use = step;
}

void CacheBuffer::pin(FeatureId f) { slots_[slot_of(f).value].pinned = true; }

void CacheBuffer::unpin(FeatureId f) { slots_[slot_of(f).value].pinned = false; }

void CacheBuffer::set_needed_soon(FeatureId f, bool value) {
  slots_[slot_of(f).value].needed_soon = value;
}

std::string CacheBuffer::occupancy_diagnostics() const {
  std::size_t pinned = 0, needed = 0;
  for (const Slot& s : slots_) {
    if (!s.occupied) continue;
    if (s.pinned) ++pinned;
    if (s.needed_soon) ++needed;
  }
  std::ostringstream os;
  os << "capacity=" << capacity() << " occupied=" << occupied_count() << " free=" << free_count()
     << " pinned=" << pinned << " needed_soon=" << needed;
  return os.str();
}

}  // namespace sfctr
