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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>

namespace sfctr {

/// The three index spaces are deliberately distinct types: a FeatureId
/// (full-vocabulary id), a VirtualId (index into one batch's unique-feature
/// list) and a SlotId (index into one worker's cache buffer) must never mix.
/// Construction is explicit and there are no cross conversions, so mixing
/// them is a compile error.
template <typename Tag>
struct IndexOf {
  std::uint64_t value{0};

  constexpr IndexOf() = default;
  constexpr explicit IndexOf(std::uint64_t v) : value(v) {}

  constexpr auto operator<=>(const IndexOf&) const = default;
};

struct FeatureTag {};
struct VirtualTag {};
struct SlotTag {};

/// Full-vocabulary feature id (the one-hot index into the embedding table).
using FeatureId = IndexOf<FeatureTag>;
/// Index into the owning batch's unique-feature list, in first-appearance order.
using VirtualId = IndexOf<VirtualTag>;
/// Index into one worker's cache buffer slot array.
using SlotId = IndexOf<SlotTag>;

template <typename Tag>
inline std::ostream& operator<<(std::ostream& os, const IndexOf<Tag>& id) {
  return os << id.value;
}

}  // namespace sfctr

namespace std {
template <typename Tag>
struct hash<sfctr::IndexOf<Tag>> {
  size_t operator()(const sfctr::IndexOf<Tag>& id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};
}  // namespace std
