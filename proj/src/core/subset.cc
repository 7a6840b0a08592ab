// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subinfo/core/subset.h"

#include <bit>
#include <sstream>

#include "subinfo/core/error.h"

namespace subinfo {

namespace {

uint64_t LastWordMask(size_t universe_size) {
  const size_t rem = universe_size % 64;
  return rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
}

}  // namespace

Subset::Subset(size_t universe_size) : universe_size_(universe_size) {
  if (num_words() > 1) high_.assign(num_words() - 1, 0);
}

Subset Subset::Full(size_t universe_size) {
  Subset s(universe_size);
  for (size_t w = 0; w < s.num_words(); ++w) s.mutable_word(w) = ~uint64_t{0};
  if (s.num_words() > 0) s.mutable_word(s.num_words() - 1) &= LastWordMask(universe_size);
  return s;
}

Subset Subset::FromMask(size_t universe_size, uint64_t mask) {
  Subset s(universe_size);
  if (universe_size < 64 && (mask >> universe_size) != 0) {
    throw ArgumentError("mask has bits outside a universe of size " +
                        std::to_string(universe_size));
  }
  s.word0_ = mask;
  return s;
}

Subset Subset::FromIndices(size_t universe_size, std::span<const size_t> indices) {
  Subset s(universe_size);
  for (size_t i : indices) s.insert(i);
  return s;
}

Subset Subset::FromIndices(size_t universe_size, std::initializer_list<size_t> indices) {
  return FromIndices(universe_size, std::span<const size_t>(indices.begin(), indices.size()));
}

void Subset::CheckIndex(size_t i) const {
  if (i >= universe_size_) {
    throw ArgumentError("element " + std::to_string(i) + " outside a universe of size " +
                        std::to_string(universe_size_));
  }
}

void Subset::CheckSameUniverse(const Subset& other) const {
  if (universe_size_ != other.universe_size_) {
    throw StructuralError("subsets belong to different ground sets (sizes " +
                          std::to_string(universe_size_) + " and " +
                          std::to_string(other.universe_size_) + ")");
  }
}

bool Subset::contains(size_t i) const {
  CheckIndex(i);
  return (word(i / 64) >> (i % 64)) & 1;
}

void Subset::insert(size_t i) {
  CheckIndex(i);
  mutable_word(i / 64) |= uint64_t{1} << (i % 64);
}

void Subset::erase(size_t i) {
  CheckIndex(i);
  mutable_word(i / 64) &= ~(uint64_t{1} << (i % 64));
}

Subset Subset::With(size_t i) const {
  Subset s = *this;
  s.insert(i);
  return s;
}

Subset Subset::Without(size_t i) const {
  Subset s = *this;
  s.erase(i);
  return s;
}

size_t Subset::count() const {
  size_t c = static_cast<size_t>(std::popcount(word0_));
  for (uint64_t w : high_) c += static_cast<size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const {
  if (word0_ != 0) return false;
  for (uint64_t w : high_) {
    if (w != 0) return false;
  }
  return true;
}

Subset& Subset::operator|=(const Subset& other) {
  CheckSameUniverse(other);
  word0_ |= other.word0_;
  for (size_t i = 0; i < high_.size(); ++i) high_[i] |= other.high_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  CheckSameUniverse(other);
  word0_ &= other.word0_;
  for (size_t i = 0; i < high_.size(); ++i) high_[i] &= other.high_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  CheckSameUniverse(other);
  word0_ &= ~other.word0_;
  for (size_t i = 0; i < high_.size(); ++i) high_[i] &= ~other.high_[i];
  return *this;
}

Subset& Subset::operator^=(const Subset& other) {
  CheckSameUniverse(other);
  word0_ ^= other.word0_;
  for (size_t i = 0; i < high_.size(); ++i) high_[i] ^= other.high_[i];
  return *this;
}

Subset Subset::Complement() const { return Full(universe_size_) - *this; }

bool Subset::IsSubsetOf(const Subset& other) const {
  CheckSameUniverse(other);
  if ((word0_ & ~other.word0_) != 0) return false;
  for (size_t i = 0; i < high_.size(); ++i) {
    if ((high_[i] & ~other.high_[i]) != 0) return false;
  }
  return true;
}

bool Subset::IsDisjointFrom(const Subset& other) const {
  CheckSameUniverse(other);
  if ((word0_ & other.word0_) != 0) return false;
  for (size_t i = 0; i < high_.size(); ++i) {
    if ((high_[i] & other.high_[i]) != 0) return false;
  }
  return true;
}

std::vector<size_t> Subset::ToIndices() const {
  std::vector<size_t> out;
  out.reserve(count());
  ForEach([&](size_t i) { out.push_back(i); });
  return out;
}

std::string Subset::ToString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  ForEach([&](size_t i) {
    if (!first) os << ',';
    os << i;
    first = false;
  });
  os << '}';
  return os.str();
}

size_t Subset::Hash() const {
  // splitmix64 finalizer folded over the words.
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_size_;
  auto mix = [&h](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    h ^= h >> 31;
  };
  mix(word0_);
  for (uint64_t w : high_) mix(w);
  return static_cast<size_t>(h);
}

bool operator==(const Subset& a, const Subset& b) {
  return a.universe_size_ == b.universe_size_ && a.word0_ == b.word0_ && a.high_ == b.high_;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.universe_size_ <=> b.universe_size_; c != 0) return c;
  for (size_t w = a.num_words(); w-- > 0;) {
    if (auto c = a.word(w) <=> b.word(w); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace subinfo
