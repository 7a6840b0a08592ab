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

#ifndef SUBINFO_CORE_SUBSET_H_
#define SUBINFO_CORE_SUBSET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace subinfo {

// A subset of the universe {0, ..., n-1} stored as a bitmask. Universes of up
// to 64 elements live in a single machine word; larger universes spill the
// remaining words into a vector.
//
// Two subsets belong to the same ground set iff their universe sizes agree.
// Binary set operations on subsets of different universes throw
// StructuralError.
class Subset {
 public:
  Subset() = default;
  explicit Subset(size_t universe_size);

  static Subset Full(size_t universe_size);
  static Subset FromMask(size_t universe_size, uint64_t mask);
  // Throws ArgumentError on an index >= universe_size. Duplicates are allowed.
  static Subset FromIndices(size_t universe_size, std::span<const size_t> indices);
  static Subset FromIndices(size_t universe_size, std::initializer_list<size_t> indices);

  size_t universe_size() const { return universe_size_; }
  size_t num_words() const { return universe_size_ == 0 ? 0 : (universe_size_ + 63) / 64; }
  uint64_t word(size_t i) const { return i == 0 ? word0_ : high_[i - 1]; }

  // Low 64 bits. Exact for universes of at most 64 elements.
  uint64_t mask() const { return word0_; }

  bool contains(size_t i) const;
  void insert(size_t i);
  void erase(size_t i);
  Subset With(size_t i) const;
  Subset Without(size_t i) const;

  size_t count() const;
  bool empty() const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  Subset& operator^=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  friend Subset operator^(Subset a, const Subset& b) { return a ^= b; }
  Subset Complement() const;

  bool IsSubsetOf(const Subset& other) const;
  bool IsDisjointFrom(const Subset& other) const;

  // Calls fn(i) for every member in increasing order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (size_t w = 0; w < num_words(); ++w) {
      uint64_t bits = word(w);
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<size_t>(b));
        bits &= bits - 1;
      }
    }
  }
  std::vector<size_t> ToIndices() const;
  std::string ToString() const;

  size_t Hash() const;

  friend bool operator==(const Subset& a, const Subset& b);
  // Orders by numeric mask value (most significant word first); subsets of
  // smaller universes order first.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  uint64_t& mutable_word(size_t i) { return i == 0 ? word0_ : high_[i - 1]; }
  void CheckSameUniverse(const Subset& other) const;
  void CheckIndex(size_t i) const;

  size_t universe_size_ = 0;
  uint64_t word0_ = 0;
  std::vector<uint64_t> high_;
};

struct SubsetHash {
  size_t operator()(const Subset& s) const { return s.Hash(); }
};

}  // namespace subinfo

#endif  // SUBINFO_CORE_SUBSET_H_
