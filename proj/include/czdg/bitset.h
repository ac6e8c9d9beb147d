// Copyright 2026 The czdg Authors.
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

#ifndef CZDG_BITSET_H_
#define CZDG_BITSET_H_

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace czdg {

// Fixed-size (after construction) dynamic bitset. Used for element sets,
// annihilators and graph adjacency rows.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const Word* data() const { return words_.data(); }
  Word* data() { return words_.data(); }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set(std::size_t i, bool value) { value ? set(i) : reset(i); }

  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t count() const {
    std::size_t total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
  }
  bool any() const {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& other) const {
    assert(other.size_ == size_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & other.words_[k]) != 0) return true;
    }
    return false;
  }
  bool is_subset_of(const Bitset& other) const {
    assert(other.size_ == size_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    }
    return true;
  }

  Bitset& operator|=(const Bitset& other) {
    assert(other.size_ == size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    assert(other.size_ == size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  // Removes every bit that is set in `other`.
  Bitset& subtract(const Bitset& other) {
    assert(other.size_ == size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  // Lowest set index, or size() when empty.
  std::size_t first() const { return next(0); }
  // Lowest set index >= from, or size() when there is none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t k = from / kWordBits;
    Word w = words_[k] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) {
        std::size_t i = k * kWordBits + std::countr_zero(w);
        return i < size_ ? i : size_;
      }
      if (++k == words_.size()) return size_;
      w = words_[k];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        fn(k * kWordBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::size_t hash() const {
    std::size_t h = size_;
    for (Word w : words_) {
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace czdg

#endif  // CZDG_BITSET_H_
