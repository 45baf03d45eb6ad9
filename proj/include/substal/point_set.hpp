/*
 * Copyright 2026 The substal Authors
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

#ifndef SUBSTAL_POINT_SET_HPP_
#define SUBSTAL_POINT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "substal/error.hpp"

namespace substal {

/// A dense bit-vector over a fixed ambient universe {0, ..., size-1}.
/// Every set algebra and complex algebra element is one of these.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  static PointSet full(std::size_t size) {
    PointSet s(size);
    for (auto& w : s.words_) {
      w = ~std::uint64_t{0};
    }
    s.trim();
    return s;
  }

  template <class Int>
  static PointSet from_indices(std::size_t size, std::span<const Int> idx) {
    PointSet s(size);
    for (auto i : idx) {
      if (static_cast<std::size_t>(i) >= size) {
        throw InvalidInput("point index " + std::to_string(i)
                           + " outside universe of size "
                           + std::to_string(size));
      }
      s.set(static_cast<std::size_t>(i));
    }
    return s;
  }

  static PointSet from_indices(std::size_t size,
                               std::initializer_list<std::size_t> idx) {
    return from_indices<std::size_t>(
        size, std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  /// The set whose bit i is bit i of mask (size <= 64).
  static PointSet from_mask(std::size_t size, std::uint64_t mask) {
    PointSet s(size);
    if (!s.words_.empty()) {
      s.words_[0] = mask;
    }
    s.trim();
    return s;
  }

  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  [[nodiscard]] bool none() const noexcept {
    for (auto w : words_) {
      if (w) {
        return false;
      }
    }
    return true;
  }
  [[nodiscard]] bool any() const noexcept { return !none(); }
  [[nodiscard]] bool all() const noexcept { return count() == size_; }

  [[nodiscard]] std::optional<std::size_t> first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) {
        return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
      }
    }
    return std::nullopt;
  }

  PointSet& operator&=(PointSet const& o) {
    check(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] &= o.words_[k];
    }
    return *this;
  }
  PointSet& operator|=(PointSet const& o) {
    check(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] |= o.words_[k];
    }
    return *this;
  }
  PointSet& operator^=(PointSet const& o) {
    check(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] ^= o.words_[k];
    }
    return *this;
  }
  PointSet& operator-=(PointSet const& o) {
    check(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] &= ~o.words_[k];
    }
    return *this;
  }

  friend PointSet operator&(PointSet a, PointSet const& b) { return a &= b; }
  friend PointSet operator|(PointSet a, PointSet const& b) { return a |= b; }
  friend PointSet operator^(PointSet a, PointSet const& b) { return a ^= b; }
  friend PointSet operator-(PointSet a, PointSet const& b) { return a -= b; }

  /// Complement relative to the ambient universe.
  [[nodiscard]] PointSet operator~() const {
    PointSet r = *this;
    for (auto& w : r.words_) {
      w = ~w;
    }
    r.trim();
    return r;
  }

  [[nodiscard]] bool is_subset_of(PointSet const& o) const {
    check(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] bool intersects(PointSet const& o) const {
    check(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & o.words_[k]) {
        return true;
      }
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  [[nodiscard]] std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  /// Low 64 bits; meaningful as a full key only when size() <= 64.
  [[nodiscard]] std::uint64_t mask() const noexcept {
    return words_.empty() ? 0 : words_[0];
  }

  [[nodiscard]] std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "{";
    bool first_elem = true;
    for_each([&](std::size_t i) {
      s += (first_elem ? "" : ",") + std::to_string(i);
      first_elem = false;
    });
    return s + "}";
  }

  friend bool operator==(PointSet const&, PointSet const&) = default;
  friend std::strong_ordering operator<=>(PointSet const& a,
                                          PointSet const& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) {
      return c;
    }
    for (std::size_t k = a.words_.size(); k-- > 0;) {
      if (auto c = a.words_[k] <=> b.words_[k]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() noexcept {
    if (size_ % 64 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  void check(PointSet const& o) const {
    if (o.size_ != size_) {
      throw DimensionMismatch("point sets over different universes");
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(PointSet const& s) const noexcept { return s.hash(); }
};

}  // namespace substal

#endif  // SUBSTAL_POINT_SET_HPP_
