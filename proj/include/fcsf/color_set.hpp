#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "fcsf/errors.hpp"

namespace fcsf {

/// Colors are dense ordinals in [0, color_count). The mapping from external
/// color names to ordinals lives in the io layer.
using ColorId = std::int32_t;

/// A subset of a dense color set, bitmask-backed. Holds at most 64 colors,
/// which bounds the color-set size of every graph in this library.
class ColorSet {
 public:
  static constexpr int max_colors = 64;

  ColorSet() = default;

  static ColorSet from_bits(std::uint64_t bits) {
    ColorSet s;
    s.bits_ = bits;
    return s;
  }

  static ColorSet single(ColorId c) { return from_bits(bit(c)); }

  /// The set {0, 1, ..., count-1}.
  static ColorSet first(int count) {
    if (count < 0 || count > max_colors)
      throw InvalidArgumentError("color set size out of range");
    return from_bits(count == max_colors ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << count) - 1);
  }

  static ColorSet of(std::initializer_list<ColorId> colors) {
    ColorSet s;
    for (ColorId c : colors) s.insert(c);
    return s;
  }

  bool contains(ColorId c) const {
    return c >= 0 && c < max_colors && ((bits_ >> c) & 1u);
  }
  ColorSet& insert(ColorId c) {
    bits_ |= bit(c);
    return *this;
  }
  ColorSet& erase(ColorId c) {
    bits_ &= ~bit(c);
    return *this;
  }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }

  ColorSet complement_in(int color_count) const {
    return from_bits(first(color_count).bits_ & ~bits_);
  }

  /// Members in ascending order.
  std::vector<ColorId> members() const {
    std::vector<ColorId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](ColorId c) { out.push_back(c); });
    return out;
  }

  /// Visits members in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      fn(static_cast<ColorId>(std::countr_zero(b)));
  }

  friend ColorSet operator|(ColorSet a, ColorSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend ColorSet operator&(ColorSet a, ColorSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend bool operator==(ColorSet a, ColorSet b) = default;

 private:
  static std::uint64_t bit(ColorId c) {
    if (c < 0 || c >= max_colors)
      throw InvalidArgumentError("color ordinal out of range");
    return std::uint64_t{1} << c;
  }

  std::uint64_t bits_ = 0;
};

/// Enumerates every subset of [0, color_count) by increasing size and
/// lexicographically within each size: {}, {0}, {1}, ..., {0,1}, {0,2}, ...
/// Stops as soon as fn returns true; returns whether it stopped early.
/// This order is the library-wide convention for reporting the first
/// violating subset, so certificates are reproducible.
template <class Fn>
bool for_each_subset_by_size(int color_count, Fn&& fn) {
  if (fn(ColorSet{})) return true;
  std::vector<ColorId> idx;
  for (int k = 1; k <= color_count; ++k) {
    idx.resize(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ColorSet s;
      for (ColorId c : idx) s.insert(c);
      if (fn(s)) return true;
      int j = k - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == color_count - k + j)
        --j;
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
      for (int t = j + 1; t < k; ++t)
        idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return false;
}

}  // namespace fcsf
