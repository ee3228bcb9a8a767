#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace linkirr {

/// Largest supported digraph order. Adjacency rows are fixed-width bitsets.
inline constexpr std::size_t kMaxOrder = 128;

using Vertex = std::uint32_t;

/// Fixed-capacity set of vertices in [0, kMaxOrder), stored as two 64-bit words.
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxOrder / 64;

  constexpr VertexSet() = default;

  static VertexSet prefix(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void flip(Vertex v) { words_[v >> 6] ^= std::uint64_t{1} << (v & 63); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Calls f(v) for every member in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<Vertex>(std::countr_zero(bits));
        f(static_cast<Vertex>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace linkirr
