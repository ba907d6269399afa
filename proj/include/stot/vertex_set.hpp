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

#ifndef STOT_VERTEX_SET_H_
#define STOT_VERTEX_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace stot {

// A subset of board vertices 1..64, one bit per vertex (bit v-1 <=> vertex v).
// All set operations are single-word; this is what keeps the solver cheap.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet FromBits(std::uint64_t bits) {
    return VertexSet(bits);
  }
  static constexpr VertexSet Single(int v) {
    return VertexSet(std::uint64_t{1} << (v - 1));
  }
  // The full board {1..n}.
  static constexpr VertexSet Full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet Of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s = s.Plus(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool Empty() const { return bits_ == 0; }
  int Count() const { return std::popcount(bits_); }

  // Total: vertices outside 1..64 are never members, so move validation
  // can probe arbitrary integers safely.
  constexpr bool Contains(int v) const {
    return v >= 1 && v <= 64 && ((bits_ >> (v - 1)) & std::uint64_t{1});
  }
  constexpr VertexSet Plus(int v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << (v - 1)));
  }
  constexpr VertexSet Minus(int v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1)));
  }

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(bits_ & o.bits_);
  }
  // Set difference.
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(bits_ & ~o.bits_);
  }

  constexpr bool operator==(const VertexSet&) const = default;

  constexpr bool SubsetOf(VertexSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool Intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  // Least vertex in the set, or 0 when empty.
  int Lowest() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  std::vector<int> Vertices() const {
    std::vector<int> out;
    out.reserve(Count());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

 private:
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the increasing vertex sequences the sets denote,
// e.g. {1,3} < {2} and {2} < {2,3}. This is the order the serializer and the
// canonical relabeling use.
inline bool LexLess(VertexSet a, VertexSet b) {
  if (a == b) return false;
  const std::uint64_t diff = a.bits() ^ b.bits();
  const std::uint64_t low = diff & (~diff + 1);    // lowest differing vertex
  const std::uint64_t above = ~(low | (low - 1));  // vertices beyond it
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

}  // namespace stot

#endif  // STOT_VERTEX_SET_H_
