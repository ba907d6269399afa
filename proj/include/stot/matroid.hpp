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

#ifndef STOT_MATROID_H_
#define STOT_MATROID_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stot/games.hpp"
#include "stot/hypergraph.hpp"

namespace stot {

// Multigraph given as an edge list; parallel edges and self-loops allowed.
// Edge order defines matroid element indices 1..m.
struct Multigraph {
  std::vector<std::string> vertex_names;
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints
};

// File format: '#' comment lines; otherwise "u v" with string vertex names.
Multigraph ParseMultigraph(std::string_view text);

// Matroid over ground elements 1..ground_size with one of three backing
// oracles: uniform (independent iff small), graphic (independent iff
// acyclic), or an explicit basis list validated against the exchange axiom
// at construction.
class Matroid {
 public:
  enum class Kind { kUniform, kGraphic, kExplicit };

  Matroid() = default;  // the empty uniform matroid
  static Matroid Uniform(int rank, int ground_size);
  static Matroid Graphic(Multigraph g);
  static Matroid Explicit(int ground_size, std::vector<VertexSet> bases);

  Kind kind() const { return kind_; }
  int ground_size() const { return ground_size_; }
  const Multigraph& graph() const { return graph_; }

  int Rank(VertexSet s) const;
  int Rank() const { return Rank(VertexSet::Full(ground_size_)); }
  bool IsIndependent(VertexSet s) const { return Rank(s) == s.Count(); }
  bool IsSpanning(VertexSet s) const { return Rank(s) == Rank(); }
  bool IsBasis(VertexSet s) const {
    return s.Count() == Rank() && IsIndependent(s);
  }

  // Brute-force basis enumeration in LexLess order; ground capped at 16.
  std::vector<VertexSet> EnumerateBases() const;

 private:
  void CheckElements(VertexSet s) const;

  Kind kind_ = Kind::kUniform;
  int ground_size_ = 0;
  int uniform_rank_ = 0;
  Multigraph graph_;
  std::vector<VertexSet> bases_;
};

// A minor view carrying contracted and deleted element sets against a base
// matroid; rank(S) in the minor is rank(S ∪ contracted) − rank(contracted).
class MatroidMinor {
 public:
  explicit MatroidMinor(const Matroid& m) : m_(&m) {}
  MatroidMinor(const Matroid& m, VertexSet contracted, VertexSet deleted)
      : m_(&m), contracted_(contracted), deleted_(deleted) {}

  VertexSet Ground() const {
    return VertexSet::Full(m_->ground_size()) - contracted_ - deleted_;
  }
  int Rank(VertexSet s) const {
    return m_->Rank(s | contracted_) - m_->Rank(contracted_);
  }
  int Rank() const { return Rank(Ground()); }
  bool IsBasis(VertexSet s) const {
    return s.SubsetOf(Ground()) && s.Count() == Rank() &&
           Rank(s) == s.Count();
  }
  MatroidMinor After(int contract_e, int delete_e) const {
    return MatroidMinor(*m_, contracted_.Plus(contract_e),
                        deleted_.Plus(delete_e));
  }

 private:
  const Matroid* m_;
  VertexSet contracted_, deleted_;
};

// Least f in b2 with both b1-e+f and b2-f+e bases. Existence is guaranteed
// for matroids; failure to find one means the oracle is not a matroid and
// raises std::logic_error.
int SymmetricBaseExchange(const MatroidMinor& m, VertexSet b1, VertexSet b2,
                          int e);
int SymmetricBaseExchange(const Matroid& m, VertexSet b1, VertexSet b2,
                          int e);

// Two disjoint bases. Invariant: b1 and b2 are disjoint bases; when used
// for play they must partition the (restricted) ground set.
struct BasisPair {
  VertexSet b1, b2;
};

// Lexicographically least disjoint basis pair, if any (brute force over the
// enumerated bases).
std::optional<BasisPair> FindTwoDisjointBases(const Matroid& m);

// Materialized restriction to `keep`, elements renumbered 1..|keep| in
// order; old_to_new[e] = 0 for dropped elements.
struct RestrictedMatroid {
  Matroid m;
  std::array<int, 65> old_to_new{};
};
RestrictedMatroid RestrictTo(const Matroid& m, VertexSet keep);

// Stotting Waiter-Client Waiter for the connectivity game on m, where the
// winning sets are the spanning sets. Precondition: pair partitions the
// ground set of m into two bases (restrict first if needed). On suggestion
// e the Waiter adds the base-exchange partner f; after the round the pair
// loses e and f and both halves stay bases of the minor that contracts the
// Waiter's element and deletes Client's.
StrategyOracle LehmanWaiter(const Matroid& m, const BasisPair& pair);

// Board = ground set, winning sets = all bases (ground capped at 16).
Hypergraph MatroidToHypergraph(const Matroid& m);

}  // namespace stot

#endif  // STOT_MATROID_H_
