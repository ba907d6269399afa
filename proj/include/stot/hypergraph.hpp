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

#ifndef STOT_HYPERGRAPH_H_
#define STOT_HYPERGRAPH_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "stot/vertex_set.hpp"

namespace stot {

// A positional-game board: vertices 1..board_size plus a family of winning
// sets. The family is kept sorted by LexLess; duplicates and supersets are
// allowed in raw form (Reduce removes them). An empty member set means the
// protagonist has already won; an empty family means they no longer can.
struct Hypergraph {
  int board_size = 0;
  std::vector<VertexSet> sets;  // always LexLess-sorted

  bool operator==(const Hypergraph&) const = default;
};

// Validates vertex ranges (and the 64-vertex cap) and sorts the family.
Hypergraph MakeHypergraph(int board_size, std::vector<VertexSet> sets);

// A hypergraph together with the relabeling that produced it.
// old_to_new[v] is the new label of old vertex v, or 0 if v was dropped.
struct RelabeledHypergraph {
  Hypergraph h;
  std::array<int, 65> old_to_new{};
};

// The residual board after one full exchange: delete_v leaves the game
// (winning sets containing it die), contract_v joins the protagonist's side
// (it is removed from every set). Surviving vertices are renumbered
// 1..board_size-2 preserving order. No reduction is applied.
RelabeledHypergraph DeleteContract(const Hypergraph& h, int delete_v,
                                   int contract_v);

// Canonical form: duplicate sets removed, supersets of other sets removed,
// vertices in no remaining set dropped, and survivors relabeled 1..k by
// first appearance in the LexLess-sorted family. Idempotent.
Hypergraph Reduce(const Hypergraph& h);
RelabeledHypergraph ReduceWithMap(const Hypergraph& h);

// Same reduction, but over a residual position given as the set of alive
// (unclaimed) vertices plus the current family. junk_count is the number of
// alive vertices that ended up in no reduced set; games are junk-sensitive,
// so transposition keys must carry it alongside the canonical form.
struct ReducedResidual {
  Hypergraph h;
  int junk_count = 0;
};
ReducedResidual ReduceResidual(VertexSet alive,
                               const std::vector<VertexSet>& sets);

// Injective byte encoding of a reduced hypergraph; stable across runs.
std::string CanonicalKey(const Hypergraph& reduced);
std::string ToHex(std::string_view bytes);

// `.hg` text format. Comment lines start with '#'; the first payload line is
// "vertices <n>"; each following "set v1 v2 ..." line lists a winning set
// with strictly increasing vertices ("set" alone is the empty set). Errors
// carry the offending line number. The serializer emits sets in LexLess
// order with LF endings.
Hypergraph ParseHypergraph(std::string_view text);
std::string SerializeHypergraph(const Hypergraph& h);

// The board whose elements are the C(n,2) edges of the complete graph on n
// vertices (lexicographic on endpoint pairs) and whose winning sets are the
// edge sets of its Hamilton cycles.
Hypergraph HamiltonicityHypergraph(int n);

// Edge indexing used by HamiltonicityHypergraph: 1-based position of edge
// {i,j}, i<j, in the lexicographic edge order of K_n.
int CompleteGraphEdgeIndex(int i, int j, int n);

}  // namespace stot

#endif  // STOT_HYPERGRAPH_H_
