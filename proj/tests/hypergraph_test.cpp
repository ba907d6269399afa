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

#include "stot/hypergraph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "stot/error.hpp"
#include "test_util.hpp"

namespace stot {
namespace {

// Reference comparison: materialize the increasing vertex sequences.
bool LexLessReference(VertexSet a, VertexSet b) {
  const std::vector<int> va = a.Vertices();
  const std::vector<int> vb = b.Vertices();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(),
                                      vb.end());
}

void TestLexLessAgainstReference() {
  // Exhaustive over a 6-vertex universe.
  for (std::uint64_t x = 0; x < 64; ++x) {
    for (std::uint64_t y = 0; y < 64; ++y) {
      const VertexSet a = VertexSet::FromBits(x);
      const VertexSet b = VertexSet::FromBits(y);
      STOT_CHECK_EQ(LexLess(a, b), LexLessReference(a, b));
    }
  }
  // Random wide masks, including the top bit.
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 20000; ++i) {
    const VertexSet a = VertexSet::FromBits(rng());
    const VertexSet b = VertexSet::FromBits(rng());
    STOT_CHECK_EQ(LexLess(a, b), LexLessReference(a, b));
  }
}

void TestVertexSetBasics() {
  const VertexSet s = VertexSet::Of({2, 5, 7});
  STOT_CHECK_EQ(s.Count(), 3);
  STOT_CHECK(s.Contains(5));
  STOT_CHECK(!s.Contains(3));
  STOT_CHECK_EQ(s.Lowest(), 2);
  STOT_CHECK_EQ(s.Minus(2).Lowest(), 5);
  STOT_CHECK(VertexSet::Of({2, 5}).SubsetOf(s));
  STOT_CHECK_EQ(VertexSet::Full(64).Count(), 64);
  STOT_CHECK_EQ(VertexSet::Full(0).Count(), 0);
}

void TestDeleteContractExamples() {
  // X={1,2,3}, F={{1,2},{2,3}}, delete 1 / contract 2: the survivor is old
  // vertex 3 and the single set is {3} in old labels.
  {
    const Hypergraph h =
        MakeHypergraph(3, {VertexSet::Of({1, 2}), VertexSet::Of({2, 3})});
    const RelabeledHypergraph r = DeleteContract(h, 1, 2);
    STOT_CHECK_EQ(r.h.board_size, 1);
    STOT_CHECK_EQ(r.old_to_new[3], 1);
    STOT_CHECK_EQ(r.h.sets,
                  std::vector<VertexSet>{VertexSet::Single(1)});
  }
  // X={1,2}, F={{1}}, delete 2 / contract 1: empty winning set remains --
  // the contracting player has already won.
  {
    const Hypergraph h = MakeHypergraph(2, {VertexSet::Single(1)});
    const RelabeledHypergraph r = DeleteContract(h, 2, 1);
    STOT_CHECK_EQ(r.h.board_size, 0);
    STOT_CHECK_EQ(r.h.sets, std::vector<VertexSet>{VertexSet{}});
  }
  // X={1,2,3}, F={{1,2,3}}, delete 3 / contract 2: no winning sets remain.
  {
    const Hypergraph h = MakeHypergraph(3, {VertexSet::Of({1, 2, 3})});
    const RelabeledHypergraph r = DeleteContract(h, 3, 2);
    STOT_CHECK_EQ(r.h.board_size, 1);
    STOT_CHECK(r.h.sets.empty());
  }
  STOT_CHECK_THROWS(
      DeleteContract(MakeHypergraph(2, {VertexSet::Single(1)}), 1, 1),
      InputError);
  STOT_CHECK_THROWS(
      DeleteContract(MakeHypergraph(2, {VertexSet::Single(1)}), 1, 5),
      InputError);
}

Hypergraph RandomHypergraph(std::mt19937& rng, int max_board, int max_sets) {
  std::uniform_int_distribution<int> board_dist(1, max_board);
  const int n = board_dist(rng);
  std::uniform_int_distribution<int> count_dist(0, max_sets);
  std::uniform_int_distribution<std::uint64_t> mask_dist(
      0, (std::uint64_t{1} << n) - 1);
  std::vector<VertexSet> sets;
  const int k = count_dist(rng);
  for (int i = 0; i < k; ++i) sets.push_back(VertexSet::FromBits(mask_dist(rng)));
  return MakeHypergraph(n, std::move(sets));
}

// Definition re-check: enumerate every candidate subset of the new board and
// test membership directly against the rule.
void TestDeleteContractDefinition() {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Hypergraph h = RandomHypergraph(rng, 6, 5);
    if (h.board_size < 2) continue;
    for (int v1 = 1; v1 <= h.board_size; ++v1) {
      for (int v2 = 1; v2 <= h.board_size; ++v2) {
        if (v1 == v2) continue;
        const RelabeledHypergraph r = DeleteContract(h, v1, v2);
        // Map new labels back to old.
        std::vector<int> new_to_old(r.h.board_size + 1, 0);
        for (int v = 1; v <= h.board_size; ++v) {
          if (r.old_to_new[v] != 0) new_to_old[r.old_to_new[v]] = v;
        }
        const std::uint64_t limit = std::uint64_t{1} << r.h.board_size;
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
          VertexSet f_old;
          for (int v = 1; v <= r.h.board_size; ++v) {
            if ((mask >> (v - 1)) & 1) f_old = f_old.Plus(new_to_old[v]);
          }
          const bool in_family =
              std::count(r.h.sets.begin(), r.h.sets.end(),
                         VertexSet::FromBits(mask)) > 0;
          const bool should =
              !f_old.Contains(v1) &&
              (std::count(h.sets.begin(), h.sets.end(), f_old) > 0 ||
               std::count(h.sets.begin(), h.sets.end(), f_old.Plus(v2)) > 0);
          STOT_CHECK_EQ(in_family, should);
        }
      }
    }
  }
}

void TestReduceExamples() {
  // Superset removal.
  {
    const Hypergraph h =
        MakeHypergraph(3, {VertexSet::Of({1, 2}), VertexSet::Of({1, 2, 3})});
    const Hypergraph r = Reduce(h);
    STOT_CHECK_EQ(r.board_size, 2);
    STOT_CHECK_EQ(r.sets, std::vector<VertexSet>{VertexSet::Of({1, 2})});
  }
  // Empty family.
  {
    const Hypergraph r = Reduce(MakeHypergraph(5, {}));
    STOT_CHECK_EQ(r.board_size, 0);
    STOT_CHECK(r.sets.empty());
  }
  // Relabeling by first appearance.
  {
    const Hypergraph h =
        MakeHypergraph(3, {VertexSet::Single(2), VertexSet::Single(3)});
    const Hypergraph r = Reduce(h);
    STOT_CHECK_EQ(r.board_size, 2);
    const std::vector<VertexSet> want{VertexSet::Single(1),
                                      VertexSet::Single(2)};
    STOT_CHECK_EQ(r.sets, want);
  }
  // An empty member set dominates everything else.
  {
    const Hypergraph h = MakeHypergraph(3, {VertexSet{}, VertexSet::Of({1})});
    const Hypergraph r = Reduce(h);
    STOT_CHECK_EQ(r.board_size, 0);
    STOT_CHECK_EQ(r.sets, std::vector<VertexSet>{VertexSet{}});
  }
}

void TestReduceIdempotent() {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const Hypergraph red = Reduce(RandomHypergraph(rng, 8, 6));
    STOT_CHECK_EQ(Reduce(red), red);
  }
}

// Label-order canonicalization is not isomorphism-complete, so the two
// reduction orders may disagree on labels; they must agree on the abstract
// hypergraph.
bool Isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.board_size != b.board_size) return false;
  if (a.sets.size() != b.sets.size()) return false;
  std::vector<int> perm(a.board_size);
  for (int i = 0; i < a.board_size; ++i) perm[i] = i + 1;
  std::vector<std::uint64_t> want;
  for (VertexSet f : b.sets) want.push_back(f.bits());
  std::sort(want.begin(), want.end());
  do {
    std::vector<std::uint64_t> got;
    for (VertexSet f : a.sets) {
      VertexSet mapped;
      for (int v : f.Vertices()) mapped = mapped.Plus(perm[v - 1]);
      got.push_back(mapped.bits());
    }
    std::sort(got.begin(), got.end());
    if (got == want) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void TestReduceCommutesWithDeleteContract() {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Hypergraph h = RandomHypergraph(rng, 6, 5);
    const RelabeledHypergraph red = ReduceWithMap(h);
    for (int v1 = 1; v1 <= h.board_size; ++v1) {
      for (int v2 = 1; v2 <= h.board_size; ++v2) {
        if (v1 == v2) continue;
        const Hypergraph lhs = Reduce(DeleteContract(h, v1, v2).h);
        const int p1 = red.old_to_new[v1];
        const int p2 = red.old_to_new[v2];
        if (p1 == 0 || p2 == 0) continue;  // dropped as junk
        const Hypergraph rhs = Reduce(DeleteContract(red.h, p1, p2).h);
        STOT_CHECK(Isomorphic(lhs, rhs));
      }
    }
  }
}

// What the transposition table actually relies on: the same claims applied
// in any order yield byte-identical reduced residuals (the residual family
// is literally the same set of masks).
void TestReduceResidualOrderInsensitive() {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const Hypergraph h = RandomHypergraph(rng, 8, 6);
    if (h.board_size < 4) continue;
    std::vector<int> vs(h.board_size);
    for (int i = 0; i < h.board_size; ++i) vs[i] = i + 1;
    std::shuffle(vs.begin(), vs.end(), rng);
    const int d1 = vs[0], c1 = vs[1], d2 = vs[2], c2 = vs[3];

    const auto apply = [&](std::vector<std::pair<int, bool>> ops) {
      std::vector<VertexSet> sets = h.sets;
      VertexSet alive = VertexSet::Full(h.board_size);
      for (const auto& [v, is_delete] : ops) {
        alive = alive.Minus(v);
        if (is_delete) {
          std::erase_if(sets, [v = v](VertexSet f) { return f.Contains(v); });
        } else {
          for (VertexSet& f : sets) f = f.Minus(v);
        }
      }
      const ReducedResidual rr = ReduceResidual(alive, sets);
      return std::pair{CanonicalKey(rr.h), rr.junk_count};
    };
    const auto a = apply({{d1, true}, {c1, false}, {d2, true}, {c2, false}});
    const auto b = apply({{d2, true}, {c2, false}, {d1, true}, {c1, false}});
    const auto c = apply({{c2, false}, {d1, true}, {c1, false}, {d2, true}});
    STOT_CHECK_EQ(a, b);
    STOT_CHECK_EQ(a, c);
  }
}

void TestCanonicalKey() {
  // Label independence of reduced forms.
  const Hypergraph a = Reduce(
      MakeHypergraph(3, {VertexSet::Of({1, 2}), VertexSet::Of({1, 2, 3})}));
  const Hypergraph b = Reduce(MakeHypergraph(5, {VertexSet::Of({4, 5})}));
  STOT_CHECK_EQ(CanonicalKey(a), CanonicalKey(b));

  const Hypergraph c = Reduce(MakeHypergraph(1, {VertexSet::Single(1)}));
  const Hypergraph d = Reduce(MakeHypergraph(2, {VertexSet::Of({1, 2})}));
  STOT_CHECK(CanonicalKey(c) != CanonicalKey(d));

  STOT_CHECK_EQ(CanonicalKey(a), CanonicalKey(a));  // determinism
}

void TestParseSerialize() {
  const Hypergraph h = ParseHypergraph("vertices 3\nset 1 2\nset 2 3\n");
  STOT_CHECK_EQ(h.board_size, 3);
  const std::vector<VertexSet> want{VertexSet::Of({1, 2}),
                                    VertexSet::Of({2, 3})};
  STOT_CHECK_EQ(h.sets, want);

  STOT_CHECK_THROWS(ParseHypergraph("vertices 2\nset 1 5\n"), InputError);
  STOT_CHECK_THROWS(ParseHypergraph("vertices 2\nset 2 1\n"), InputError);
  STOT_CHECK_THROWS(ParseHypergraph("vertices 2\nset 1\nset 1\n"),
                    InputError);
  STOT_CHECK_THROWS(ParseHypergraph("set 1\n"), InputError);
  STOT_CHECK_THROWS(ParseHypergraph("vertices 65\n"), InputError);

  // Line numbers in diagnostics.
  try {
    ParseHypergraph("# comment\nvertices 2\nset 1 5\n");
    STOT_CHECK(false);
  } catch (const InputError& e) {
    STOT_CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  const std::string text = "vertices 3\nset 1 2\nset 2 3\n";
  STOT_CHECK_EQ(SerializeHypergraph(ParseHypergraph(text)), text);

  // Comments and the empty set are accepted.
  const Hypergraph he = ParseHypergraph("# empty set wins instantly\nvertices 2\nset\n");
  STOT_CHECK_EQ(he.sets, std::vector<VertexSet>{VertexSet{}});

  // Round trip on random instances.
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    Hypergraph g = RandomHypergraph(rng, 8, 5);
    // Parsing rejects duplicates, so dedupe before the round trip.
    std::sort(g.sets.begin(), g.sets.end(),
              [](VertexSet x, VertexSet y) { return x.bits() < y.bits(); });
    g.sets.erase(std::unique(g.sets.begin(), g.sets.end()), g.sets.end());
    g = MakeHypergraph(g.board_size, g.sets);
    STOT_CHECK_EQ(ParseHypergraph(SerializeHypergraph(g)), g);
  }
}

// Independent Hamilton-cycle oracle: filter all n-edge subsets of K_n by
// "every vertex has degree 2 and the edges form one connected cycle".
std::set<std::uint64_t> HamiltonCyclesBySubsetFilter(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  const int m = static_cast<int>(edges.size());
  std::set<std::uint64_t> cycles;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != n) continue;
    std::vector<int> degree(n + 1, 0);
    for (int e = 0; e < m; ++e) {
      if ((mask >> e) & 1) {
        ++degree[edges[e].first];
        ++degree[edges[e].second];
      }
    }
    bool all_two = true;
    for (int v = 1; v <= n; ++v) all_two = all_two && degree[v] == 2;
    if (!all_two) continue;
    // Walk the cycle from vertex 1; it must visit all n vertices.
    int prev = 0, cur = 1, visited = 1;
    do {
      int next = 0;
      for (int e = 0; e < m; ++e) {
        if (!((mask >> e) & 1)) continue;
        const auto [u, w] = edges[e];
        if (u == cur && w != prev) { next = w; break; }
        if (w == cur && u != prev) { next = u; break; }
      }
      prev = cur;
      cur = next;
      ++visited;
    } while (cur != 1 && cur != 0);
    if (cur == 1 && visited == n + 1) cycles.insert(mask);
  }
  return cycles;
}

void TestHamiltonicityAgainstOracle() {
  STOT_CHECK_THROWS(HamiltonicityHypergraph(2), InputError);

  const Hypergraph h3 = HamiltonicityHypergraph(3);
  STOT_CHECK_EQ(h3.board_size, 3);
  STOT_CHECK_EQ(h3.sets, std::vector<VertexSet>{VertexSet::Of({1, 2, 3})});

  const Hypergraph h4 = HamiltonicityHypergraph(4);
  STOT_CHECK_EQ(h4.board_size, 6);
  STOT_CHECK_EQ(h4.sets.size(), std::size_t{3});
  for (VertexSet f : h4.sets) STOT_CHECK_EQ(f.Count(), 4);

  const Hypergraph h5 = HamiltonicityHypergraph(5);
  STOT_CHECK_EQ(h5.board_size, 10);
  STOT_CHECK_EQ(h5.sets.size(), std::size_t{12});
  for (VertexSet f : h5.sets) STOT_CHECK_EQ(f.Count(), 5);

  for (int n = 3; n <= 7; ++n) {
    const std::set<std::uint64_t> oracle = HamiltonCyclesBySubsetFilter(n);
    const Hypergraph h = HamiltonicityHypergraph(n);
    std::set<std::uint64_t> got;
    for (VertexSet f : h.sets) got.insert(f.bits());
    STOT_CHECK_EQ(got.size(), h.sets.size());  // no duplicates
    STOT_CHECK_EQ(got, oracle);
  }
}

}  // namespace
}  // namespace stot

int main() {
  return stot::testing::RunAll({
      {"LexLessAgainstReference", stot::TestLexLessAgainstReference},
      {"VertexSetBasics", stot::TestVertexSetBasics},
      {"DeleteContractExamples", stot::TestDeleteContractExamples},
      {"DeleteContractDefinition", stot::TestDeleteContractDefinition},
      {"ReduceExamples", stot::TestReduceExamples},
      {"ReduceIdempotent", stot::TestReduceIdempotent},
      {"ReduceCommutesWithDeleteContract",
       stot::TestReduceCommutesWithDeleteContract},
      {"ReduceResidualOrderInsensitive",
       stot::TestReduceResidualOrderInsensitive},
      {"CanonicalKey", stot::TestCanonicalKey},
      {"ParseSerialize", stot::TestParseSerialize},
      {"HamiltonicityAgainstOracle", stot::TestHamiltonicityAgainstOracle},
  });
}
