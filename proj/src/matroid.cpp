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

#include "stot/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "stot/error.hpp"

namespace stot {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false when x and y were already connected.
  bool Unite(int x, int y) {
    x = Find(x);
    y = Find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

Multigraph ParseMultigraph(std::string_view text) {
  Multigraph g;
  std::map<std::string, int> ids;
  int line_no = 0;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string u, v, extra;
    if (!(ls >> u >> v)) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected 'u v'");
    }
    if (ls >> extra) {
      throw InputError("line " + std::to_string(line_no) +
                       ": trailing tokens");
    }
    const auto id = [&](const std::string& name) {
      auto [it, fresh] = ids.emplace(name, static_cast<int>(ids.size()));
      if (fresh) g.vertex_names.push_back(name);
      return it->second;
    };
    const int uid = id(u);
    const int vid = id(v);
    g.edges.emplace_back(uid, vid);
  }
  if (g.edges.size() > 64) throw InputError("more than 64 edges");
  return g;
}

void Matroid::CheckElements(VertexSet s) const {
  if (!s.SubsetOf(VertexSet::Full(ground_size_))) {
    throw InputError("element out of range 1.." +
                     std::to_string(ground_size_));
  }
}

Matroid Matroid::Uniform(int rank, int ground_size) {
  if (ground_size < 0 || ground_size > 64) {
    throw InputError("ground size must be in 0..64");
  }
  if (rank < 0 || rank > ground_size) {
    throw InputError("uniform rank must be in 0..ground");
  }
  Matroid m;
  m.kind_ = Kind::kUniform;
  m.ground_size_ = ground_size;
  m.uniform_rank_ = rank;
  return m;
}

Matroid Matroid::Graphic(Multigraph g) {
  Matroid m;
  m.kind_ = Kind::kGraphic;
  m.ground_size_ = static_cast<int>(g.edges.size());
  if (m.ground_size_ > 64) throw InputError("more than 64 edges");
  m.graph_ = std::move(g);
  return m;
}

Matroid Matroid::Explicit(int ground_size, std::vector<VertexSet> bases) {
  if (ground_size < 0 || ground_size > 64) {
    throw InputError("ground size must be in 0..64");
  }
  std::sort(bases.begin(), bases.end(),
            [](VertexSet a, VertexSet b) { return LexLess(a, b); });
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (bases.empty()) throw InputError("explicit matroid needs a basis");
  const VertexSet ground = VertexSet::Full(ground_size);
  const int r = bases.front().Count();
  for (VertexSet b : bases) {
    if (!b.SubsetOf(ground)) throw InputError("basis element out of range");
    if (b.Count() != r) throw InputError("bases are not equicardinal");
  }
  // Exchange axiom: for all B1, B2 and e in B1-B2 there is f in B2-B1 with
  // B1-e+f again a basis.
  const auto is_basis = [&bases](VertexSet s) {
    return std::find(bases.begin(), bases.end(), s) != bases.end();
  };
  for (VertexSet b1 : bases) {
    for (VertexSet b2 : bases) {
      for (int e : (b1 - b2).Vertices()) {
        bool found = false;
        for (int f : (b2 - b1).Vertices()) {
          if (is_basis(b1.Minus(e).Plus(f))) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw InputError(
              "basis family violates the exchange axiom (no swap for "
              "element " +
              std::to_string(e) + ")");
        }
      }
    }
  }
  Matroid m;
  m.kind_ = Kind::kExplicit;
  m.ground_size_ = ground_size;
  m.bases_ = std::move(bases);
  return m;
}

int Matroid::Rank(VertexSet s) const {
  CheckElements(s);
  switch (kind_) {
    case Kind::kUniform:
      return std::min(s.Count(), uniform_rank_);
    case Kind::kGraphic: {
      const int n = static_cast<int>(graph_.vertex_names.size());
      if (n == 0) return 0;
      UnionFind uf(n);
      int rank = 0;
      for (int e : s.Vertices()) {
        const auto& [u, v] = graph_.edges[e - 1];
        if (u != v && uf.Unite(u, v)) ++rank;
      }
      return rank;
    }
    case Kind::kExplicit: {
      int best = 0;
      for (VertexSet b : bases_) best = std::max(best, (s & b).Count());
      return best;
    }
  }
  return 0;
}

std::vector<VertexSet> Matroid::EnumerateBases() const {
  if (ground_size_ > 16) {
    throw InputError("basis enumeration is capped at 16 elements");
  }
  if (kind_ == Kind::kExplicit) return bases_;
  const int r = Rank();
  std::vector<VertexSet> out;
  // All size-r subsets in increasing mask order equals LexLess order only
  // after an explicit sort, so sort at the end.
  const std::uint64_t limit = std::uint64_t{1} << ground_size_;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    VertexSet s = VertexSet::FromBits(mask);
    if (s.Count() == r && IsIndependent(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return LexLess(a, b); });
  return out;
}

namespace {

int ExchangeOrFail(const MatroidMinor& m, VertexSet b1, VertexSet b2, int e) {
  if (!m.IsBasis(b1) || !m.IsBasis(b2)) {
    throw InputError("exchange arguments are not bases");
  }
  if (!b1.Contains(e)) throw InputError("exchange element not in first basis");
  for (int f : b2.Vertices()) {
    if (m.IsBasis(b1.Minus(e).Plus(f)) && m.IsBasis(b2.Minus(f).Plus(e))) {
      return f;
    }
  }
  throw std::logic_error("matroid axioms violated: no exchange element");
}

}  // namespace

int SymmetricBaseExchange(const MatroidMinor& m, VertexSet b1, VertexSet b2,
                          int e) {
  return ExchangeOrFail(m, b1, b2, e);
}

int SymmetricBaseExchange(const Matroid& m, VertexSet b1, VertexSet b2,
                          int e) {
  return ExchangeOrFail(MatroidMinor(m), b1, b2, e);
}

std::optional<BasisPair> FindTwoDisjointBases(const Matroid& m) {
  const std::vector<VertexSet> bases = m.EnumerateBases();  // LexLess order
  for (VertexSet b1 : bases) {
    for (VertexSet b2 : bases) {
      if (b1 == b2 && !b1.Empty()) continue;
      if (!b1.Intersects(b2)) return BasisPair{b1, b2};
    }
  }
  return std::nullopt;
}

RestrictedMatroid RestrictTo(const Matroid& m, VertexSet keep) {
  RestrictedMatroid out;
  int next = 0;
  for (int e = 1; e <= m.ground_size(); ++e) {
    out.old_to_new[e] = keep.Contains(e) ? ++next : 0;
  }
  switch (m.kind()) {
    case Matroid::Kind::kUniform:
      out.m = Matroid::Uniform(m.Rank(keep), next);
      break;
    case Matroid::Kind::kGraphic: {
      Multigraph g;
      g.vertex_names = m.graph().vertex_names;
      for (int e : keep.Vertices()) g.edges.push_back(m.graph().edges[e - 1]);
      out.m = Matroid::Graphic(std::move(g));
      break;
    }
    case Matroid::Kind::kExplicit: {
      // Bases of the restriction: maximal independent subsets of keep.
      const int r = m.Rank(keep);
      std::vector<VertexSet> bases;
      const std::vector<int> elems = keep.Vertices();
      const std::uint64_t limit = std::uint64_t{1} << elems.size();
      for (std::uint64_t mask = 0; mask < limit; ++mask) {
        VertexSet s;
        for (std::size_t i = 0; i < elems.size(); ++i) {
          if ((mask >> i) & 1) s = s.Plus(elems[i]);
        }
        if (s.Count() == r && m.IsIndependent(s)) {
          VertexSet renamed;
          for (int e : s.Vertices()) renamed = renamed.Plus(out.old_to_new[e]);
          bases.push_back(renamed);
        }
      }
      out.m = Matroid::Explicit(next, std::move(bases));
      break;
    }
  }
  return out;
}

StrategyOracle LehmanWaiter(const Matroid& m, const BasisPair& pair) {
  const VertexSet ground = VertexSet::Full(m.ground_size());
  if (pair.b1.Intersects(pair.b2) || !((pair.b1 | pair.b2) == ground) ||
      !m.IsBasis(pair.b1) || !m.IsBasis(pair.b2)) {
    throw std::logic_error("pair must partition the ground set into bases");
  }

  auto next = [m, pair](const std::vector<Move>& swc_t) {
    MatroidMinor minor(m);
    VertexSet b1 = pair.b1;
    VertexSet b2 = pair.b2;

    const auto exchange_for = [&](int e) {
      if (b1.Contains(e)) return SymmetricBaseExchange(minor, b1, b2, e);
      if (b2.Contains(e)) return SymmetricBaseExchange(minor, b2, b1, e);
      throw std::logic_error("suggested element is outside the pair");
    };

    std::size_t i = 0;
    while (i + 2 < swc_t.size()) {
      const int e = swc_t[i].a;           // Suggest
      const Move offer = swc_t[i + 1];    // our pair {e, f}
      const int kept = swc_t[i + 2].a;    // Client's element
      const int f = exchange_for(e);
      if (!(offer == Move::OfferPair(e, f))) {
        throw std::logic_error("transcript inconsistent with adapter offers");
      }
      const int waiter_v = kept == e ? f : e;
      // Both halves lose their exchanged element and stay bases of the
      // minor that contracts Waiter's element and deletes Client's.
      if (b1.Contains(e)) {
        b1 = b1.Minus(e);
        b2 = b2.Minus(f);
      } else {
        b2 = b2.Minus(e);
        b1 = b1.Minus(f);
      }
      minor = minor.After(waiter_v, kept);
      if (!minor.IsBasis(b1) || !minor.IsBasis(b2) || b1.Intersects(b2) ||
          !((b1 | b2) == minor.Ground())) {
        throw std::logic_error("basis pair invariant broken after round");
      }
      i += 3;
    }
    if (i + 1 != swc_t.size()) {
      throw std::logic_error("oracle queried out of turn");
    }
    const int e = swc_t[i].a;
    return Move::OfferPair(e, exchange_for(e));
  };
  return StrategyOracle{Role::kWaiter, std::move(next)};
}

Hypergraph MatroidToHypergraph(const Matroid& m) {
  if (m.ground_size() > 16) {
    throw InputError("hypergraph conversion is capped at 16 elements");
  }
  return MakeHypergraph(m.ground_size(), m.EnumerateBases());
}

}  // namespace stot
