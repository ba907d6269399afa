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
#include <cassert>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

#include "stot/error.hpp"

namespace stot {

namespace {

void SortFamily(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return LexLess(a, b); });
}

}  // namespace

Hypergraph MakeHypergraph(int board_size, std::vector<VertexSet> sets) {
  if (board_size < 0) throw InputError("negative board size");
  if (board_size > 64) {
    throw InputError("board exceeds 64 vertices (" +
                     std::to_string(board_size) + ")");
  }
  const VertexSet board = VertexSet::Full(board_size);
  for (const VertexSet& s : sets) {
    if (!s.SubsetOf(board)) {
      throw InputError("winning set contains a vertex outside 1.." +
                       std::to_string(board_size));
    }
  }
  SortFamily(sets);
  return Hypergraph{board_size, std::move(sets)};
}

RelabeledHypergraph DeleteContract(const Hypergraph& h, int delete_v,
                                   int contract_v) {
  if (delete_v == contract_v) {
    throw InputError("delete and contract vertices must differ");
  }
  const VertexSet board = VertexSet::Full(h.board_size);
  if (delete_v < 1 || !board.Contains(delete_v) || contract_v < 1 ||
      !board.Contains(contract_v)) {
    throw InputError("vertex out of range for delete/contract");
  }

  RelabeledHypergraph out;
  int next = 0;
  for (int v = 1; v <= h.board_size; ++v) {
    out.old_to_new[v] = (v == delete_v || v == contract_v) ? 0 : ++next;
  }

  std::vector<VertexSet> sets;
  sets.reserve(h.sets.size());
  for (VertexSet f : h.sets) {
    if (f.Contains(delete_v)) continue;
    f = f.Minus(contract_v);
    VertexSet mapped;
    for (int v : f.Vertices()) mapped = mapped.Plus(out.old_to_new[v]);
    sets.push_back(mapped);
  }
  out.h = MakeHypergraph(next, std::move(sets));
  return out;
}

namespace {

// First-appearance permutation over the LexLess-sorted family; labels are
// dense 1..k. Returns true when it is the identity.
bool FirstAppearancePerm(const std::vector<VertexSet>& sorted_sets, int k,
                         std::array<int, 65>& perm) {
  perm.fill(0);
  int next = 0;
  for (VertexSet f : sorted_sets) {
    for (int v : f.Vertices()) {
      if (perm[v] == 0) perm[v] = ++next;
    }
  }
  for (int v = 1; v <= k; ++v) {
    if (perm[v] != v) return false;
  }
  return true;
}

std::vector<VertexSet> ApplyPerm(const std::vector<VertexSet>& sets,
                                 const std::array<int, 65>& perm) {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (VertexSet f : sets) {
    VertexSet mapped;
    for (int v : f.Vertices()) mapped = mapped.Plus(perm[v]);
    out.push_back(mapped);
  }
  return out;
}

std::string FamilyBytes(const std::vector<VertexSet>& sets) {
  std::string bytes;
  bytes.reserve(8 * sets.size());
  for (VertexSet f : sets) {
    const std::uint64_t b = f.bits();
    for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<char>(b >> (8 * i)));
  }
  return bytes;
}

struct ReductionCore {
  std::vector<VertexSet> sets;  // minimal antichain in canonical labels
  std::array<int, 65> old_to_new{};
  int board = 0;        // number of labeled (non-junk) vertices
  VertexSet support;    // support in the original labels
};

// Dedupe, drop supersets, drop junk vertices, and relabel by first
// appearance in the sorted family. Relabeling can reorder the family, so the
// sort+relabel pass is iterated to a fixpoint; the (finite) iteration is
// resolved deterministically by taking the least encoding if it ever cycles
// without fixing. Result: deterministic, idempotent canonical form.
ReductionCore Canonicalize(const std::vector<VertexSet>& input) {
  std::vector<VertexSet> family = input;
  std::sort(family.begin(), family.end(),
            [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> minimal;
  minimal.reserve(family.size());
  for (VertexSet f : family) {
    bool has_proper_subset = false;
    for (VertexSet g : family) {
      if (g != f && g.SubsetOf(f)) {
        has_proper_subset = true;
        break;
      }
    }
    if (!has_proper_subset) minimal.push_back(f);
  }
  SortFamily(minimal);

  ReductionCore core;
  for (VertexSet f : minimal) core.support = core.support | f;
  core.board = core.support.Count();

  // First pass maps original labels to dense 1..k.
  std::array<int, 65> perm{};
  FirstAppearancePerm(minimal, 0, perm);
  core.old_to_new = perm;
  core.sets = ApplyPerm(minimal, perm);
  SortFamily(core.sets);

  std::vector<std::pair<std::string, std::size_t>> seen;  // bytes -> index
  std::vector<std::vector<VertexSet>> states{core.sets};
  std::vector<std::array<int, 65>> maps{core.old_to_new};
  for (;;) {
    if (FirstAppearancePerm(states.back(), core.board, perm)) break;
    std::vector<VertexSet> next = ApplyPerm(states.back(), perm);
    SortFamily(next);
    std::array<int, 65> composed{};
    for (int v = 1; v <= 64; ++v) {
      composed[v] = maps.back()[v] == 0 ? 0 : perm[maps.back()[v]];
    }
    const std::string bytes = FamilyBytes(next);
    bool cycled = false;
    for (const auto& [b, idx] : seen) {
      if (b == bytes) {
        // Pick the least encoding within the cycle.
        std::size_t best = idx;
        for (std::size_t i = idx; i < states.size(); ++i) {
          if (FamilyBytes(states[i]) < FamilyBytes(states[best])) best = i;
        }
        states.back() = states[best];
        maps.back() = maps[best];
        cycled = true;
        break;
      }
    }
    if (cycled) break;
    seen.emplace_back(bytes, states.size());
    states.push_back(std::move(next));
    maps.push_back(composed);
  }
  core.sets = states.back();
  core.old_to_new = maps.back();
  return core;
}

}  // namespace

ReducedResidual ReduceResidual(VertexSet alive,
                               const std::vector<VertexSet>& sets) {
  ReductionCore core = Canonicalize(sets);
  ReducedResidual out;
  out.h = Hypergraph{core.board, std::move(core.sets)};
  out.junk_count = (alive - core.support).Count();
  return out;
}

RelabeledHypergraph ReduceWithMap(const Hypergraph& h) {
  ReductionCore core = Canonicalize(h.sets);
  RelabeledHypergraph out;
  out.h = Hypergraph{core.board, std::move(core.sets)};
  out.old_to_new = core.old_to_new;
  return out;
}

Hypergraph Reduce(const Hypergraph& h) { return ReduceWithMap(h).h; }

std::string CanonicalKey(const Hypergraph& reduced) {
  std::string key;
  key.reserve(5 + 8 * reduced.sets.size());
  key.push_back(static_cast<char>(reduced.board_size));
  const std::uint32_t n = static_cast<std::uint32_t>(reduced.sets.size());
  for (int i = 0; i < 4; ++i) key.push_back(static_cast<char>(n >> (8 * i)));
  for (VertexSet f : reduced.sets) {
    const std::uint64_t b = f.bits();
    for (int i = 0; i < 8; ++i) key.push_back(static_cast<char>(b >> (8 * i)));
  }
  return key;
}

std::string ToHex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

namespace {

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

[[noreturn]] void ParseFail(int line_no, const std::string& msg) {
  throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Hypergraph ParseHypergraph(std::string_view text) {
  const std::vector<std::string> lines = SplitLines(text);
  int board_size = -1;
  std::vector<VertexSet> sets;
  std::vector<VertexSet> seen;  // for duplicate-line detection

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    std::string line = lines[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') continue;

    std::istringstream in(line);
    std::string word;
    in >> word;
    if (board_size < 0) {
      if (word != "vertices") ParseFail(line_no, "expected 'vertices <n>'");
      long long n = -1;
      if (!(in >> n) || n < 0) ParseFail(line_no, "bad vertex count");
      if (n > 64) ParseFail(line_no, "board exceeds 64 vertices");
      std::string extra;
      if (in >> extra) ParseFail(line_no, "trailing tokens after count");
      board_size = static_cast<int>(n);
      continue;
    }
    if (word != "set") ParseFail(line_no, "expected 'set <v1> <v2> ...'");
    VertexSet s;
    long long v = 0;
    int prev = 0;
    while (in >> v) {
      if (v < 1 || v > board_size) {
        ParseFail(line_no, "vertex " + std::to_string(v) + " > " +
                               std::to_string(board_size));
      }
      if (v <= prev) ParseFail(line_no, "vertices must be strictly increasing");
      prev = static_cast<int>(v);
      s = s.Plus(prev);
    }
    if (!in.eof()) ParseFail(line_no, "malformed vertex token");
    for (VertexSet t : seen) {
      if (t == s) ParseFail(line_no, "duplicate set");
    }
    seen.push_back(s);
    sets.push_back(s);
  }
  if (board_size < 0) throw InputError("missing 'vertices <n>' line");
  return MakeHypergraph(board_size, std::move(sets));
}

std::string SerializeHypergraph(const Hypergraph& h) {
  std::vector<VertexSet> sets = h.sets;
  SortFamily(sets);
  std::string out = "vertices " + std::to_string(h.board_size) + "\n";
  for (VertexSet f : sets) {
    out += "set";
    for (int v : f.Vertices()) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

int CompleteGraphEdgeIndex(int i, int j, int n) {
  assert(1 <= i && i < j && j <= n);
  return (i - 1) * n - i * (i - 1) / 2 + (j - i);
}

Hypergraph HamiltonicityHypergraph(int n) {
  if (n < 3) throw InputError("Hamiltonicity board needs n >= 3");
  if (n * (n - 1) / 2 > 64) {
    throw InputError("Hamiltonicity board for n=" + std::to_string(n) +
                     " exceeds 64 edges");
  }
  const int board = n * (n - 1) / 2;

  // One representative per cycle: fix vertex 1 first and orient so the
  // second vertex is smaller than the last.
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<VertexSet> sets;
  do {
    if (rest.front() > rest.back()) continue;
    VertexSet cycle;
    int prev = 1;
    for (int v : rest) {
      cycle = cycle.Plus(
          CompleteGraphEdgeIndex(std::min(prev, v), std::max(prev, v), n));
      prev = v;
    }
    cycle = cycle.Plus(CompleteGraphEdgeIndex(1, prev, n));
    sets.push_back(cycle);
  } while (std::next_permutation(rest.begin(), rest.end()));

  return MakeHypergraph(board, std::move(sets));
}

}  // namespace stot
