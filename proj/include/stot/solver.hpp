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

#ifndef STOT_SOLVER_H_
#define STOT_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "stot/games.hpp"
#include "stot/hypergraph.hpp"

namespace stot {

struct SolveReport {
  Winner winner = Winner::kBreakerSide;
  // Lexicographically least move achieving the state's value for the player
  // to act; absent on terminal states.
  std::optional<Move> optimal_move;
  std::uint64_t states_visited = 0;
  std::uint64_t table_hits = 0;
};

// Exact solver: memoized exhaustive search over residual positions. The
// transposition key is (canonical reduced residual, junk-vertex count,
// phase); entries are write-once. One Solver instance is sequential;
// separate instances are independent and may run concurrently.
//
// Boards are hard-capped at 64 elements. Practical runtime limits are much
// lower and depend on the family structure: roughly 18 elements for the
// Waiter-Client variants and 22 for Maker-Breaker. Nothing enforces these;
// bigger boards just take correspondingly longer.
class Solver {
 public:
  Solver(const Variant& variant, const Hypergraph& h, bool use_table = true);

  SolveReport Solve();
  SolveReport SolveState(const GameState& state);

 private:
  struct Node {
    VertexSet alive;
    std::vector<VertexSet> sets;
    Phase phase;
  };
  std::optional<bool> NormalizeNode(Node& n) const;
  bool MakerWins(Node n);
  bool ChildValue(Node base, Role role, int v, Phase next);

  Variant variant_;
  Hypergraph h_;
  bool use_table_;
  std::unordered_map<std::string, bool> table_;
  std::uint64_t states_ = 0;
  std::uint64_t hits_ = 0;
};

// Convenience wrapper: fresh solver, initial position.
SolveReport Solve(const Variant& variant, const Hypergraph& h);

// Independent oracle: plain recursion over claimed sets with the win test
// done by direct subset containment. No memoization, no residual reduction;
// shares none of Solver's state-reduction machinery. Boards are capped at 10
// vertices because the recursion is exponential.
Winner NaiveSolve(const Variant& variant, const Hypergraph& h);

// Wraps solve-backed move extraction as a transcript-to-move oracle for
// `side`. Precondition: `side` wins the game (std::logic_error otherwise).
// The returned oracle shares one transposition table across queries and is
// not meant to be queried from multiple threads at once.
StrategyOracle OptimalStrategy(const Variant& variant, const Hypergraph& h,
                               Role side);

}  // namespace stot

#endif  // STOT_SOLVER_H_
