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

#include "stot/solver.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

#include "stot/error.hpp"

namespace stot {

namespace {

bool Memoizable(Phase::Tag tag) {
  switch (tag) {
    case Phase::Tag::kMbClaim:
    case Phase::Tag::kSmbAnnounce:
    case Phase::Tag::kSmbClaim:
    case Phase::Tag::kWcOffer:
    case Phase::Tag::kSwcSuggest:
      return true;
    default:
      return false;  // kSwcAdd and kPick carry vertices; searched inline
  }
}

Role SmbClaimant(const Phase& p) {
  const bool breaker_slot =
      (p.order == TurnOrder::kBreakerFirst) != p.second;
  return breaker_slot ? Role::kBreaker : Role::kMaker;
}

}  // namespace

Solver::Solver(const Variant& variant, const Hypergraph& h, bool use_table)
    : variant_(variant), h_(h), use_table_(use_table) {
  if (h.board_size > 64) throw InputError("board exceeds 64 vertices");
}

std::optional<bool> Solver::NormalizeNode(Node& n) const {
  for (;;) {
    for (VertexSet f : n.sets) {
      if (f.Empty()) return true;
    }
    if (n.sets.empty()) return false;
    if (n.alive.Empty()) return false;
    if ((n.phase.tag == Phase::Tag::kWcOffer ||
         n.phase.tag == Phase::Tag::kSwcSuggest) &&
        n.alive.Count() == 1) {
      const int v = n.alive.Lowest();
      n.alive = n.alive.Minus(v);
      std::erase_if(n.sets, [v](VertexSet f) { return f.Contains(v); });
      continue;
    }
    return std::nullopt;
  }
}

// Settles one claim and advances to `next`, then evaluates.
bool Solver::ChildValue(Node base, Role role, int v, Phase next) {
  base.alive = base.alive.Minus(v);
  if (SideOf(role) == Winner::kMakerSide) {
    for (VertexSet& f : base.sets) f = f.Minus(v);
  } else {
    std::erase_if(base.sets, [v](VertexSet f) { return f.Contains(v); });
  }
  base.phase = next;
  return MakerWins(std::move(base));
}

bool Solver::MakerWins(Node n) {
  if (auto settled = NormalizeNode(n); settled.has_value()) return *settled;

  std::string key;
  if (use_table_ && Memoizable(n.phase.tag)) {
    const ReducedResidual rr = ReduceResidual(n.alive, n.sets);
    key = CanonicalKey(rr.h);
    key.push_back(static_cast<char>(rr.junk_count));
    key.push_back(static_cast<char>(n.phase.tag));
    key.push_back(static_cast<char>(n.phase.to_claim));
    key.push_back(static_cast<char>(n.phase.order));
    key.push_back(static_cast<char>(n.phase.second));
    for (int i = 0; i < 4; ++i) {
      key.push_back(static_cast<char>(n.phase.moves_left >> (8 * i)));
    }
    if (auto it = table_.find(key); it != table_.end()) {
      ++hits_;
      return it->second;
    }
  }
  ++states_;

  bool value = false;
  switch (n.phase.tag) {
    case Phase::Tag::kMbClaim: {
      const Role mover = n.phase.to_claim;
      const bool maker_moves = mover == Role::kMaker;
      Phase next = n.phase;
      if (n.phase.moves_left > 1) {
        next.moves_left = n.phase.moves_left - 1;
      } else {
        const Role other =
            mover == Role::kMaker ? Role::kBreaker : Role::kMaker;
        next = Phase{Phase::Tag::kMbClaim, other,
                     other == Role::kMaker ? variant_.maker_quota
                                           : variant_.breaker_quota};
      }
      value = !maker_moves;
      for (int v : n.alive.Vertices()) {
        const bool child = ChildValue(n, mover, v, next);
        if (child == maker_moves) {
          value = child;
          break;
        }
      }
      break;
    }
    case Phase::Tag::kSmbAnnounce: {
      // Breaker's decision: Maker must win under both orders.
      value = true;
      for (TurnOrder o : {TurnOrder::kBreakerFirst, TurnOrder::kMakerFirst}) {
        Node child = n;
        child.phase = Phase{};
        child.phase.tag = Phase::Tag::kSmbClaim;
        child.phase.order = o;
        child.phase.second = false;
        if (!MakerWins(std::move(child))) {
          value = false;
          break;
        }
      }
      break;
    }
    case Phase::Tag::kSmbClaim: {
      const Role mover = SmbClaimant(n.phase);
      const bool maker_moves = mover == Role::kMaker;
      Phase next = n.phase;
      if (!n.phase.second) {
        next.second = true;
      } else {
        next = Phase{};
        next.tag = Phase::Tag::kSmbAnnounce;
      }
      value = !maker_moves;
      for (int v : n.alive.Vertices()) {
        const bool child = ChildValue(n, mover, v, next);
        if (child == maker_moves) {
          value = child;
          break;
        }
      }
      break;
    }
    case Phase::Tag::kWcOffer: {
      value = false;
      const std::vector<int> vs = n.alive.Vertices();
      for (std::size_t i = 0; i < vs.size() && !value; ++i) {
        for (std::size_t j = i + 1; j < vs.size() && !value; ++j) {
          Node child = n;
          child.phase = Phase{};
          child.phase.tag = Phase::Tag::kPick;
          child.phase.x = vs[i];
          child.phase.y = vs[j];
          value = MakerWins(std::move(child));
        }
      }
      break;
    }
    case Phase::Tag::kSwcSuggest: {
      // Client suggests: Waiter must survive every suggestion.
      value = true;
      for (int v : n.alive.Vertices()) {
        Node child = n;
        child.phase = Phase{};
        child.phase.tag = Phase::Tag::kSwcAdd;
        child.phase.x = v;
        if (!MakerWins(std::move(child))) {
          value = false;
          break;
        }
      }
      break;
    }
    case Phase::Tag::kSwcAdd: {
      value = false;
      for (int w : n.alive.Vertices()) {
        if (w == n.phase.x) continue;
        Node child = n;
        child.phase = Phase{};
        child.phase.tag = Phase::Tag::kPick;
        child.phase.x = std::min(n.phase.x, w);
        child.phase.y = std::max(n.phase.x, w);
        if (MakerWins(std::move(child))) {
          value = true;
          break;
        }
      }
      break;
    }
    case Phase::Tag::kPick: {
      // Client keeps one element; the other settles for Waiter.
      const Phase next_phase = [this] {
        Phase p;
        p.tag = variant_.kind == Variant::Kind::kWaiterClient
                    ? Phase::Tag::kWcOffer
                    : Phase::Tag::kSwcSuggest;
        return p;
      }();
      value = true;
      for (int keep : {n.phase.x, n.phase.y}) {
        const int other = keep == n.phase.x ? n.phase.y : n.phase.x;
        Node child = n;
        child.alive = child.alive.Minus(keep).Minus(other);
        std::erase_if(child.sets,
                      [keep](VertexSet f) { return f.Contains(keep); });
        for (VertexSet& f : child.sets) f = f.Minus(other);
        child.phase = next_phase;
        if (!MakerWins(std::move(child))) {
          value = false;
          break;
        }
      }
      break;
    }
    case Phase::Tag::kTerminal:
      throw std::logic_error("search reached an unnormalized terminal node");
  }

  if (!key.empty()) table_.emplace(std::move(key), value);
  return value;
}

SolveReport Solver::Solve() {
  return SolveState(GameState::NewGame(variant_, h_));
}

SolveReport Solver::SolveState(const GameState& state) {
  if (!(state.variant() == variant_) || !(state.original() == h_)) {
    throw std::logic_error("state does not belong to this solver");
  }
  const std::uint64_t states_before = states_;
  const std::uint64_t hits_before = hits_;

  SolveReport report;
  if (state.IsTerminal()) {
    report.winner = *WinnerOf(state);
    return report;
  }

  Node root{state.unclaimed(), state.residual_sets(), state.phase()};
  const bool maker_wins = MakerWins(root);
  report.winner = maker_wins ? Winner::kMakerSide : Winner::kBreakerSide;

  const Winner mover_side = SideOf(state.Decider());
  std::optional<Move> fallback;
  for (const Move& m : state.LegalMoves()) {
    if (!fallback.has_value()) fallback = m;
    const GameState child = state.ApplyMove(m);
    bool child_maker_wins;
    if (child.IsTerminal()) {
      child_maker_wins = *WinnerOf(child) == Winner::kMakerSide;
    } else {
      Node cn{child.unclaimed(), child.residual_sets(), child.phase()};
      child_maker_wins = MakerWins(std::move(cn));
    }
    const Winner child_winner =
        child_maker_wins ? Winner::kMakerSide : Winner::kBreakerSide;
    if (child_winner == report.winner && report.winner == mover_side) {
      report.optimal_move = m;
      break;
    }
  }
  if (!report.optimal_move.has_value()) report.optimal_move = fallback;

  report.states_visited = states_ - states_before;
  report.table_hits = hits_ - hits_before;
  return report;
}

SolveReport Solve(const Variant& variant, const Hypergraph& h) {
  Solver solver(variant, h);
  return solver.Solve();
}

StrategyOracle OptimalStrategy(const Variant& variant, const Hypergraph& h,
                               Role side) {
  const SolveReport opening = Solve(variant, h);
  if (opening.winner != SideOf(side)) {
    throw std::logic_error("requested side does not win this game");
  }
  auto solver = std::make_shared<Solver>(variant, h);
  return StrategyOracle{
      side, [solver, variant, h, side](const std::vector<Move>& transcript) {
        const GameState state = Replay(variant, h, transcript);
        if (state.IsTerminal() || state.Decider() != side) {
          throw std::logic_error("oracle queried out of turn");
        }
        const SolveReport report = solver->SolveState(state);
        return *report.optimal_move;
      }};
}

}  // namespace stot
