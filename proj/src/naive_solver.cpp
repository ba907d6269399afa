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

// Reference solver used to cross-check the memoized engine. Everything here
// is deliberately separate from the residual/reduction machinery: state is
// the pair of claimed sets, the win test is direct subset containment, and
// the recursion is unmemoized.

#include <algorithm>
#include <optional>

#include "stot/error.hpp"
#include "stot/solver.hpp"

namespace stot {

namespace {

struct Claimed {
  VertexSet maker;    // Maker's or Waiter's elements
  VertexSet breaker;  // Breaker's or Client's elements
};

bool MakerOwnsWinningSet(const Hypergraph& h, const Claimed& c) {
  for (VertexSet f : h.sets) {
    if (f.SubsetOf(c.maker)) return true;
  }
  return false;
}

bool AllSetsBlocked(const Hypergraph& h, const Claimed& c) {
  for (VertexSet f : h.sets) {
    if (!f.Intersects(c.breaker)) return false;
  }
  return true;
}

// Forward declarations, one entry point per protocol shape.
bool MbWins(const Hypergraph& h, const Variant& var, Claimed c, bool maker_turn,
            int moves_left);
bool SmbWins(const Hypergraph& h, Claimed c);
bool WcOfferWins(const Hypergraph& h, Claimed c);
bool SwcSuggestWins(const Hypergraph& h, Claimed c);

// Terminal tests shared by all protocols: win by containment first, then
// blocked family, then exhausted board. Returns no value when play goes on.
std::optional<bool> Settled(const Hypergraph& h, const Claimed& c) {
  if (MakerOwnsWinningSet(h, c)) return true;
  if (AllSetsBlocked(h, c)) return false;
  if ((VertexSet::Full(h.board_size) - c.maker - c.breaker).Empty()) {
    return false;
  }
  return std::nullopt;
}

bool MbWins(const Hypergraph& h, const Variant& var, Claimed c,
            bool maker_turn, int moves_left) {
  if (auto done = Settled(h, c); done.has_value()) return *done;
  const VertexSet alive = VertexSet::Full(h.board_size) - c.maker - c.breaker;
  for (int v : alive.Vertices()) {
    Claimed next = c;
    if (maker_turn) {
      next.maker = next.maker.Plus(v);
    } else {
      next.breaker = next.breaker.Plus(v);
    }
    bool child;
    if (moves_left > 1) {
      child = MbWins(h, var, next, maker_turn, moves_left - 1);
    } else {
      child = MbWins(h, var, next, !maker_turn,
                     !maker_turn ? var.maker_quota : var.breaker_quota);
    }
    if (child == maker_turn) return child;
  }
  return !maker_turn;
}

// Second claim of a stotting turn; exhaustion is caught by Settled, which
// is exactly the "a claim with no vertex left is skipped" rule.
bool SmbSecondWins(const Hypergraph& h, const Claimed& c, bool breaker_claims) {
  if (auto done = Settled(h, c); done.has_value()) return *done;
  const VertexSet alive = VertexSet::Full(h.board_size) - c.maker - c.breaker;
  for (int w : alive.Vertices()) {
    Claimed next = c;
    if (breaker_claims) {
      next.breaker = next.breaker.Plus(w);
      if (!SmbWins(h, next)) return false;
    } else {
      next.maker = next.maker.Plus(w);
      if (SmbWins(h, next)) return true;
    }
  }
  return breaker_claims;
}

bool SmbTurnWins(const Hypergraph& h, const Claimed& c, bool breaker_first) {
  const VertexSet alive = VertexSet::Full(h.board_size) - c.maker - c.breaker;
  for (int v : alive.Vertices()) {
    Claimed mid = c;
    if (breaker_first) {
      mid.breaker = mid.breaker.Plus(v);
      if (!SmbSecondWins(h, mid, /*breaker_claims=*/false)) return false;
    } else {
      mid.maker = mid.maker.Plus(v);
      if (SmbSecondWins(h, mid, /*breaker_claims=*/true)) return true;
    }
  }
  return breaker_first;
}

bool SmbWins(const Hypergraph& h, Claimed c) {
  if (auto done = Settled(h, c); done.has_value()) return *done;
  // Breaker announces the order, so Maker must win both.
  return SmbTurnWins(h, c, /*breaker_first=*/true) &&
         SmbTurnWins(h, c, /*breaker_first=*/false);
}

bool WcResolvePair(const Hypergraph& h, const Claimed& c, int x, int y,
                   bool stotting) {
  // Client keeps either element; Waiter gets the other.
  for (int keep : {x, y}) {
    Claimed next = c;
    next.breaker = next.breaker.Plus(keep);
    next.maker = next.maker.Plus(keep == x ? y : x);
    const bool child = stotting ? SwcSuggestWins(h, next)
                                : WcOfferWins(h, next);
    if (!child) return false;
  }
  return true;
}

bool WcOfferWins(const Hypergraph& h, Claimed c) {
  if (auto done = Settled(h, c); done.has_value()) return *done;
  VertexSet alive = VertexSet::Full(h.board_size) - c.maker - c.breaker;
  if (alive.Count() == 1) {  // lone leftover goes to Client
    c.breaker = c.breaker.Plus(alive.Lowest());
    if (auto done = Settled(h, c); done.has_value()) return *done;
    return false;
  }
  const std::vector<int> vs = alive.Vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (WcResolvePair(h, c, vs[i], vs[j], /*stotting=*/false)) return true;
    }
  }
  return false;
}

bool SwcSuggestWins(const Hypergraph& h, Claimed c) {
  if (auto done = Settled(h, c); done.has_value()) return *done;
  VertexSet alive = VertexSet::Full(h.board_size) - c.maker - c.breaker;
  if (alive.Count() == 1) {
    c.breaker = c.breaker.Plus(alive.Lowest());
    if (auto done = Settled(h, c); done.has_value()) return *done;
    return false;
  }
  for (int v : alive.Vertices()) {
    bool waiter_has_reply = false;
    for (int w : alive.Vertices()) {
      if (w == v) continue;
      if (WcResolvePair(h, c, std::min(v, w), std::max(v, w),
                        /*stotting=*/true)) {
        waiter_has_reply = true;
        break;
      }
    }
    if (!waiter_has_reply) return false;
  }
  return true;
}

}  // namespace

Winner NaiveSolve(const Variant& variant, const Hypergraph& h) {
  if (h.board_size > 10) {
    throw InputError("naive solver is capped at 10 vertices");
  }
  bool maker_wins = false;
  switch (variant.kind) {
    case Variant::Kind::kMakerBreaker:
      maker_wins = MbWins(
          h, variant, Claimed{}, variant.first_mover == Role::kMaker,
          variant.first_mover == Role::kMaker ? variant.maker_quota
                                              : variant.breaker_quota);
      break;
    case Variant::Kind::kStottingMakerBreaker:
      maker_wins = SmbWins(h, Claimed{});
      break;
    case Variant::Kind::kWaiterClient:
      maker_wins = WcOfferWins(h, Claimed{});
      break;
    case Variant::Kind::kStottingWaiterClient:
      maker_wins = SwcSuggestWins(h, Claimed{});
      break;
  }
  return maker_wins ? Winner::kMakerSide : Winner::kBreakerSide;
}

}  // namespace stot
