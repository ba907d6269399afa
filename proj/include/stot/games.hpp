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

#ifndef STOT_GAMES_H_
#define STOT_GAMES_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stot/hypergraph.hpp"

namespace stot {

// Maker and Waiter build a winning set (the "maker side"); Breaker and
// Client try to stop them. No game ends in a draw.
enum class Role : std::uint8_t { kMaker, kBreaker, kWaiter, kClient };
enum class Winner : std::uint8_t { kMakerSide, kBreakerSide };

inline Winner SideOf(Role r) {
  return (r == Role::kMaker || r == Role::kWaiter) ? Winner::kMakerSide
                                                   : Winner::kBreakerSide;
}

std::string RoleName(Role r);
std::string WinnerName(const struct Variant& variant, Winner w);

// Who moves first within a stotting Maker-Breaker turn.
enum class TurnOrder : std::uint8_t { kBreakerFirst, kMakerFirst };

// The four game protocols.
//
//   MakerBreaker         alternating claims; the first mover claims their
//                        full quota, then the other side does (Breaker
//                        first by default, quotas 1:1).
//   WaiterClient         Waiter offers two unclaimed elements, Client keeps
//                        one and Waiter gets the other; a lone leftover
//                        element goes to Client.
//   StottingMakerBreaker Maker-Breaker at 1:1 where Breaker announces, each
//                        turn, who moves first.
//   StottingWaiterClient Waiter-Client where Client names the first element
//                        of each offered pair and Waiter adds the second.
struct Variant {
  enum class Kind : std::uint8_t {
    kMakerBreaker,
    kWaiterClient,
    kStottingMakerBreaker,
    kStottingWaiterClient,
  };
  Kind kind = Kind::kMakerBreaker;
  int maker_quota = 1;                   // Maker-Breaker only
  int breaker_quota = 1;                 // Maker-Breaker only
  Role first_mover = Role::kBreaker;     // Maker-Breaker only

  static Variant MakerBreaker(int maker_quota = 1, int breaker_quota = 1,
                              Role first_mover = Role::kBreaker);
  static Variant WaiterClient();
  static Variant StottingMakerBreaker();
  static Variant StottingWaiterClient();

  bool operator==(const Variant&) const = default;
};

std::string VariantName(const Variant& v);

struct Move {
  enum class Kind : std::uint8_t {
    kClaim,         // a = vertex
    kAnnounceOrder, // a = TurnOrder as int
    kOfferPair,     // a < b, the offered pair
    kSuggest,       // a = vertex Client names first
    kPickFromPair,  // a = the element Client keeps
  };
  Kind kind = Kind::kClaim;
  int a = 0;
  int b = 0;

  static Move Claim(int v) { return {Kind::kClaim, v, 0}; }
  static Move AnnounceOrder(TurnOrder o) {
    return {Kind::kAnnounceOrder, static_cast<int>(o), 0};
  }
  static Move OfferPair(int x, int y) {
    return {Kind::kOfferPair, x < y ? x : y, x < y ? y : x};
  }
  static Move Suggest(int v) { return {Kind::kSuggest, v, 0}; }
  static Move PickFromPair(int v) { return {Kind::kPickFromPair, v, 0}; }

  TurnOrder order() const { return static_cast<TurnOrder>(a); }

  bool operator==(const Move&) const = default;
  // Lexicographic tie-break order used for optimal-move extraction and
  // deterministic traversals.
  friend bool operator<(const Move& l, const Move& r) {
    if (l.kind != r.kind) return l.kind < r.kind;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  }
};

std::string ToString(const Move& m);
std::optional<Move> ParseMove(const std::string& text);

// Whose decision is pending, with the intra-turn bookkeeping each protocol
// needs. Vertex fields are only meaningful for the tags that name them.
struct Phase {
  enum class Tag : std::uint8_t {
    kMbClaim,      // to_claim has moves_left claims remaining this turn
    kSmbAnnounce,  // Breaker announces the turn order
    kSmbClaim,     // claim within a stotting turn (order, second)
    kWcOffer,      // Waiter picks an unordered pair
    kSwcSuggest,   // Client names the first element
    kSwcAdd,       // Waiter completes the pair started by x
    kPick,         // Client keeps x or y, the other goes to Waiter
    kTerminal,
  };
  Tag tag = Tag::kTerminal;
  Role to_claim = Role::kMaker;  // kMbClaim
  int moves_left = 0;            // kMbClaim
  TurnOrder order = TurnOrder::kBreakerFirst;  // kSmbClaim
  bool second = false;                         // kSmbClaim
  int x = 0;  // kSwcAdd: suggested vertex; kPick: smaller of the pair
  int y = 0;  // kPick: larger of the pair

  bool operator==(const Phase&) const = default;
};

// One settled element, in original board labels; the unit of trace output.
struct Settle {
  int turn = 0;
  Role role = Role::kMaker;
  int vertex = 0;

  bool operator==(const Settle&) const = default;
};

std::string TraceLine(const Settle& s);

// Immutable game position. ApplyMove returns a fresh value; states of
// disjoint subtrees can be explored concurrently without synchronization.
class GameState {
 public:
  static GameState NewGame(const Variant& variant, const Hypergraph& h);

  const Hypergraph& original() const { return *original_; }
  const Variant& variant() const { return variant_; }
  const Phase& phase() const { return phase_; }
  VertexSet protagonist_claimed() const { return protagonist_; }
  VertexSet antagonist_claimed() const { return antagonist_; }
  VertexSet unclaimed() const { return alive_; }
  const std::vector<VertexSet>& residual_sets() const { return residual_; }
  int turn() const { return turn_; }
  const std::vector<Settle>& settles() const { return settles_; }

  bool IsTerminal() const { return phase_.tag == Phase::Tag::kTerminal; }
  // The role whose decision is pending. Precondition: not terminal.
  Role Decider() const;

  // Exactly the protocol-legal moves, in deterministic (lex) order.
  // Precondition: not terminal (throws std::logic_error otherwise).
  std::vector<Move> LegalMoves() const;
  GameState ApplyMove(const Move& m) const;

 private:
  GameState() = default;
  void SettleClaim(Role role, int v);
  void Normalize();

  std::shared_ptr<const Hypergraph> original_;
  Variant variant_;
  VertexSet protagonist_, antagonist_, alive_;
  std::vector<VertexSet> residual_;
  Phase phase_;
  int turn_ = 1;
  std::optional<Winner> winner_;
  std::vector<Settle> settles_;

  friend std::optional<Winner> WinnerOf(const GameState& s);
};

// Maker-side, Breaker-side, or nullopt while undecided. Terminal detection
// is eager: a residual empty set or an empty residual family ends the game
// immediately.
std::optional<Winner> WinnerOf(const GameState& s);

// Replays a transcript from the initial position, validating every move.
GameState Replay(const Variant& variant, const Hypergraph& h,
                 std::span<const Move> transcript);

// A pure transcript-to-move function for one side of one game. Equal
// transcripts must yield equal moves, and the move must be legal in the
// transcript's state. Oracles may be queried on hypothetical transcripts
// that never occur in the live game.
struct StrategyOracle {
  Role side = Role::kMaker;
  std::function<Move(const std::vector<Move>&)> next;
};

}  // namespace stot

#endif  // STOT_GAMES_H_
