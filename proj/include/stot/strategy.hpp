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

#ifndef STOT_STRATEGY_H_
#define STOT_STRATEGY_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stot/games.hpp"

namespace stot {

// Raised when a source strategy hands an adapter an illegal move (for
// example a vertex that is already claimed in the simulated game).
class SourceStrategyFault : public std::runtime_error {
 public:
  explicit SourceStrategyFault(const std::string& what)
      : std::runtime_error(what) {}
};

// Strategy transformations. Every adapter consumes a winning source oracle
// and produces an oracle for a different game on the same board; all of
// them rebuild their bookkeeping from the adapted game's transcript on each
// query, so the results are pure transcript functions.

// Waiter (classical Waiter-Client) from a stotting Maker-Breaker Maker.
// Each round asks src for its move v1 when Maker may move first, and for
// its reply v2 when Breaker opens with v1; offers {v1, v2}. Client's pick
// decides which of the two counterfactual lines becomes the live one.
StrategyOracle WaiterFromStottingMaker(const Hypergraph& h,
                                       StrategyOracle src);

// Stotting Maker from a Maker winning the (1:2) Breaker-first game. Runs a
// simulated (1:2) game in which real Breaker moves fill the slot the turn
// regrouping dictates and every skipped slot is filled with a dummy claim
// (least unclaimed vertex in the simulation).
StrategyOracle StottingMakerFromBiased(const Hypergraph& h,
                                       StrategyOracle src);

// Maker (Maker-Breaker at 1:1) from a stotting Waiter-Client Waiter: when
// Breaker claims v, play the element src would add after the suggestion v,
// and record that Client kept v. With first_mover = Maker, openings where
// no Breaker move is pending are answered via a self-suggested query on
// the least simulated-unclaimed vertex; that vertex stays virtual (claimed
// by Client only in the simulation) until the real Breaker takes it.
StrategyOracle MakerFromStottingWaiter(const Hypergraph& h,
                                       StrategyOracle src,
                                       Role first_mover = Role::kBreaker);

// Maker from a stotting Maker: fixes Breaker's announcement to
// Breaker-first every turn, embedding the classical game.
StrategyOracle MakerFromStottingMaker(const Hypergraph& h,
                                      StrategyOracle src);

// Waiter from a stotting Waiter: the Waiter self-suggests the least
// unclaimed vertex and offers it with src's added element.
StrategyOracle WaiterFromStottingWaiter(const Hypergraph& h,
                                        StrategyOracle src);

// Bookkeeping of the (1:2) simulation behind StottingMakerFromBiased,
// rebuilt from a stotting-game transcript. Exposed so tests can assert the
// ledger invariants after every exchange.
struct BiasedSimulationLedger {
  std::vector<Move> sim_transcript;  // valid (1:2) Breaker-first prefix
  VertexSet sim_maker;
  VertexSet sim_breaker;
  VertexSet real_maker;
  VertexSet real_breaker;
  std::vector<int> dummy_fills;
};
BiasedSimulationLedger BuildBiasedLedger(const Hypergraph& h,
                                         const StrategyOracle& src,
                                         std::span<const Move> smb_transcript);

}  // namespace stot

#endif  // STOT_STRATEGY_H_
