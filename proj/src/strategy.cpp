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

#include "stot/strategy.hpp"

#include <algorithm>
#include <utility>

namespace stot {

namespace {

std::string RenderTranscript(const std::vector<Move>& t) {
  std::string out;
  for (const Move& m : t) {
    if (!out.empty()) out += ", ";
    out += ToString(m);
  }
  return out;
}

// Replays a hypothetical transcript, asks src to move, and validates the
// answer against the live rules. Illegal answers become SourceStrategyFault.
Move QuerySource(const Variant& variant, const Hypergraph& h,
                 const StrategyOracle& src, const std::vector<Move>& t) {
  const GameState state = Replay(variant, h, t);
  if (state.IsTerminal() || state.Decider() != src.side) {
    throw std::logic_error("source oracle queried out of turn");
  }
  const Move m = src.next(t);
  try {
    state.ApplyMove(m);
  } catch (const std::logic_error&) {
    throw SourceStrategyFault("source strategy returned illegal move '" +
                              ToString(m) + "' after: " + RenderTranscript(t));
  }
  return m;
}

std::vector<Move> Extended(std::vector<Move> t, std::initializer_list<Move> ms) {
  for (const Move& m : ms) t.push_back(m);
  return t;
}

int PairOther(const Move& offer, int v) {
  return offer.a == v ? offer.b : offer.a;
}

}  // namespace

StrategyOracle WaiterFromStottingMaker(const Hypergraph& h,
                                       StrategyOracle src) {
  const Variant smb = Variant::StottingMakerBreaker();
  auto next = [h, smb, src = std::move(src)](const std::vector<Move>& wc_t) {
    // Rebuild the live stotting transcript from the completed rounds.
    std::vector<Move> live;
    const auto pair_for = [&](const std::vector<Move>& t) {
      const Move m1 = QuerySource(
          smb, h, src,
          Extended(t, {Move::AnnounceOrder(TurnOrder::kMakerFirst)}));
      const Move m2 = QuerySource(
          smb, h, src,
          Extended(t, {Move::AnnounceOrder(TurnOrder::kBreakerFirst),
                       Move::Claim(m1.a)}));
      return std::pair<int, int>{m1.a, m2.a};
    };
    for (std::size_t i = 0; i + 1 < wc_t.size(); i += 2) {
      const auto [v1, v2] = pair_for(live);
      const int picked = wc_t[i + 1].a;
      if (picked == v1) {
        // Client kept v1, so the live line is: Breaker opened with v1 and
        // Maker (= Waiter) replied v2.
        live = Extended(std::move(live),
                        {Move::AnnounceOrder(TurnOrder::kBreakerFirst),
                         Move::Claim(v1), Move::Claim(v2)});
      } else if (picked == v2) {
        live = Extended(std::move(live),
                        {Move::AnnounceOrder(TurnOrder::kMakerFirst),
                         Move::Claim(v1), Move::Claim(v2)});
      } else {
        throw std::logic_error("transcript inconsistent with adapter offers");
      }
    }
    const auto [v1, v2] = pair_for(live);
    return Move::OfferPair(v1, v2);
  };
  return StrategyOracle{Role::kWaiter, std::move(next)};
}

namespace {

// Incremental form of the (1:2) simulation.
struct BiasedFold {
  explicit BiasedFold(const Hypergraph& h) : board(VertexSet::Full(h.board_size)) {}

  VertexSet board;
  BiasedSimulationLedger ledger;

  VertexSet SimUnclaimed() const {
    return board - ledger.sim_maker - ledger.sim_breaker;
  }
  void FeedBreaker(int real_v) {
    // A real Breaker move that already exists in the simulation was a dummy
    // fill; spend a fresh dummy instead.
    if (ledger.sim_breaker.Contains(real_v)) {
      FeedDummy();
      return;
    }
    ledger.sim_transcript.push_back(Move::Claim(real_v));
    ledger.sim_breaker = ledger.sim_breaker.Plus(real_v);
  }
  void FeedDummy() {
    const VertexSet open = SimUnclaimed();
    if (open.Empty()) return;  // simulation already complete
    const int d = open.Lowest();
    ledger.sim_transcript.push_back(Move::Claim(d));
    ledger.sim_breaker = ledger.sim_breaker.Plus(d);
    ledger.dummy_fills.push_back(d);
  }
  void FeedMaker(int v) {
    ledger.sim_transcript.push_back(Move::Claim(v));
    ledger.sim_maker = ledger.sim_maker.Plus(v);
  }
};

// Walks a stotting transcript. When `query` is set the transcript must end
// at Maker's pending claim, and the fold stops with the simulation ready for
// the src query; otherwise all turns must be complete.
BiasedFold FoldBiased(const Hypergraph& h, std::span<const Move> smb_t,
                      bool query) {
  BiasedFold fold(h);
  fold.FeedDummy();  // Breaker's very first (1:2) move is skipped
  std::size_t i = 0;
  while (i < smb_t.size()) {
    const Move announce = smb_t[i++];
    if (announce.kind != Move::Kind::kAnnounceOrder) {
      throw std::logic_error("expected order announcement in transcript");
    }
    if (announce.order() == TurnOrder::kBreakerFirst) {
      if (i >= smb_t.size()) break;  // turn truncated at Breaker's claim
      const int b = smb_t[i++].a;
      fold.ledger.real_breaker = fold.ledger.real_breaker.Plus(b);
      fold.FeedBreaker(b);
      if (i >= smb_t.size()) {
        if (!query) break;  // game ended on Breaker's claim
        return fold;        // Maker to claim: simulation is ready for src
      }
      const int m = smb_t[i++].a;
      fold.ledger.real_maker = fold.ledger.real_maker.Plus(m);
      fold.FeedMaker(m);
      fold.FeedDummy();  // trailing skipped slot
    } else {
      fold.FeedDummy();  // leading skipped slot
      if (i >= smb_t.size()) {
        if (!query) break;
        return fold;
      }
      const int m = smb_t[i++].a;
      fold.ledger.real_maker = fold.ledger.real_maker.Plus(m);
      fold.FeedMaker(m);
      if (i >= smb_t.size()) break;  // Breaker's second claim still pending
      const int b = smb_t[i++].a;
      fold.ledger.real_breaker = fold.ledger.real_breaker.Plus(b);
      fold.FeedBreaker(b);
    }
  }
  if (query) throw std::logic_error("transcript does not end at Maker's claim");
  return fold;
}

}  // namespace

BiasedSimulationLedger BuildBiasedLedger(const Hypergraph& h,
                                         const StrategyOracle& /*src*/,
                                         std::span<const Move> smb_transcript) {
  return FoldBiased(h, smb_transcript, /*query=*/false).ledger;
}

StrategyOracle StottingMakerFromBiased(const Hypergraph& h,
                                       StrategyOracle src) {
  const Variant biased = Variant::MakerBreaker(1, 2, Role::kBreaker);
  auto next = [h, biased,
               src = std::move(src)](const std::vector<Move>& smb_t) {
    BiasedFold fold = FoldBiased(h, smb_t, /*query=*/true);
    const Move m = QuerySource(biased, h, src, fold.ledger.sim_transcript);
    return Move::Claim(m.a);
  };
  return StrategyOracle{Role::kMaker, std::move(next)};
}

StrategyOracle MakerFromStottingWaiter(const Hypergraph& h,
                                       StrategyOracle src,
                                       Role first_mover) {
  const Variant swc = Variant::StottingWaiterClient();
  if (first_mover == Role::kBreaker) {
    auto next = [h, swc,
                 src = std::move(src)](const std::vector<Move>& mb_t) {
      // mb_t alternates Breaker/Maker claims and ends with Breaker's.
      std::vector<Move> live;
      for (std::size_t i = 0; i + 1 < mb_t.size(); i += 2) {
        const int v = mb_t[i].a;
        const int w = mb_t[i + 1].a;
        live = Extended(std::move(live),
                        {Move::Suggest(v), Move::OfferPair(v, w),
                         Move::PickFromPair(v)});
      }
      const int v = mb_t.back().a;
      const Move offer =
          QuerySource(swc, h, src, Extended(live, {Move::Suggest(v)}));
      return Move::Claim(PairOther(offer, v));
    };
    return StrategyOracle{Role::kMaker, std::move(next)};
  }

  // Maker first: Maker's moves sit at even indices, each Breaker claim at
  // an odd index. Openings with no fresh Breaker claim (the first move, or
  // a Breaker claim that hit a virtual vertex the simulation had already
  // assigned to Client) are answered by self-suggesting the least
  // simulated-unclaimed vertex.
  auto next = [h, swc, src = std::move(src)](const std::vector<Move>& mb_t) {
    std::vector<Move> live;
    VertexSet sim_claimed;
    const auto respond_to = [&](int suggested) {
      const Move offer =
          QuerySource(swc, h, src, Extended(live, {Move::Suggest(suggested)}));
      const int w = PairOther(offer, suggested);
      live = Extended(std::move(live), {Move::Suggest(suggested), offer,
                                        Move::PickFromPair(suggested)});
      sim_claimed = sim_claimed.Plus(suggested).Plus(w);
      return w;
    };
    VertexSet real_claimed;
    int pending = 0;  // Breaker claim awaiting a simulated round, if any
    for (std::size_t i = 0; i < mb_t.size(); ++i) {
      const int x = mb_t[i].a;
      real_claimed = real_claimed.Plus(x);
      if (i % 2 == 1) {  // Breaker's claim
        pending = sim_claimed.Contains(x) ? 0 : x;
        continue;
      }
      // Maker's recorded claim: replay the simulated round that produced
      // it to keep the live transcript aligned.
      const int suggested =
          pending != 0 ? pending : (VertexSet::Full(h.board_size) - sim_claimed)
                                       .Lowest();
      if (sim_claimed.Contains(x)) continue;  // forced virtual takeover
      respond_to(suggested);
      pending = 0;
    }
    // Produce the next Maker move.
    const VertexSet unclaimed = VertexSet::Full(h.board_size) - real_claimed;
    if (unclaimed.Count() == 1 && sim_claimed.Contains(unclaimed.Lowest())) {
      return Move::Claim(unclaimed.Lowest());  // forced virtual takeover
    }
    const int suggested =
        pending != 0
            ? pending
            : (VertexSet::Full(h.board_size) - sim_claimed).Lowest();
    return Move::Claim(respond_to(suggested));
  };
  return StrategyOracle{Role::kMaker, std::move(next)};
}

StrategyOracle MakerFromStottingMaker(const Hypergraph& h,
                                      StrategyOracle src) {
  const Variant smb = Variant::StottingMakerBreaker();
  auto next = [h, smb, src = std::move(src)](const std::vector<Move>& mb_t) {
    std::vector<Move> live;
    for (std::size_t i = 0; i + 1 < mb_t.size(); i += 2) {
      live = Extended(std::move(live),
                      {Move::AnnounceOrder(TurnOrder::kBreakerFirst),
                       Move::Claim(mb_t[i].a), Move::Claim(mb_t[i + 1].a)});
    }
    live = Extended(std::move(live),
                    {Move::AnnounceOrder(TurnOrder::kBreakerFirst),
                     Move::Claim(mb_t.back().a)});
    return QuerySource(smb, h, src, live);
  };
  return StrategyOracle{Role::kMaker, std::move(next)};
}

StrategyOracle WaiterFromStottingWaiter(const Hypergraph& h,
                                        StrategyOracle src) {
  const Variant swc = Variant::StottingWaiterClient();
  auto next = [h, swc, src = std::move(src)](const std::vector<Move>& wc_t) {
    std::vector<Move> live;
    VertexSet claimed;
    const auto self_suggested_offer = [&]() {
      const int v = (VertexSet::Full(h.board_size) - claimed).Lowest();
      const Move offer =
          QuerySource(swc, h, src, Extended(live, {Move::Suggest(v)}));
      return std::pair<int, Move>{v, offer};
    };
    for (std::size_t i = 0; i + 1 < wc_t.size(); i += 2) {
      const auto [v, offer] = self_suggested_offer();
      const int picked = wc_t[i + 1].a;
      live = Extended(std::move(live),
                      {Move::Suggest(v), offer, Move::PickFromPair(picked)});
      claimed = claimed.Plus(offer.a).Plus(offer.b);
    }
    return self_suggested_offer().second;
  };
  return StrategyOracle{Role::kWaiter, std::move(next)};
}

}  // namespace stot
