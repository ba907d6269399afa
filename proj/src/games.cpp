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

#include "stot/games.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "stot/error.hpp"

namespace stot {

Variant Variant::MakerBreaker(int maker_quota, int breaker_quota,
                              Role first_mover) {
  Variant v;
  v.kind = Kind::kMakerBreaker;
  v.maker_quota = maker_quota;
  v.breaker_quota = breaker_quota;
  v.first_mover = first_mover;
  return v;
}

Variant Variant::WaiterClient() {
  Variant v;
  v.kind = Kind::kWaiterClient;
  return v;
}

Variant Variant::StottingMakerBreaker() {
  Variant v;
  v.kind = Kind::kStottingMakerBreaker;
  return v;
}

Variant Variant::StottingWaiterClient() {
  Variant v;
  v.kind = Kind::kStottingWaiterClient;
  return v;
}

std::string RoleName(Role r) {
  switch (r) {
    case Role::kMaker: return "maker";
    case Role::kBreaker: return "breaker";
    case Role::kWaiter: return "waiter";
    case Role::kClient: return "client";
  }
  return "?";
}

std::string VariantName(const Variant& v) {
  switch (v.kind) {
    case Variant::Kind::kMakerBreaker: {
      std::ostringstream out;
      out << "maker-breaker " << v.maker_quota << ":" << v.breaker_quota
          << " " << RoleName(v.first_mover) << "-first";
      return out.str();
    }
    case Variant::Kind::kWaiterClient: return "waiter-client";
    case Variant::Kind::kStottingMakerBreaker:
      return "stotting maker-breaker";
    case Variant::Kind::kStottingWaiterClient:
      return "stotting waiter-client";
  }
  return "?";
}

std::string WinnerName(const Variant& variant, Winner w) {
  const bool wc = variant.kind == Variant::Kind::kWaiterClient ||
                  variant.kind == Variant::Kind::kStottingWaiterClient;
  if (w == Winner::kMakerSide) return wc ? "waiter" : "maker";
  return wc ? "client" : "breaker";
}

std::string ToString(const Move& m) {
  std::ostringstream out;
  switch (m.kind) {
    case Move::Kind::kClaim: out << "claim " << m.a; break;
    case Move::Kind::kAnnounceOrder:
      out << "order "
          << (m.order() == TurnOrder::kBreakerFirst ? "bm" : "mb");
      break;
    case Move::Kind::kOfferPair: out << "offer " << m.a << " " << m.b; break;
    case Move::Kind::kSuggest: out << "suggest " << m.a; break;
    case Move::Kind::kPickFromPair: out << "pick " << m.a; break;
  }
  return out.str();
}

std::optional<Move> ParseMove(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  if (!(in >> word)) return std::nullopt;
  if (word == "claim" || word == "suggest" || word == "pick") {
    int v;
    if (!(in >> v)) return std::nullopt;
    if (word == "claim") return Move::Claim(v);
    if (word == "suggest") return Move::Suggest(v);
    return Move::PickFromPair(v);
  }
  if (word == "order") {
    std::string o;
    if (!(in >> o)) return std::nullopt;
    if (o == "bm") return Move::AnnounceOrder(TurnOrder::kBreakerFirst);
    if (o == "mb") return Move::AnnounceOrder(TurnOrder::kMakerFirst);
    return std::nullopt;
  }
  if (word == "offer") {
    int x, y;
    if (!(in >> x >> y) || x == y) return std::nullopt;
    return Move::OfferPair(x, y);
  }
  return std::nullopt;
}

std::string TraceLine(const Settle& s) {
  return std::to_string(s.turn) + " " + RoleName(s.role) + ":" +
         std::to_string(s.vertex);
}

namespace {

Role SmbClaimant(const Phase& p) {
  const bool breaker_slot =
      (p.order == TurnOrder::kBreakerFirst) != p.second;
  return breaker_slot ? Role::kBreaker : Role::kMaker;
}

int QuotaOf(const Variant& v, Role r) {
  return r == Role::kMaker ? v.maker_quota : v.breaker_quota;
}

Role OtherMbRole(Role r) {
  return r == Role::kMaker ? Role::kBreaker : Role::kMaker;
}

}  // namespace

GameState GameState::NewGame(const Variant& variant, const Hypergraph& h) {
  if (variant.kind == Variant::Kind::kMakerBreaker) {
    if (variant.maker_quota < 1 || variant.breaker_quota < 1) {
      throw InputError("quotas must be at least 1");
    }
    if (variant.first_mover != Role::kMaker &&
        variant.first_mover != Role::kBreaker) {
      throw InputError("first mover must be maker or breaker");
    }
  }
  GameState s;
  s.original_ = std::make_shared<Hypergraph>(h);
  s.variant_ = variant;
  s.alive_ = VertexSet::Full(h.board_size);
  s.residual_ = h.sets;
  switch (variant.kind) {
    case Variant::Kind::kMakerBreaker:
      s.phase_ = Phase{Phase::Tag::kMbClaim, variant.first_mover,
                       QuotaOf(variant, variant.first_mover)};
      break;
    case Variant::Kind::kStottingMakerBreaker:
      s.phase_.tag = Phase::Tag::kSmbAnnounce;
      break;
    case Variant::Kind::kWaiterClient:
      s.phase_.tag = Phase::Tag::kWcOffer;
      break;
    case Variant::Kind::kStottingWaiterClient:
      s.phase_.tag = Phase::Tag::kSwcSuggest;
      break;
  }
  s.Normalize();
  return s;
}

void GameState::SettleClaim(Role role, int v) {
  alive_ = alive_.Minus(v);
  if (SideOf(role) == Winner::kMakerSide) {
    protagonist_ = protagonist_.Plus(v);
    for (VertexSet& f : residual_) f = f.Minus(v);  // contract
  } else {
    antagonist_ = antagonist_.Plus(v);
    std::erase_if(residual_,
                  [v](VertexSet f) { return f.Contains(v); });  // delete
  }
  settles_.push_back(Settle{turn_, role, v});
}

void GameState::Normalize() {
  if (winner_.has_value()) return;
  for (VertexSet f : residual_) {
    if (f.Empty()) {
      winner_ = Winner::kMakerSide;
      phase_.tag = Phase::Tag::kTerminal;
      return;
    }
  }
  if (residual_.empty()) {
    winner_ = Winner::kBreakerSide;
    phase_.tag = Phase::Tag::kTerminal;
    return;
  }
  if (alive_.Empty()) {
    winner_ = Winner::kBreakerSide;
    phase_.tag = Phase::Tag::kTerminal;
    return;
  }
  // A lone leftover element at an offer or suggest point goes to Client.
  if ((phase_.tag == Phase::Tag::kWcOffer ||
       phase_.tag == Phase::Tag::kSwcSuggest) &&
      alive_.Count() == 1) {
    SettleClaim(Role::kClient, alive_.Lowest());
    Normalize();
  }
}

std::optional<Winner> WinnerOf(const GameState& s) { return s.winner_; }

Role GameState::Decider() const {
  switch (phase_.tag) {
    case Phase::Tag::kMbClaim: return phase_.to_claim;
    case Phase::Tag::kSmbAnnounce: return Role::kBreaker;
    case Phase::Tag::kSmbClaim: return SmbClaimant(phase_);
    case Phase::Tag::kWcOffer: return Role::kWaiter;
    case Phase::Tag::kSwcSuggest: return Role::kClient;
    case Phase::Tag::kSwcAdd: return Role::kWaiter;
    case Phase::Tag::kPick: return Role::kClient;
    case Phase::Tag::kTerminal: break;
  }
  throw std::logic_error("Decider() on terminal state");
}

std::vector<Move> GameState::LegalMoves() const {
  if (IsTerminal()) {
    throw std::logic_error("LegalMoves() on terminal state");
  }
  std::vector<Move> moves;
  switch (phase_.tag) {
    case Phase::Tag::kMbClaim:
    case Phase::Tag::kSmbClaim:
      for (int v : alive_.Vertices()) moves.push_back(Move::Claim(v));
      break;
    case Phase::Tag::kSmbAnnounce:
      moves.push_back(Move::AnnounceOrder(TurnOrder::kBreakerFirst));
      moves.push_back(Move::AnnounceOrder(TurnOrder::kMakerFirst));
      break;
    case Phase::Tag::kWcOffer: {
      const std::vector<int> vs = alive_.Vertices();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          moves.push_back(Move::OfferPair(vs[i], vs[j]));
        }
      }
      break;
    }
    case Phase::Tag::kSwcSuggest:
      for (int v : alive_.Vertices()) moves.push_back(Move::Suggest(v));
      break;
    case Phase::Tag::kSwcAdd:
      for (int w : alive_.Vertices()) {
        if (w != phase_.x) moves.push_back(Move::OfferPair(phase_.x, w));
      }
      std::sort(moves.begin(), moves.end());
      break;
    case Phase::Tag::kPick:
      moves.push_back(Move::PickFromPair(phase_.x));
      moves.push_back(Move::PickFromPair(phase_.y));
      break;
    case Phase::Tag::kTerminal: break;
  }
  return moves;
}

GameState GameState::ApplyMove(const Move& m) const {
  if (IsTerminal()) throw std::logic_error("ApplyMove() on terminal state");
  GameState s = *this;
  switch (phase_.tag) {
    case Phase::Tag::kMbClaim: {
      if (m.kind != Move::Kind::kClaim || !alive_.Contains(m.a)) {
        throw std::logic_error("illegal move: " + ToString(m));
      }
      s.SettleClaim(phase_.to_claim, m.a);
      if (phase_.moves_left > 1) {
        s.phase_.moves_left = phase_.moves_left - 1;
      } else {
        const Role next = OtherMbRole(phase_.to_claim);
        s.phase_ = Phase{Phase::Tag::kMbClaim, next, QuotaOf(variant_, next)};
        if (next == variant_.first_mover) ++s.turn_;
      }
      break;
    }
    case Phase::Tag::kSmbAnnounce:
      if (m.kind != Move::Kind::kAnnounceOrder || (m.a != 0 && m.a != 1)) {
        throw std::logic_error("illegal move: " + ToString(m));
      }
      s.phase_ = Phase{};
      s.phase_.tag = Phase::Tag::kSmbClaim;
      s.phase_.order = m.order();
      s.phase_.second = false;
      break;
    case Phase::Tag::kSmbClaim: {
      if (m.kind != Move::Kind::kClaim || !alive_.Contains(m.a)) {
        throw std::logic_error("illegal move: " + ToString(m));
      }
      s.SettleClaim(SmbClaimant(phase_), m.a);
      if (!phase_.second) {
        s.phase_.second = true;
      } else {
        s.phase_ = Phase{};
        s.phase_.tag = Phase::Tag::kSmbAnnounce;
        ++s.turn_;
      }
      break;
    }
    case Phase::Tag::kWcOffer:
      if (m.kind != Move::Kind::kOfferPair || m.a == m.b ||
          !alive_.Contains(m.a) || !alive_.Contains(m.b)) {
        throw std::logic_error("illegal move: " + ToString(m));
      }
      s.phase_ = Phase{};
      s.phase_.tag = Phase::Tag::kPick;
      s.phase_.x = m.a;
      s.phase_.y = m.b;
      break;
    case Phase::Tag::kSwcSuggest:
      if (m.kind != Move::Kind::kSuggest || !alive_.Contains(m.a)) {
        throw std::logic_error("illegal move: " + ToString(m));
      }
      s.phase_ = Phase{};
      s.phase_.tag = Phase::Tag::kSwcAdd;
      s.phase_.x = m.a;
      break;
    case Phase::Tag::kSwcAdd: {
      if (m.kind != Move::Kind::kOfferPair ||
          (m.a != phase_.x && m.b != phase_.x) || m.a == m.b ||
          !alive_.Contains(m.a) || !alive_.Contains(m.b)) {
        throw std::logic_error("illegal move: " + ToString(m));
      }
      s.phase_ = Phase{};
      s.phase_.tag = Phase::Tag::kPick;
      s.phase_.x = m.a;
      s.phase_.y = m.b;
      break;
    }
    case Phase::Tag::kPick: {
      if (m.kind != Move::Kind::kPickFromPair ||
          (m.a != phase_.x && m.a != phase_.y)) {
        throw std::logic_error("illegal move: " + ToString(m));
      }
      const int client_v = m.a;
      const int waiter_v = m.a == phase_.x ? phase_.y : phase_.x;
      s.SettleClaim(Role::kClient, client_v);
      s.SettleClaim(Role::kWaiter, waiter_v);
      s.phase_ = Phase{};
      s.phase_.tag = variant_.kind == Variant::Kind::kWaiterClient
                         ? Phase::Tag::kWcOffer
                         : Phase::Tag::kSwcSuggest;
      ++s.turn_;
      break;
    }
    case Phase::Tag::kTerminal: break;
  }
  s.Normalize();
  return s;
}

GameState Replay(const Variant& variant, const Hypergraph& h,
                 std::span<const Move> transcript) {
  GameState s = GameState::NewGame(variant, h);
  for (const Move& m : transcript) s = s.ApplyMove(m);
  return s;
}

}  // namespace stot
