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

#include "stot/verify.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "stot/error.hpp"
#include "stot/solver.hpp"
#include "stot/strategy.hpp"

namespace stot {

Variant ToVariant(VariantTag tag) {
  switch (tag) {
    case VariantTag::kMb: return Variant::MakerBreaker(1, 1, Role::kBreaker);
    case VariantTag::kMb12: return Variant::MakerBreaker(1, 2, Role::kBreaker);
    case VariantTag::kWc: return Variant::WaiterClient();
    case VariantTag::kSmb: return Variant::StottingMakerBreaker();
    case VariantTag::kSwc: return Variant::StottingWaiterClient();
  }
  throw InputError("unknown variant tag");
}

std::string TagName(VariantTag tag) {
  switch (tag) {
    case VariantTag::kMb: return "mb";
    case VariantTag::kMb12: return "mb12";
    case VariantTag::kWc: return "wc";
    case VariantTag::kSmb: return "smb";
    case VariantTag::kSwc: return "swc";
  }
  return "?";
}

std::optional<VariantTag> ParseTag(const std::string& name) {
  for (int i = 0; i < kNumVariantTags; ++i) {
    const VariantTag tag = static_cast<VariantTag>(i);
    if (TagName(tag) == name) return tag;
  }
  return std::nullopt;
}

const std::array<ImplicationRule, 5>& ImplicationRules() {
  static const std::array<ImplicationRule, 5> rules = {{
      {VariantTag::kSmb, VariantTag::kWc, "smb->wc"},
      {VariantTag::kMb12, VariantTag::kSmb, "mb12->smb"},
      {VariantTag::kSwc, VariantTag::kMb, "swc->mb"},
      {VariantTag::kSmb, VariantTag::kMb, "smb->mb"},
      {VariantTag::kSwc, VariantTag::kWc, "swc->wc"},
  }};
  return rules;
}

namespace {

bool IsAntichain(const std::vector<VertexSet>& family) {
  for (VertexSet f : family) {
    for (VertexSet g : family) {
      if (f != g && g.SubsetOf(f)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Hypergraph> Enumerate(const EnumClass& c) {
  if (c.max_vertices < 1 || c.max_sets < 1 || c.max_set_size < 1) {
    throw InputError("enumeration bounds must be at least 1");
  }
  if (c.max_vertices > 16) {
    throw InputError("enumeration is capped at 16 vertices");
  }

  // Candidate sets in LexLess order; the empty set first when included.
  std::vector<VertexSet> candidates;
  if (c.include_empty_set) candidates.push_back(VertexSet{});
  const std::uint64_t limit = std::uint64_t{1} << c.max_vertices;
  std::vector<VertexSet> nonempty;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    VertexSet s = VertexSet::FromBits(mask);
    if (s.Count() <= c.max_set_size) nonempty.push_back(s);
  }
  std::sort(nonempty.begin(), nonempty.end(),
            [](VertexSet a, VertexSet b) { return LexLess(a, b); });
  candidates.insert(candidates.end(), nonempty.begin(), nonempty.end());

  std::vector<Hypergraph> out;
  std::unordered_set<std::string> seen;
  std::vector<VertexSet> family;

  const auto emit = [&] {
    if (family.empty() && !c.include_empty_family) return;
    if (c.minimal_only && !IsAntichain(family)) return;
    const Hypergraph reduced = Reduce(MakeHypergraph(c.max_vertices, family));
    if (seen.insert(CanonicalKey(reduced)).second) out.push_back(reduced);
  };

  // All subsets of the candidate list with at most max_sets members, in
  // increasing-index order: deterministic across runs.
  const auto recurse = [&](auto&& self, std::size_t start) -> void {
    emit();
    if (static_cast<int>(family.size()) == c.max_sets) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      family.push_back(candidates[i]);
      self(self, i + 1);
      family.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

namespace {

InstanceOutcomes SolveAllVariants(const Hypergraph& h) {
  InstanceOutcomes out;
  out.h = h;
  out.key = CanonicalKey(h);
  for (int i = 0; i < kNumVariantTags; ++i) {
    const SolveReport report = Solve(ToVariant(static_cast<VariantTag>(i)), h);
    out.protagonist_wins[i] = report.winner == Winner::kMakerSide;
    out.states_visited += report.states_visited;
  }
  return out;
}

// Serial reference; kept as the jobs<=1 path and exercised against the
// parallel one in tests and the bench tool.
void SolveInstancesSerial(const std::vector<Hypergraph>& instances,
                          std::vector<InstanceOutcomes>& outcomes) {
  for (std::size_t i = 0; i < instances.size(); ++i) {
    outcomes[i] = SolveAllVariants(instances[i]);
  }
}

void SolveInstancesParallel(const std::vector<Hypergraph>& instances,
                            std::vector<InstanceOutcomes>& outcomes,
                            int jobs) {
#ifdef _OPENMP
  const auto n = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t i = 0; i < n; ++i) {
    outcomes[i] = SolveAllVariants(instances[i]);
  }
#else
  (void)jobs;
  SolveInstancesSerial(instances, outcomes);
#endif
}

std::vector<InstanceOutcomes> SolveClass(const EnumClass& c, int jobs) {
  const std::vector<Hypergraph> instances = Enumerate(c);
  std::vector<InstanceOutcomes> outcomes(instances.size());
  if (jobs <= 1) {
    SolveInstancesSerial(instances, outcomes);
  } else {
    SolveInstancesParallel(instances, outcomes, jobs);
  }
  // Deterministic merge regardless of worker count.
  std::sort(outcomes.begin(), outcomes.end(),
            [](const InstanceOutcomes& a, const InstanceOutcomes& b) {
              return a.key < b.key;
            });
  return outcomes;
}

}  // namespace

ImplicationReport CheckImplications(const EnumClass& c, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  ImplicationReport report;
  report.jobs = jobs;
  report.outcomes = SolveClass(c, jobs);
  for (const InstanceOutcomes& o : report.outcomes) {
    report.states_total += o.states_visited;
    for (int i = 0; i < kNumVariantTags; ++i) {
      if (o.protagonist_wins[i]) ++report.win_counts[i];
    }
    for (const ImplicationRule& rule : ImplicationRules()) {
      if (o.protagonist_wins[static_cast<int>(rule.premise)] &&
          !o.protagonist_wins[static_cast<int>(rule.conclusion)]) {
        report.violations.push_back(
            ImplicationViolation{rule.name, o.key, o.h});
      }
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

namespace {

std::string InlineHg(const Hypergraph& h) {
  std::string text = SerializeHypergraph(h);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

}  // namespace

std::string FormatReport(const ImplicationReport& r) {
  std::string out;
  for (const InstanceOutcomes& o : r.outcomes) {
    out += "RESULT " + ToHex(o.key);
    for (int i = 0; i < kNumVariantTags; ++i) {
      const VariantTag tag = static_cast<VariantTag>(i);
      out += " " + TagName(tag) + "=" +
             WinnerName(ToVariant(tag), o.protagonist_wins[i]
                                            ? Winner::kMakerSide
                                            : Winner::kBreakerSide);
    }
    out += "\n";
  }
  for (const ImplicationViolation& v : r.violations) {
    out += "VIOLATION " + v.name + " " + ToHex(v.key) + " hg=\"" +
           InlineHg(v.h) + "\"\n";
  }
  out += "SUMMARY instances=" + std::to_string(r.outcomes.size());
  for (int i = 0; i < kNumVariantTags; ++i) {
    out += " " + TagName(static_cast<VariantTag>(i)) +
           "_wins=" + std::to_string(r.win_counts[i]);
  }
  out += " violations=" + std::to_string(r.violations.size()) + "\n";
  return out;
}

std::vector<SeparationWitness> SearchSeparation(const EnumClass& c,
                                                VariantTag premise,
                                                VariantTag conclusion,
                                                int jobs) {
  std::vector<SeparationWitness> out;
  for (const InstanceOutcomes& o : SolveClass(c, jobs)) {
    if (o.protagonist_wins[static_cast<int>(premise)] &&
        !o.protagonist_wins[static_cast<int>(conclusion)]) {
      out.push_back(SeparationWitness{o.key, o.h});
    }
  }
  return out;
}

namespace {

bool TraverseAdversary(const GameState& state, const StrategyOracle& oracle,
                       Role side, std::vector<Move>& line,
                       std::vector<Move>& failing) {
  if (state.IsTerminal()) {
    if (*WinnerOf(state) == SideOf(side)) return true;
    failing = line;
    return false;
  }
  if (state.Decider() == side) {
    const Move m = oracle.next(line);
    GameState next = [&] {
      try {
        return state.ApplyMove(m);
      } catch (const std::logic_error&) {
        std::string t;
        for (const Move& mm : line) t += ToString(mm) + ", ";
        throw SourceStrategyFault("oracle returned illegal move '" +
                                  ToString(m) + "' after: " + t);
      }
    }();
    line.push_back(m);
    const bool ok = TraverseAdversary(next, oracle, side, line, failing);
    line.pop_back();
    return ok;
  }
  for (const Move& m : state.LegalMoves()) {
    line.push_back(m);
    const bool ok =
        TraverseAdversary(state.ApplyMove(m), oracle, side, line, failing);
    line.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

StrategyCheck VerifyStrategy(const Variant& variant, const Hypergraph& h,
                             const StrategyOracle& oracle, Role side) {
  StrategyCheck check;
  std::vector<Move> line;
  check.ok = TraverseAdversary(GameState::NewGame(variant, h), oracle, side,
                               line, check.failing_line);
  if (check.ok) check.failing_line.clear();
  return check;
}

}  // namespace stot
