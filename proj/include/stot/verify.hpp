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

#ifndef STOT_VERIFY_H_
#define STOT_VERIFY_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stot/games.hpp"
#include "stot/hypergraph.hpp"

namespace stot {

// The five game configurations the battery solves on every instance.
enum class VariantTag : int { kMb = 0, kMb12 = 1, kWc = 2, kSmb = 3, kSwc = 4 };
inline constexpr int kNumVariantTags = 5;

Variant ToVariant(VariantTag tag);
std::string TagName(VariantTag tag);
std::optional<VariantTag> ParseTag(const std::string& name);

// Bounds of the exhaustive enumeration. Instances are reduced canonical
// representatives, deduplicated by canonical key.
struct EnumClass {
  int max_vertices = 4;
  int max_sets = 4;
  int max_set_size = 3;
  bool minimal_only = false;       // skip non-antichain families up front
  bool include_empty_family = true;
  bool include_empty_set = false;  // adds the instant-win instance F={∅}
};

std::vector<Hypergraph> Enumerate(const EnumClass& c);

struct InstanceOutcomes {
  std::string key;  // canonical key bytes
  Hypergraph h;
  std::array<bool, kNumVariantTags> protagonist_wins{};
  std::uint64_t states_visited = 0;
};

struct ImplicationViolation {
  std::string name;  // e.g. "smb->wc"
  std::string key;
  Hypergraph h;
};

// One row per paper implication plus the two definitional embeddings.
struct ImplicationRule {
  VariantTag premise;
  VariantTag conclusion;
  const char* name;
};
const std::array<ImplicationRule, 5>& ImplicationRules();

struct ImplicationReport {
  std::vector<InstanceOutcomes> outcomes;  // ordered by canonical key
  std::vector<ImplicationViolation> violations;
  std::array<int, kNumVariantTags> win_counts{};
  std::uint64_t states_total = 0;
  double wall_seconds = 0.0;  // never part of the formatted report
  int jobs = 1;
};

// Solves all five configurations on every enumerated instance and checks
// the implications. jobs <= 1 runs the serial reference loop; jobs > 1 fans
// out over OpenMP workers. Reports are merged in canonical-key order, so
// the formatted output is identical for any worker count.
ImplicationReport CheckImplications(const EnumClass& c, int jobs = 1);

// Line-oriented deterministic text: RESULT/VIOLATION lines plus a summary
// footer. Timing is deliberately excluded.
std::string FormatReport(const ImplicationReport& r);

struct SeparationWitness {
  std::string key;
  Hypergraph h;
};

// Instances where the premise protagonist wins and the conclusion
// protagonist loses.
std::vector<SeparationWitness> SearchSeparation(const EnumClass& c,
                                                VariantTag premise,
                                                VariantTag conclusion,
                                                int jobs = 1);

// Exhaustive adversary traversal: iterates every opponent decision sequence
// against the oracle and reports the lexicographically first losing line,
// if any.
struct StrategyCheck {
  bool ok = false;
  std::vector<Move> failing_line;
};
StrategyCheck VerifyStrategy(const Variant& variant, const Hypergraph& h,
                             const StrategyOracle& oracle, Role side);

}  // namespace stot

#endif  // STOT_VERIFY_H_
