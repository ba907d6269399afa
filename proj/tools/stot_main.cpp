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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stot/error.hpp"
#include "stot/matroid.hpp"
#include "stot/solver.hpp"
#include "stot/strategy.hpp"
#include "stot/verify.hpp"

namespace stot {
namespace {

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GameFlags {
  std::string game = "mb";
  std::string bias;
  std::string first;

  Variant ToVariantChecked() const {
    if (!bias.empty() && game != "mb-biased") {
      throw InputError("--bias requires --game mb-biased (got --game " +
                       game + ")");
    }
    if (!first.empty() && game != "mb") {
      throw InputError("--first requires --game mb (got --game " + game +
                       ")");
    }
    if (game == "mb") {
      const Role first_mover = first == "maker" ? Role::kMaker
                                                : Role::kBreaker;
      if (!first.empty() && first != "maker" && first != "breaker") {
        throw InputError("--first must be maker or breaker");
      }
      return Variant::MakerBreaker(1, 1, first_mover);
    }
    if (game == "mb-biased") {
      int a = 1, b = 2;
      if (!bias.empty()) {
        const auto colon = bias.find(':');
        if (colon == std::string::npos) {
          throw InputError("--bias must look like a:b");
        }
        try {
          a = std::stoi(bias.substr(0, colon));
          b = std::stoi(bias.substr(colon + 1));
        } catch (const std::exception&) {
          throw InputError("--bias must look like a:b");
        }
        if (a < 1 || b < 1) throw InputError("bias quotas must be >= 1");
      }
      return Variant::MakerBreaker(a, b, Role::kBreaker);
    }
    if (game == "wc") return Variant::WaiterClient();
    if (game == "smb") return Variant::StottingMakerBreaker();
    if (game == "swc") return Variant::StottingWaiterClient();
    throw InputError("unknown game: " + game);
  }
};

void AddGameFlags(CLI::App* cmd, GameFlags* flags) {
  cmd->add_option("--game", flags->game, "mb|mb-biased|wc|smb|swc")
      ->check(CLI::IsMember({"mb", "mb-biased", "wc", "smb", "swc"}));
  cmd->add_option("--bias", flags->bias, "a:b quotas (mb-biased only)");
  cmd->add_option("--first", flags->first,
                  "maker|breaker opening side (mb only)");
}

struct ClassFlags {
  int max_vertices = 4;
  int max_sets = 4;
  int max_set_size = 3;
  bool minimal_only = false;
  bool include_empty_set = false;

  EnumClass ToClass() const {
    EnumClass c{max_vertices, max_sets, max_set_size};
    c.minimal_only = minimal_only;
    c.include_empty_set = include_empty_set;
    return c;
  }
};

void AddClassFlags(CLI::App* cmd, ClassFlags* flags) {
  cmd->add_option("--max-vertices", flags->max_vertices, "board bound");
  cmd->add_option("--max-sets", flags->max_sets, "family size bound");
  cmd->add_option("--max-set-size", flags->max_set_size,
                  "winning-set size bound");
  cmd->add_flag("--minimal-only", flags->minimal_only,
                "enumerate antichain families only");
  cmd->add_flag("--include-empty-set", flags->include_empty_set,
                "include the instant-win family {{}}");
}

void PrintTrace(const GameState& s) {
  for (const Settle& st : s.settles()) std::cout << TraceLine(st) << "\n";
}

int RunSolve(const GameFlags& flags, const std::string& path) {
  const Hypergraph h = ParseHypergraph(ReadFileOrThrow(path));
  const Variant variant = flags.ToVariantChecked();
  std::cout << SerializeHypergraph(h) << "\n";
  std::cout << "game: " << VariantName(variant) << "\n";
  const SolveReport report = Solve(variant, h);
  std::cout << "winner: " << WinnerName(variant, report.winner) << "\n";
  std::cout << "optimal: "
            << (report.optimal_move.has_value()
                    ? ToString(*report.optimal_move)
                    : std::string("none"))
            << "\n";
  std::cout << "states_visited: " << report.states_visited << "\n";
  std::cout << "table_hits: " << report.table_hits << "\n";
  return 0;
}

int RunVerify(const ClassFlags& flags, int jobs) {
  if (flags.max_vertices > 5) {
    std::cerr << "note: classes above 5 vertices can take a long time\n";
  }
  const ImplicationReport report = CheckImplications(flags.ToClass(), jobs);
  std::cout << FormatReport(report);
  std::cerr << "elapsed: " << report.wall_seconds << "s (jobs=" << report.jobs
            << ")\n";
  return report.violations.empty() ? 0 : 1;
}

// Plays the oracle's game against the lexicographically least legal
// adversary move, echoing the trace.
GameState DemoGame(const Variant& variant, const Hypergraph& h,
                   const StrategyOracle& oracle) {
  GameState s = GameState::NewGame(variant, h);
  std::vector<Move> line;
  while (!s.IsTerminal()) {
    const Move m = s.Decider() == oracle.side ? oracle.next(line)
                                              : s.LegalMoves().front();
    line.push_back(m);
    s = s.ApplyMove(m);
  }
  return s;
}

int RunTransform(const std::string& adapter, const std::string& path,
                 bool trace) {
  const Hypergraph h = ParseHypergraph(ReadFileOrThrow(path));

  Variant src_variant;
  Role src_side = Role::kMaker;
  Variant dst_variant;
  Role dst_side = Role::kMaker;
  if (adapter == "waiter-from-stotting-maker") {
    src_variant = Variant::StottingMakerBreaker();
    dst_variant = Variant::WaiterClient();
    dst_side = Role::kWaiter;
  } else if (adapter == "stotting-maker-from-biased") {
    src_variant = Variant::MakerBreaker(1, 2, Role::kBreaker);
    dst_variant = Variant::StottingMakerBreaker();
  } else if (adapter == "maker-from-stotting-waiter") {
    src_variant = Variant::StottingWaiterClient();
    src_side = Role::kWaiter;
    dst_variant = Variant::MakerBreaker();
  } else if (adapter == "maker-from-stotting-maker") {
    src_variant = Variant::StottingMakerBreaker();
    dst_variant = Variant::MakerBreaker();
  } else if (adapter == "waiter-from-stotting-waiter") {
    src_variant = Variant::StottingWaiterClient();
    src_side = Role::kWaiter;
    dst_variant = Variant::WaiterClient();
    dst_side = Role::kWaiter;
  } else {
    throw InputError("unknown adapter: " + adapter);
  }

  const SolveReport src_report = Solve(src_variant, h);
  if (src_report.winner != SideOf(src_side)) {
    throw InputError(RoleName(src_side) + " does not win " +
                     VariantName(src_variant) +
                     " on this board; nothing to transform");
  }
  const StrategyOracle src = OptimalStrategy(src_variant, h, src_side);
  StrategyOracle adapted;
  if (adapter == "waiter-from-stotting-maker") {
    adapted = WaiterFromStottingMaker(h, src);
  } else if (adapter == "stotting-maker-from-biased") {
    adapted = StottingMakerFromBiased(h, src);
  } else if (adapter == "maker-from-stotting-waiter") {
    adapted = MakerFromStottingWaiter(h, src);
  } else if (adapter == "maker-from-stotting-maker") {
    adapted = MakerFromStottingMaker(h, src);
  } else {
    adapted = WaiterFromStottingWaiter(h, src);
  }

  std::cout << "adapter: " << adapter << "\n";
  std::cout << "source: " << VariantName(src_variant) << " ("
            << RoleName(src_side) << " wins)\n";
  std::cout << "target: " << VariantName(dst_variant) << " ("
            << RoleName(dst_side) << ")\n";
  if (trace) {
    std::cout << "demo trace vs least-move adversary:\n";
    const GameState end = DemoGame(dst_variant, h, adapted);
    PrintTrace(end);
    std::cout << "demo winner: "
              << WinnerName(dst_variant, *WinnerOf(end)) << "\n";
  }
  const StrategyCheck check =
      VerifyStrategy(dst_variant, h, adapted, dst_side);
  if (check.ok) {
    std::cout << "verified: " << RoleName(dst_side)
              << " wins every adversary line\n";
    return 0;
  }
  std::cout << "FAILED: losing line:";
  for (const Move& m : check.failing_line) std::cout << " [" << ToString(m)
                                                     << "]";
  std::cout << "\n";
  return 1;
}

int RunLehman(const std::string& path, bool trace) {
  const Multigraph g = ParseMultigraph(ReadFileOrThrow(path));
  const Matroid m = Matroid::Graphic(g);
  std::cout << "graph: " << g.vertex_names.size() << " vertices, "
            << g.edges.size() << " edges, rank " << m.Rank() << "\n";
  const std::optional<BasisPair> pair = FindTwoDisjointBases(m);
  if (!pair.has_value()) {
    std::cout << "no two disjoint bases: the connectivity game does not "
                 "apply\n";
    return 1;
  }
  const auto show = [&](VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.Vertices()) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(e);
    }
    return out + "}";
  };
  std::cout << "disjoint bases: " << show(pair->b1) << " " << show(pair->b2)
            << "\n";

  const RestrictedMatroid rm = RestrictTo(m, pair->b1 | pair->b2);
  VertexSet b1, b2;
  for (int e : pair->b1.Vertices()) b1 = b1.Plus(rm.old_to_new[e]);
  for (int e : pair->b2.Vertices()) b2 = b2.Plus(rm.old_to_new[e]);
  const StrategyOracle waiter = LehmanWaiter(rm.m, BasisPair{b1, b2});
  const Hypergraph board = MatroidToHypergraph(rm.m);

  if (trace) {
    std::cout << "demo trace vs least-move client (restricted element "
                 "indices):\n";
    const GameState end =
        DemoGame(Variant::StottingWaiterClient(), board, waiter);
    PrintTrace(end);
  }
  if (rm.m.ground_size() > 10) {
    std::cout << "ground too large for exhaustive verification (max 10)\n";
    return 0;
  }
  const StrategyCheck check = VerifyStrategy(
      Variant::StottingWaiterClient(), board, waiter, Role::kWaiter);
  if (check.ok) {
    std::cout << "verified: waiter wins every client line and ends "
                 "spanning\n";
    return 0;
  }
  std::cout << "FAILED: losing line:";
  for (const Move& mv : check.failing_line) {
    std::cout << " [" << ToString(mv) << "]";
  }
  std::cout << "\n";
  return 1;
}

int RunSearch(const ClassFlags& flags, const std::string& premise,
              const std::string& conclusion, int jobs) {
  const std::optional<VariantTag> p = ParseTag(premise);
  const std::optional<VariantTag> c = ParseTag(conclusion);
  if (!p || !c) {
    throw InputError("premise/conclusion must be one of mb|mb12|wc|smb|swc");
  }
  const std::vector<SeparationWitness> witnesses =
      SearchSeparation(flags.ToClass(), *p, *c, jobs);
  for (const SeparationWitness& w : witnesses) {
    std::string text = SerializeHypergraph(w.h);
    for (char& ch : text) {
      if (ch == '\n') ch = ';';
    }
    std::cout << "WITNESS " << premise << "->" << conclusion << " "
              << ToHex(w.key) << " hg=\"" << text << "\"\n";
  }
  std::cout << "witnesses: " << witnesses.size() << "\n";
  return witnesses.empty() ? 0 : 1;
}

int RunPlay(const GameFlags& flags, const std::string& human_role,
            const std::string& path) {
  const Variant variant = flags.ToVariantChecked();
  const Hypergraph h = ParseHypergraph(ReadFileOrThrow(path));
  Role human;
  if (human_role == "maker") human = Role::kMaker;
  else if (human_role == "breaker") human = Role::kBreaker;
  else if (human_role == "waiter") human = Role::kWaiter;
  else if (human_role == "client") human = Role::kClient;
  else throw InputError("--human must be maker|breaker|waiter|client");

  const bool wc = variant.kind == Variant::Kind::kWaiterClient ||
                  variant.kind == Variant::Kind::kStottingWaiterClient;
  if (wc != (human == Role::kWaiter || human == Role::kClient)) {
    throw InputError("--human role does not belong to this game");
  }

  // The engine plays optimally when its side wins, otherwise it plays the
  // least legal move.
  const Role engine = [&] {
    if (human == Role::kMaker) return Role::kBreaker;
    if (human == Role::kBreaker) return Role::kMaker;
    if (human == Role::kWaiter) return Role::kClient;
    return Role::kWaiter;
  }();
  std::optional<StrategyOracle> oracle;
  if (Solve(variant, h).winner == SideOf(engine)) {
    oracle = OptimalStrategy(variant, h, engine);
  }

  std::cout << SerializeHypergraph(h) << "\n";
  std::cout << "game: " << VariantName(variant) << ", you are "
            << RoleName(human) << "\n";
  GameState s = GameState::NewGame(variant, h);
  std::vector<Move> line;
  while (!s.IsTerminal()) {
    if (s.Decider() == human) {
      std::cout << "unclaimed:";
      for (int v : s.unclaimed().Vertices()) std::cout << " " << v;
      std::cout << "\nyour move (";
      const std::vector<Move> legal = s.LegalMoves();
      for (std::size_t i = 0; i < std::min<std::size_t>(legal.size(), 4);
           ++i) {
        std::cout << (i ? ", " : "") << ToString(legal[i]);
      }
      if (legal.size() > 4) std::cout << ", ...";
      std::cout << ")> " << std::flush;
      std::string text;
      if (!std::getline(std::cin, text)) {
        std::cout << "\naborted; partial trace:\n";
        PrintTrace(s);
        return 2;
      }
      const std::optional<Move> m = ParseMove(text);
      if (!m.has_value() ||
          std::find(legal.begin(), legal.end(), *m) == legal.end()) {
        std::cout << "illegal move, try again\n";
        continue;
      }
      line.push_back(*m);
      s = s.ApplyMove(*m);
    } else {
      const Move m =
          oracle.has_value() ? oracle->next(line) : s.LegalMoves().front();
      std::cout << "engine (" << RoleName(s.Decider()) << "): " << ToString(m)
                << "\n";
      line.push_back(m);
      s = s.ApplyMove(m);
    }
  }
  std::cout << "trace:\n";
  PrintTrace(s);
  std::cout << "winner: " << WinnerName(variant, *WinnerOf(s)) << "\n";
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"exact engine for Maker-Breaker, Waiter-Client and their "
               "stotting variants"};
  app.require_subcommand(1);

  GameFlags solve_flags;
  std::string solve_file;
  CLI::App* solve = app.add_subcommand("solve", "decide a game exactly");
  AddGameFlags(solve, &solve_flags);
  solve->add_option("file", solve_file, ".hg board file")->required();

  ClassFlags verify_flags;
  int verify_jobs = 1;
  CLI::App* verify =
      app.add_subcommand("verify", "run the implication battery");
  AddClassFlags(verify, &verify_flags);
  verify->add_option("--jobs", verify_jobs, "parallel workers");

  std::string adapter;
  std::string transform_file;
  bool transform_trace = false;
  CLI::App* transform = app.add_subcommand(
      "transform", "adapt a winning strategy to another game and verify it");
  transform
      ->add_option("--adapter", adapter,
                   "waiter-from-stotting-maker|stotting-maker-from-biased|"
                   "maker-from-stotting-waiter|maker-from-stotting-maker|"
                   "waiter-from-stotting-waiter")
      ->required();
  transform->add_option("file", transform_file, ".hg board file")->required();
  transform->add_flag("--trace", transform_trace, "print a demo game trace");

  std::string lehman_graph;
  bool lehman_trace = false;
  CLI::App* lehman = app.add_subcommand(
      "lehman", "play the connectivity game on a multigraph");
  lehman->add_option("--graph", lehman_graph, "edge-list file")->required();
  lehman->add_flag("--trace", lehman_trace, "print a demo game trace");

  ClassFlags search_flags;
  std::string premise, conclusion;
  int search_jobs = 1;
  CLI::App* search = app.add_subcommand(
      "search", "hunt for premise-wins/conclusion-loses witnesses");
  AddClassFlags(search, &search_flags);
  search->add_option("--premise", premise, "mb|mb12|wc|smb|swc")->required();
  search->add_option("--conclusion", conclusion, "mb|mb12|wc|smb|swc")
      ->required();
  search->add_option("--jobs", search_jobs, "parallel workers");

  GameFlags play_flags;
  std::string human_role = "breaker";
  std::string play_file;
  CLI::App* play = app.add_subcommand("play", "interactive game loop");
  AddGameFlags(play, &play_flags);
  play->add_option("--human", human_role, "maker|breaker|waiter|client");
  play->add_option("file", play_file, ".hg board file")->required();

  std::string seed;  // reserved; the engine has no randomness
  app.add_option("--seed", seed, "reserved");
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return RunSolve(solve_flags, solve_file);
    if (verify->parsed()) return RunVerify(verify_flags, verify_jobs);
    if (transform->parsed()) {
      return RunTransform(adapter, transform_file, transform_trace);
    }
    if (lehman->parsed()) return RunLehman(lehman_graph, lehman_trace);
    if (search->parsed()) {
      return RunSearch(search_flags, premise, conclusion, search_jobs);
    }
    if (play->parsed()) return RunPlay(play_flags, human_role, play_file);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace
}  // namespace stot

int main(int argc, char** argv) { return stot::Main(argc, argv); }
