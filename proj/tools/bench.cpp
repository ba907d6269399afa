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

// Timing harness comparing the serial battery with the OpenMP fan-out.
// Both must produce byte-identical reports; the table shows wall times and
// speedups per worker count.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stot/solver.hpp"
#include "stot/verify.hpp"

namespace stot {
namespace {

double TimeBattery(const EnumClass& c, int jobs, std::string* report) {
  const auto t0 = std::chrono::steady_clock::now();
  const ImplicationReport r = CheckImplications(c, jobs);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  *report = FormatReport(r);
  return secs;
}

int Run(int argc, char** argv) {
  // A class big enough to give the workers something to chew on.
  EnumClass c{5, 4, 3};
  if (argc > 1) c.max_vertices = std::stoi(argv[1]);
  if (argc > 2) c.max_sets = std::stoi(argv[2]);
  if (argc > 3) c.max_set_size = std::stoi(argv[3]);

  std::cout << "battery class E(" << c.max_vertices << "," << c.max_sets
            << "," << c.max_set_size << "), "
            << Enumerate(c).size() << " instances\n";

  std::string serial_report;
  const double serial = TimeBattery(c, 1, &serial_report);
  std::cout << "jobs=1 (serial reference)  " << serial << " s\n";

#ifdef _OPENMP
  const int hw = omp_get_max_threads();
  for (int jobs = 2; jobs <= hw; jobs *= 2) {
    std::string report;
    const double secs = TimeBattery(c, jobs, &report);
    const bool identical = report == serial_report;
    std::cout << "jobs=" << jobs << "  " << secs << " s  speedup "
              << serial / secs << "  report "
              << (identical ? "identical" : "DIFFERS") << "\n";
    if (!identical) return 1;
  }
#else
  std::cout << "(built without OpenMP; parallel lane unavailable)\n";
#endif

  // Single-solve latency probe: the 14-element stotting board from the
  // acceptance suite.
  const Hypergraph h = MakeHypergraph(
      14, {VertexSet::Of({1, 2, 3, 4}), VertexSet::Of({4, 5, 6, 7}),
           VertexSet::Of({7, 8, 9, 10}), VertexSet::Of({10, 11, 12, 13}),
           VertexSet::Of({1, 2, 13, 14}), VertexSet::Of({3, 5, 8, 11}),
           VertexSet::Of({6, 9, 12, 14}), VertexSet::Of({2, 6, 10, 14})});
  const auto t0 = std::chrono::steady_clock::now();
  const SolveReport r = Solve(Variant::StottingWaiterClient(), h);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::cout << "swc 14x8 solve  " << secs << " s  states "
            << r.states_visited << "\n";
  return 0;
}

}  // namespace
}  // namespace stot

int main(int argc, char** argv) { return stot::Run(argc, argv); }
