// Copyright 2026 The pitnav Authors
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

// Serial vs OpenMP Monte Carlo wall time on the bundled map.
//
//   bench_monte_carlo [runs] [episodes] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "pitnav/config.hpp"
#include "pitnav/monte_carlo.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pitnav;

namespace {

template <typename Fn>
double BestSeconds(int repeats, Fn fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

bool SameResults(const std::vector<RunResult>& a, const std::vector<RunResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].episodes.size() != b[k].episodes.size()) return false;
    for (std::size_t e = 0; e < a[k].episodes.size(); ++e) {
      const auto& x = a[k].episodes[e];
      const auto& y = b[k].episodes[e];
      if (x.steps != y.steps || x.final_peb != y.final_peb || x.mean_pmb != y.mean_pmb) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int runs = argc > 1 ? std::atoi(argv[1]) : 8;
  const int episodes = argc > 2 ? std::atoi(argv[2]) : 50;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

  ExperimentConfig cfg = DefaultConfig();
  ApplyConfigOverride(cfg, "sim.n_monte_carlo", std::to_string(runs));
  ApplyConfigOverride(cfg, "sim.n_episodes", std::to_string(episodes));
  auto map = std::make_shared<const GridMap>(LoadMapFile(cfg.map_path, cfg.cell_size));

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  std::vector<RunResult> serial, parallel;
  const double t_serial = BestSeconds(repeats, [&] { serial = RunMonteCarloSerial(cfg, map); });
  const double t_parallel = BestSeconds(repeats, [&] { parallel = RunMonteCarlo(cfg, map); });

  std::printf("runs=%d episodes=%d threads=%d repeats=%d\n", runs, episodes, threads, repeats);
  std::printf("serial   %.3f s\n", t_serial);
  std::printf("openmp   %.3f s\n", t_parallel);
  std::printf("speedup  %.2fx\n", t_serial / t_parallel);
  std::printf("results  %s\n", SameResults(serial, parallel) ? "identical" : "DIFFERENT");
  return SameResults(serial, parallel) ? 0 : 1;
}
