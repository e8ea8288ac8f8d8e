// Serial reference vs OpenMP kernels on a few larger instances.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nestobetti/betti.hpp"
#include "nestobetti/permutations.hpp"

using namespace nestobetti;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

struct Case {
  std::string name;
  std::function<std::vector<std::uint64_t>(Execution)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel timings"};
  int reps = 3;
  int threads = 0;
  bool quick = false;
  app.add_option("--reps", reps, "repetitions, best time reported")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
  app.add_flag("--quick", quick, "smaller instances");
  CLI11_PARSE(app, argc, argv);
  set_thread_count(threads);

  const int big = quick ? 10 : 14;
  const BuildingSet path = graphical_building_set(path_graph(big));
  const BuildingSet hoch = hochschild_building_set(big / 2 - 1, big / 2 + 1);
  const BuildingSet complete = graphical_building_set(complete_graph(quick ? 9 : 12));
  const BuildingSet hom_case = hochschild_building_set(3, quick ? 3 : 5);

  std::vector<Case> cases{
      {"component table, Hoch(" + std::to_string(big / 2 - 1) + "," + std::to_string(big / 2 + 1) + ")",
       [&](Execution e) {
         const ComponentTable t(hoch, e);
         std::vector<std::uint64_t> sample;
         for (std::uint64_t m = 1; m < (std::uint64_t{1} << t.rank_count()); m += 97) sample.push_back(t.max_component(m));
         return sample;
       }},
      {"alternating betti, path " + std::to_string(big), [&](Execution e) { return real_betti_alternating(path, e).betti; }},
      {"alternating betti, Hoch", [&](Execution e) { return real_betti_alternating(hoch, e).betti; }},
      {"alternating betti, complete", [&](Execution e) { return real_betti_alternating(complete, e).betti; }},
      {"homology oracle, Hoch(3," + std::to_string(quick ? 3 : 5) + ")",
       [&](Execution e) { return real_betti_homology_oracle(hom_case, e).betti; }},
  };

  std::printf("threads\t%d\n", thread_count());
  std::printf("%-40s %10s %10s %8s %s\n", "case", "serial_s", "parallel_s", "speedup", "same");
  int mismatches = 0;
  for (const auto& c : cases) {
    std::vector<std::uint64_t> s, p;
    const double ts = best_of(reps, [&] { s = c.run(Execution::Serial); });
    const double tp = best_of(reps, [&] { p = c.run(Execution::Parallel); });
    mismatches += s != p;
    std::printf("%-40s %10.4f %10.4f %8.2f %s\n", c.name.c_str(), ts, tp, ts / tp, s == p ? "yes" : "NO");
  }
  return mismatches == 0 ? 0 : 1;
}
