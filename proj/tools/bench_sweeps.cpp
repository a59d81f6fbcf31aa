#include <chrono>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "smflab/collisions.hpp"
#include "smflab/parallel.hpp"
#include "smflab/rep_data.hpp"
#include "smflab/root_system.hpp"

namespace {

using namespace smflab;

double run_once(const RootSystemData& rs, const WeightSystem& ws, long bound, bool serial,
                unsigned long long* tuples) {
  const auto start = std::chrono::steady_clock::now();
  const CollisionOutcome out = sweep_distinctness(rs, ws, bound, serial);
  const auto stop = std::chrono::steady_clock::now();
  if (!std::holds_alternative<DistinctnessCertificate>(out)) {
    std::fprintf(stderr, "unexpected collision during benchmark sweep\n");
    std::exit(1);
  }
  *tuples = std::get<DistinctnessCertificate>(out).tuples_checked;
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  long bound = 5;
  if (argc > 1) bound = std::stol(argv[1]);
  std::printf("threads available: %d, sweep box bound: %ld\n", parallel_thread_count(), bound);
  std::printf("%-10s %-14s %12s %12s %12s %8s\n", "type", "weight", "tuples", "serial[s]",
              "parallel[s]", "speedup");

  struct Case {
    LieType t;
    Weight lambda;
  };
  const std::vector<Case> cases = {
      {{Family::B, 6}, basis_weight(6, 0)},  {{Family::B, 8}, basis_weight(8, 0)},
      {{Family::C, 7}, basis_weight(7, 0)},  {{Family::C, 8}, basis_weight(8, 0)},
      {{Family::A, 8}, basis_weight(8, 0)},  {{Family::A, 1}, basis_weight(1, 0, 9)},
  };
  for (const Case& c : cases) {
    const RootSystemData& rs = root_system(c.t);
    const WeightSystem ws = weight_system(rs, c.lambda);
    unsigned long long tuples = 0;
    const double ts = run_once(rs, ws, bound, true, &tuples);
    const double tp = run_once(rs, ws, bound, false, &tuples);
    std::printf("%-10s %-14s %12llu %12.4f %12.4f %7.2fx\n", to_string(c.t).c_str(),
                c.lambda.to_string().c_str(), tuples, ts, tp, ts / tp);
  }
  return 0;
}
