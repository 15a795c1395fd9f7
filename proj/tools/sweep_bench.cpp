// Timing comparison of the serial reference sweep against the OpenMP sweep
// over the full catalog. Both paths must produce identical verdicts; the
// benchmark asserts that before reporting speedups.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "almostsym/classifier.hpp"

#ifdef ALMOSTSYM_HAVE_OPENMP
#include <omp.h>
#endif

using namespace almostsym;
using Clock = std::chrono::steady_clock;

namespace {

double run(const std::vector<SymmetricSpace>& spaces, SweepMode mode, int reps,
           std::vector<Verdict>* out) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    auto verdicts = sweep_catalog(spaces, mode);
    auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    if (r == 0) *out = std::move(verdicts);
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int max_rank = 8;
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--max-rank") && i + 1 < argc) max_rank = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--reps") && i + 1 < argc) reps = std::atoi(argv[++i]);
  }

  auto spaces = catalog(max_rank);
  long cells = 0;
  for (const auto& s : spaces) {
    long m = (1L << s.rank()) - 1;
    cells += m * m;
  }
  std::printf("catalog: %zu spaces, %ld (marking, character) cells, best of %d runs\n",
              spaces.size(), cells, reps);

  std::vector<Verdict> serial_out, parallel_out;
  double ts = run(spaces, SweepMode::serial, reps, &serial_out);
  std::printf("serial reference : %8.2f ms  (%.1f Mcells/s)\n", ts * 1e3,
              cells / ts / 1e6);

#ifdef ALMOSTSYM_HAVE_OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  double tp = run(spaces, SweepMode::parallel, reps, &parallel_out);
  std::printf("openmp x%-3d      : %8.2f ms  (%.1f Mcells/s)  speedup %.2fx\n",
              threads, tp * 1e3, cells / tp / 1e6, ts / tp);

  if (!(serial_out == parallel_out)) {
    std::printf("MISMATCH between serial and parallel sweeps\n");
    return 1;
  }
  std::printf("verdicts identical across modes\n");
  return 0;
}
