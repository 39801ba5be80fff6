// Compares the serial reference search against the OpenMP-parallel one and
// the plain last level against the memoized one, on the graphs that matter
// here. Run without arguments for the quick set; pass "h1" to include the
// full H_1 exhaustion in every configuration.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "matchfactory/constructions.hpp"
#include "matchfactory/search.hpp"

namespace mf = matchfactory;

namespace {

double time_run(const mf::Multigraph& g, std::uint32_t m, int workers,
                bool memo, mf::Verdict* verdict,
                mf::SearchStats* stats) {
  mf::DisjointSearchOptions opts;
  opts.workers = workers;
  opts.memoize_last_level = memo;
  auto t0 = std::chrono::steady_clock::now();
  mf::DisjointFamilyDecision d = mf::has_disjoint_pms(g, m, opts);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           t0)
                 .count();
  *verdict = d.verdict;
  *stats = d.stats;
  return s;
}

void bench(const char* name, const mf::Multigraph& g, std::uint32_t m,
           int max_workers) {
  std::printf("%-24s m=%u\n", name, m);
  for (bool memo : {true, false})
    for (int workers = 1; workers <= max_workers; workers *= 2) {
      mf::Verdict verdict;
      mf::SearchStats stats;
      double s = time_run(g, m, workers, memo, &verdict, &stats);
      std::printf(
          "  workers=%d memo=%-5s  %8.3fs  verdict=%-7s nodes=%llu "
          "matchings=%llu\n",
          workers, memo ? "on" : "off", s, mf::verdict_name(verdict),
          static_cast<unsigned long long>(stats.nodes),
          static_cast<unsigned long long>(stats.matchings_enumerated));
    }
}

}  // namespace

int main(int argc, char** argv) {
  bool full = argc > 1 && std::string(argv[1]) == "h1";
  int max_workers = 1;
#ifdef _OPENMP
  max_workers = omp_get_max_threads();
#endif
  std::printf("max workers: %d\n", max_workers);

  mf::PetersenHost p1 = mf::build_p(1);
  bench("P_1 (yes instance)", p1.g, 2, max_workers);

  mf::PetersenHost p3 = mf::build_p(3);
  bench("P_3 (deep family)", p3.g, 6, max_workers);

  mf::ApexHost apex = mf::build_apex_host(1);
  bench("Q_1 apex host", apex.g, 2, max_workers);

  if (full) {
    mf::HFamily h1 = mf::build_h(1, mf::HVariant::kBase);
    bench("H_1 (headline no)", h1.g, 2, max_workers);
  } else {
    std::printf("pass \"h1\" to add the full H_1 exhaustion\n");
  }
  return 0;
}
