// Serial vs OpenMP comparison for the data-parallel kernels: rank-table
// construction, the corank-nullity subset sum, NBC counting, and batched
// resonance membership.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "matos/families.hpp"
#include "matos/os_algebra.hpp"
#include "matos/resonance.hpp"
#include "matos/tutte.hpp"

using namespace matos;

namespace {

double time_ms(const std::function<void()>& fn, int repeats = 3) {
  double best = 1e100;
  for (int i = 0; i < repeats; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-34s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the serial code\n\n");
#endif

  {
    Matroid ag4 = generate("ag:4").matroid;
    std::vector<std::int8_t> serial_table, parallel_table;
    double s = time_ms([&] { serial_table = build_rank_table_serial(ag4.n(), ag4.circuits()); });
    double p = time_ms([&] { parallel_table = build_rank_table_parallel(ag4.n(), ag4.circuits()); });
    report("rank table AG(2,4), n=16", s, p, serial_table == parallel_table);
  }

  {
    Matroid ngon6 = generate("ngon:6").matroid;
    std::vector<std::int8_t> serial_table, parallel_table;
    double s = time_ms([&] { serial_table = build_rank_table_serial(ngon6.n(), ngon6.circuits()); });
    double p = time_ms([&] { parallel_table = build_rank_table_parallel(ngon6.n(), ngon6.circuits()); });
    report("rank table ngon(6), n=18", s, p, serial_table == parallel_table);

    BivariatePoly serial_poly, parallel_poly;
    s = time_ms([&] { serial_poly = corank_nullity_serial(ngon6); });
    p = time_ms([&] { parallel_poly = corank_nullity_parallel(ngon6); });
    report("corank-nullity ngon(6), 2^18 sets", s, p, serial_poly == parallel_poly);
  }

  {
    Matroid ag4 = generate("ag:4").matroid;
    long serial_count = 0, parallel_count = 0;
    double s = time_ms([&] { serial_count = nbc_serial(ag4, 3); });
    double p = time_ms([&] { parallel_count = nbc_parallel(ag4, 3); });
    report("NBC count AG(2,4), p=3", s, p, serial_count == parallel_count);
  }

  {
    Matroid ag3 = generate("ag:3").matroid;
    std::vector<LambdaVector> lambdas;
    for (int i = 0; i < 24; ++i) {
      LambdaVector lambda(9, Rat(0));
      for (int e = 0; e < 9; ++e) lambda[static_cast<std::size_t>(e)] = Rat((i * 7 + e * 3) % 11 - 5);
      if (std::all_of(lambda.begin(), lambda.end(), [](const Rat& v) { return v == 0; })) lambda[0] = 1;
      lambdas.push_back(std::move(lambda));
    }
    std::vector<bool> serial_members, parallel_members;
    double s = time_ms([&] { serial_members = r1_membership_batch_serial(ag3, lambdas); }, 1);
    double p = time_ms([&] { parallel_members = r1_membership_batch_parallel(ag3, lambdas); }, 1);
    report("R1 membership AG(2,3), 24 points", s, p, serial_members == parallel_members);
  }

  return 0;
}
