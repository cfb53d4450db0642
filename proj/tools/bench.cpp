// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical exact values.
//
//   ./commonpair_bench [repeats]

#include <omp.h>

#include <cstdlib>
#include <iostream>

#include "commonpair/expansion.hpp"
#include "commonpair/kernel.hpp"

using namespace commonpair;

namespace {

template <typename F>
double time_best(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const double start = omp_get_wtime();
    f();
    best = std::min(best, omp_get_wtime() - start);
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::cout << name << ": serial " << serial << "s, parallel " << parallel
            << "s, speedup " << serial / parallel
            << (equal ? "" : "  ** MISMATCH **") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads: " << omp_get_max_threads() << "\n";

  {
    // 16-block kernel, 5 vertices: ~1M rational assignment terms.
    const StepKernel big = tensor(kernel_K(), kernel_K());
    const Graph c5 = cycle_graph(5);
    Rational serial_value, parallel_value;
    const double serial =
        time_best(repeats, [&] { serial_value = density_reference(c5, big); });
    const double parallel =
        time_best(repeats, [&] { parallel_value = density(c5, big); });
    report("density t(C5, K(x)K)", serial, parallel,
           serial_value == parallel_value);
  }

  {
    GraphClassTable serial_table, parallel_table;
    const double serial = time_best(
        repeats, [&] { serial_table = enumerate_classes_reference(6); });
    const double parallel =
        time_best(repeats, [&] { parallel_table = enumerate_classes(6); });
    bool equal = serial_table.classes.size() == parallel_table.classes.size();
    for (std::size_t i = 0; equal && i < serial_table.classes.size(); ++i) {
      equal = serial_table.classes[i].rep == parallel_table.classes[i].rep &&
              serial_table.classes[i].aut == parallel_table.classes[i].aut;
    }
    report("enumerate_classes(6)", serial, parallel, equal);
  }

  return 0;
}
