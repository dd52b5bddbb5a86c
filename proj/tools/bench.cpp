// Compares the OpenMP sweep kernel against the serial reference on the
// standard desk-scale sweeps and reports wall times.

#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symcode/sweep.hpp"

int main() {
  using namespace symcode;

  struct job {
    sweep_property prop;
    std::size_t max_words;
    std::size_t max_len;
  };
  const job jobs[] = {
      {sweep_property::theorem1_roundtrip, 4, 4},
      {sweep_property::lemma1, 3, 4},
      {sweep_property::sp_vs_bruteforce, 3, 4},
      {sweep_property::theorem2, 4, 4},
  };

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-22s %-12s %10s %10s %8s\n", "property", "bounds", "serial", "parallel",
              "speedup");

  for (const job& jb : jobs) {
    sweep_report serial = run_sweep_serial(jb.prop, jb.max_words, jb.max_len);
    sweep_report parallel = run_sweep(jb.prop, jb.max_words, jb.max_len);
    bool same = serial.checked == parallel.checked && serial.failures == parallel.failures &&
                serial.rechecked == parallel.rechecked;
    std::printf("%-22s (%zu,%zu)      %9.3fs %9.3fs %7.2fx%s\n",
                std::string(property_name(jb.prop)).c_str(), jb.max_words, jb.max_len,
                serial.wall_seconds, parallel.wall_seconds,
                parallel.wall_seconds > 0 ? serial.wall_seconds / parallel.wall_seconds : 0.0,
                same ? "" : "  REPORTS DIFFER");
    if (!same) return 1;
  }
  return 0;
}
