#include "nsch/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nsch::parallel {
namespace {
std::atomic<int> g_threads{1};
}

int threads() { return g_threads.load(std::memory_order_relaxed); }

void set_threads(int n) {
  if (n <= 0) {
#ifdef _OPENMP
    n = omp_get_max_threads();
#else
    n = 1;
#endif
  }
  g_threads.store(n, std::memory_order_relaxed);
}

int configure_from_env() {
  if (const char* env = std::getenv("NSCH_THREADS")) {
    try {
      set_threads(std::stoi(env));
    } catch (const std::exception&) {
      set_threads(1);
    }
  }
  return threads();
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace nsch::parallel
