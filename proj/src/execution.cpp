#include "symgor/execution.hpp"

#include <omp.h>

namespace symgor {

void set_worker_count(int workers) {
  omp_set_num_threads(workers < 1 ? omp_get_num_procs() : workers);
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace symgor
