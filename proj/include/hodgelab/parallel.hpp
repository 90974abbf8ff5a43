#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace hodgelab {

/// How a data-parallel loop runs. Serial is the reference path the parallel
/// kernels are tested against.
enum class Execution { Serial, Parallel };

/// Runs body(i) for i in [0, count). Under Execution::Parallel iterations are
/// scheduled dynamically across OpenMP threads; body must only write state
/// owned by its own index. The first exception (by index) is rethrown after
/// the loop completes.
template <class F>
void parallel_for(std::size_t count, Execution ex, F&& body) {
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
  if (ex == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Sets the OpenMP thread count; 0 keeps the runtime default.
void set_thread_count(int jobs);
int thread_count();

}  // namespace hodgelab
