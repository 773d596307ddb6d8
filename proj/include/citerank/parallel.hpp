#pragma once

namespace citerank {

// Bounds the worker count used by the OpenMP kernels. n <= 0 restores the
// runtime default. Results never depend on this value.
void set_thread_count(int n);

int thread_count();

}  // namespace citerank
