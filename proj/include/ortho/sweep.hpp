#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace ortho {

// Applies fn to each index 0..count-1 and returns the results in index
// order. The serial version is the reference implementation; the parallel
// version partitions the indices across OpenMP threads and must produce the
// identical vector (fn is required to be a pure function of its index).

template <typename T>
std::vector<T> indexed_map_serial(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

template <typename T>
std::vector<T> indexed_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(count); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace ortho
