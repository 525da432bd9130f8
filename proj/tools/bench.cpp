#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "ortho/radial.hpp"
#include "ortho/suites.hpp"
#include "ortho/sweep.hpp"

namespace {

struct Task {
  ortho::Rational alpha;
  long m;
  long n;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"times the exact inner-product sweep, serial reference vs OpenMP"};
  long nmax = 14;
  int repeat = 3;
  app.add_option("--nmax", nmax, "largest degree in the sweep")->check(CLI::PositiveNumber);
  app.add_option("--repeat", repeat, "timed repetitions")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::vector<Task> tasks;
  for (const ortho::Rational& alpha : ortho::default_alphas())
    for (long n = 1; n <= nmax; ++n)
      for (long m = 0; m < n; ++m) tasks.push_back({alpha, m, n});

  const std::function<std::string(std::size_t)> kernel = [&](std::size_t i) {
    const Task& t = tasks[i];
    return ortho::phi_inner_product(t.m, t.n, t.alpha).reduced.coefficient.str();
  };

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("tasks: %zu (nmax=%ld, %d repetitions)\n", tasks.size(), nmax, repeat);

  double serial_best = 1e300, parallel_best = 1e300;
  std::vector<std::string> serial_out, parallel_out;
  for (int r = 0; r < repeat; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    serial_out = ortho::indexed_map_serial<std::string>(tasks.size(), kernel);
    serial_best = std::min(serial_best, ms_since(t0));

    t0 = std::chrono::steady_clock::now();
    parallel_out = ortho::indexed_map<std::string>(tasks.size(), kernel);
    parallel_best = std::min(parallel_best, ms_since(t0));
  }

  if (serial_out != parallel_out) {
    std::printf("MISMATCH: parallel sweep differs from the serial reference\n");
    return 1;
  }
  std::size_t zeros = 0;
  for (const auto& s : serial_out)
    if (s == "0") ++zeros;
  std::printf("results identical; %zu of %zu inner products vanish\n", zeros, serial_out.size());
  std::printf("serial   best: %10.3f ms\n", serial_best);
  std::printf("parallel best: %10.3f ms\n", parallel_best);
  return 0;
}
