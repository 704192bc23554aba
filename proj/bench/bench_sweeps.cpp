// Wall-clock comparison of the serial reference path and the OpenMP path.
// Usage: bench_sweeps [maxdeg] [repeats]

#include "hopftree/primitives.hpp"
#include "hopftree/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace hopftree;

namespace {

double best_ms(int repeats, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
    best = std::min(best, d.count());
  }
  return best;
}

void row(const std::string& name, int repeats, const std::function<void(Exec)>& body) {
  const double s = best_ms(repeats, [&] { body(Exec::serial); });
  const double p = best_ms(repeats, [&] { body(Exec::parallel); });
  std::printf("%-28s %10.1f %10.1f %8.2fx\n", name.c_str(), s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t maxdeg = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 5;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("threads: %d, maxdeg: %zu, best of %d\n", omp_get_max_threads(), maxdeg, repeats);
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");
  for (const auto& suite : suite_names())
    row("verify " + suite, repeats, [&](Exec e) {
      VerifyOptions o;
      o.maxdeg = maxdeg;
      o.exec = e;
      if (!run_suite(suite, o).ok()) std::abort();
    });
  for (const char* family : {"tree", "sorted", "increasing"})
    row(std::string("primitive basis ") + family, repeats, [&](Exec e) {
      const auto f = parse_tree_family(family);
      const std::size_t n = f.kind == TreeFamily::Kind::unlabelled ? 6 : 4;
      primitive_basis(f, n, e);
    });
  return 0;
}
