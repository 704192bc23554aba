#pragma once

#include <cstddef>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

namespace hopftree {

/// Every exhaustive loop has a serial reference path and an OpenMP path.
/// Both must produce identical results; tests compare them.
enum class Exec { serial, parallel };

struct SweepResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Lowest failing index and its message, so reports do not depend on
  /// thread scheduling.
  std::size_t first_failure = 0;
  std::string message;

  bool ok() const { return failures == 0; }
};

/// Runs `check(i)` for i in [0, n). A check fails by returning a non-empty
/// message or by throwing.
template <typename Check>
SweepResult sweep(std::size_t n, Check&& check, Exec exec) {
  SweepResult out;
  out.cases = n;
  out.first_failure = n;
  auto record = [&](std::size_t i, std::string msg) {
    ++out.failures;
    if (i < out.first_failure) {
      out.first_failure = i;
      out.message = std::move(msg);
    }
  };
  auto run_one = [&](std::size_t i) -> std::string {
    try {
      return check(i);
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  };
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i)
      if (auto msg = run_one(i); !msg.empty()) record(i, std::move(msg));
    return out;
  }
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    auto msg = run_one(static_cast<std::size_t>(i));
    if (!msg.empty()) {
#pragma omp critical(hopftree_sweep)
      record(static_cast<std::size_t>(i), std::move(msg));
    }
  }
  return out;
}

/// out[i] = f(i), computed serially or with OpenMP. Exceptions thrown by f
/// are rethrown on the calling thread (lowest index wins).
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, F&& f, Exec exec) {
  std::vector<T> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hopftree
