#pragma once

// Shared error types, number formatting and a small parallel-for used by
// sweeps. STATGEO_THREADS caps the worker count.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace statgeo {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation outside a function's domain (log/sqrt of a negative number,
// asin outside [-1,1], negative base with fractional exponent).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed user input: model files, points, flag values.
class InputError : public Error {
 public:
  using Error::Error;
};

// Formats `v` with `sig` significant digits ("%.<sig>g").
inline std::string format_sig(double v, int sig = 9) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
  return buf;
}

// Rounds `v` to `sig` significant decimal digits.
inline double round_sig(double v, int sig = 9) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*e", sig - 1, v);
  return std::strtod(buf, nullptr);
}

inline int max_threads() {
  static const int cached = [] {
    unsigned hw = std::thread::hardware_concurrency();
    int t = hw ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("STATGEO_THREADS")) {
      int cap = std::atoi(env);
      if (cap >= 1) t = std::min(t, cap);
    }
    return t;
  }();
  return cached;
}

// Runs fn(i) for i in [0, count). Work items must be independent; results
// should be written to preallocated slots so output order stays fixed.
template <class F>
void parallel_for(int count, F&& fn) {
  int nt = std::min(max_threads(), count);
  if (nt <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace statgeo
