#pragma once

#include <cstdint>
#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "bcr/error.hpp"

// Passes when `expr` throws a bcr::Error with the given code.
#define CHECK_THROWS_CODE(expr, expected)                                   \
  do {                                                                      \
    bool bcr_thrown_ = false;                                               \
    try {                                                                   \
      (void)(expr);                                                         \
    } catch (const bcr::Error& bcr_e_) {                                    \
      bcr_thrown_ = true;                                                   \
      CHECK_MESSAGE(bcr_e_.code() == (expected), bcr_e_.what());            \
    }                                                                       \
    CHECK_MESSAGE(bcr_thrown_, "expected " << bcr::to_string(expected));    \
  } while (false)

namespace testgen {

// Small hand-rolled generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return real(0.0, 1.0) < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), engine_);
  }

  /// Non-negative weights summing to 1.
  std::vector<double> simplex(std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) total += (x = real(0.01, 1.0));
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) acc += (w[i] /= total);
    w.back() = 1.0 - acc;
    return w;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testgen
