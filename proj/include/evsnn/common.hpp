// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>

namespace evsnn {

// Error categories map onto CLI exit codes: configuration/format/data
// problems exit 2, verification mismatches exit 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename E = ConfigError>
inline void check(bool cond, const std::string& msg) {
  if (!cond) throw E(msg);
}

inline void check_finite(std::span<const float> values, const std::string& context) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw DataError(context + ": non-finite value at index " + std::to_string(i));
  }
}

// Deterministic RNG helpers. std:: distributions are implementation-defined,
// so anything that must reproduce across toolchains draws through these.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint32_t next_u32() { return static_cast<uint32_t>(gen_()); }

  // Uniform in [0, 1) with 24 bits of randomness.
  float uniform() { return static_cast<float>(next_u32() >> 8) * 0x1.0p-24f; }

  float uniform(float lo, float hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n > 0. Modulo bias is irrelevant here.
  uint32_t below(uint32_t n) { return next_u32() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(static_cast<uint32_t>(i))]);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace evsnn
