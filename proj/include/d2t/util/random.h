// Copyright 2026 The d2t Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef D2T_UTIL_RANDOM_H_
#define D2T_UTIL_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace d2t {

// Random stream with platform-independent draws. The standard
// distributions are implementation-defined, so integer and real draws are
// computed here directly from the 64-bit engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  // Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform_index(static_cast<std::size_t>(hi - lo) + 1));
  }

  // Uniform real in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  double normal(double mean, double stddev);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform_index(i)]);
    }
  }
  template <typename T>
  void shuffle(std::vector<T> &items) {
    shuffle(std::span<T>(items));
  }

  // Random permutation of 0..n-1.
  std::vector<int> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// Derives independent named substreams from one root seed, so that adding
// a consumer of randomness in one place never shifts draws elsewhere.
class SeedSequence {
 public:
  explicit SeedSequence(std::uint64_t root) : root_(root) {}

  std::uint64_t root() const { return root_; }
  std::uint64_t derive(std::string_view name) const;
  std::uint64_t derive(std::string_view name, std::uint64_t index) const;
  Rng stream(std::string_view name) const { return Rng(derive(name)); }
  Rng stream(std::string_view name, std::uint64_t index) const {
    return Rng(derive(name, index));
  }

 private:
  std::uint64_t root_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace d2t

#endif  // D2T_UTIL_RANDOM_H_
