// Copyright 2026 The Authors.
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

#ifndef IKAON_RNG_H_
#define IKAON_RNG_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ikaon {

inline constexpr std::uint64_t kDefaultSeed = 20240501;

// std::mt19937_64 is fully specified by the standard, but the std
// distributions are not; the helpers below map raw draws to ranges
// themselves so that generated instances are identical on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [lo, hi]. Requires lo <= hi.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(Next());
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  // True with probability num/den.
  bool Bernoulli(std::int64_t num, std::int64_t den) {
    return Uniform(0, den - 1) < num;
  }

  double UnitDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(Uniform(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ikaon

#endif  // IKAON_RNG_H_
