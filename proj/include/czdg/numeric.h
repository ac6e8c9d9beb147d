// Copyright 2026 The czdg Authors.
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

#ifndef CZDG_NUMERIC_H_
#define CZDG_NUMERIC_H_

#include <cstdint>
#include <optional>

namespace czdg {

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

// q = p^k with p prime and k >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

// Checked integer power; nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit);

// Representative of a in [0, m).
inline std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m) {
  std::int64_t r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m)
                                          : r);
}

}  // namespace czdg

#endif  // CZDG_NUMERIC_H_
