// Copyright 2026 The redesc Authors.
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

#include <bit>
#include <cmath>

#include "kernels_impl.hpp"

namespace redesc::kernels::scalar {

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::size_t popcount_or(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] | b[i]);
  return total;
}

std::size_t popcount_andnot(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & ~b[i]);
  return total;
}

CrossCounts cross_counts(const std::uint64_t* t1, const std::uint64_t* u1,
                         const std::uint64_t* t2, const std::uint64_t* u2,
                         std::size_t words) {
  CrossCounts c;
  for (std::size_t i = 0; i < words; ++i) {
    c.tt += std::popcount(t1[i] & t2[i]);
    c.tu += std::popcount(t1[i] & u2[i]);
    c.ut += std::popcount(u1[i] & t2[i]);
    c.uu += std::popcount(u1[i] & u2[i]);
  }
  return c;
}

namespace {

inline bool above(double x, Bound lo) {
  return lo.strict ? x > lo.value : x >= lo.value;
}

inline bool below(double x, Bound hi) {
  return hi.strict ? x < hi.value : x <= hi.value;
}

}  // namespace

void interval_mask(const double* column, std::size_t n, Bound lo, Bound hi,
                   std::uint64_t* truth, std::uint64_t* missing) {
  const std::size_t words = words_for(n);
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t t = 0;
    std::uint64_t m = 0;
    const std::size_t base = w * 64;
    const std::size_t end = std::min<std::size_t>(64, n - base);
    for (std::size_t b = 0; b < end; ++b) {
      const double x = column[base + b];
      if (std::isnan(x)) {
        m |= std::uint64_t{1} << b;
      } else if (above(x, lo) && below(x, hi)) {
        t |= std::uint64_t{1} << b;
      }
    }
    truth[w] = t;
    missing[w] = m;
  }
}

void accumulate(double* acc, const double* row, std::size_t m) {
  for (std::size_t j = 0; j < m; ++j) acc[j] += row[j];
}

SplitSums split_sums(const double* left, const double* total, std::size_t m) {
  SplitSums s;
  for (std::size_t j = 0; j < m; ++j) {
    const double r = total[j] - left[j];
    s.left_sq += left[j] * left[j];
    s.right_sq += r * r;
  }
  return s;
}

}  // namespace redesc::kernels::scalar
