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

#pragma once

#include <algorithm>

#include "redesc/kernels.hpp"

namespace redesc::kernels {

namespace scalar {
std::size_t popcount(const std::uint64_t* a, std::size_t words);
std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t words);
std::size_t popcount_or(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t words);
std::size_t popcount_andnot(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t words);
CrossCounts cross_counts(const std::uint64_t* t1, const std::uint64_t* u1,
                         const std::uint64_t* t2, const std::uint64_t* u2,
                         std::size_t words);
void interval_mask(const double* column, std::size_t n, Bound lo, Bound hi,
                   std::uint64_t* truth, std::uint64_t* missing);
void accumulate(double* acc, const double* row, std::size_t m);
SplitSums split_sums(const double* left, const double* total, std::size_t m);
}  // namespace scalar

#if defined(REDESC_HAVE_AVX2)
namespace avx2 {
std::size_t popcount(const std::uint64_t* a, std::size_t words);
std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t words);
std::size_t popcount_or(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t words);
std::size_t popcount_andnot(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t words);
CrossCounts cross_counts(const std::uint64_t* t1, const std::uint64_t* u1,
                         const std::uint64_t* t2, const std::uint64_t* u2,
                         std::size_t words);
void interval_mask(const double* column, std::size_t n, Bound lo, Bound hi,
                   std::uint64_t* truth, std::uint64_t* missing);
void accumulate(double* acc, const double* row, std::size_t m);
SplitSums split_sums(const double* left, const double* total, std::size_t m);
}  // namespace avx2
#endif

}  // namespace redesc::kernels
