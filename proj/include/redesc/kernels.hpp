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

// Data-parallel inner loops used by the miner. Each kernel has a portable
// scalar reference implementation and, on x86-64, an AVX2 variant. The
// variant is picked once at startup from the CPU features; tests pin the
// scalar table and compare the two bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace redesc::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// One end of a numeric interval. `strict` selects < instead of <=.
struct Bound {
  double value;
  bool strict;
};

// Counts of |t1&t2|, |t1&u2|, |u1&t2|, |u1&u2|.
struct CrossCounts {
  std::size_t tt = 0;
  std::size_t tu = 0;
  std::size_t ut = 0;
  std::size_t uu = 0;
};

struct SplitSums {
  // sum_j left[j]^2 and sum_j (total[j] - left[j])^2
  double left_sq = 0.0;
  double right_sq = 0.0;
};

struct KernelTable {
  Isa isa;

  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
  std::size_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b,
                              std::size_t words);
  std::size_t (*popcount_or)(const std::uint64_t* a, const std::uint64_t* b,
                             std::size_t words);
  // |a & ~b|
  std::size_t (*popcount_andnot)(const std::uint64_t* a,
                                 const std::uint64_t* b, std::size_t words);
  CrossCounts (*cross_counts)(const std::uint64_t* t1, const std::uint64_t* u1,
                              const std::uint64_t* t2, const std::uint64_t* u2,
                              std::size_t words);

  // Evaluates lo <(=) x <(=) hi over a column. NaN cells set the matching bit
  // in `missing` and never in `truth`. Both outputs hold ceil(n/64) words and
  // are fully overwritten; bits past n are zero.
  void (*interval_mask)(const double* column, std::size_t n, Bound lo,
                        Bound hi, std::uint64_t* truth,
                        std::uint64_t* missing);

  // acc[j] += row[j]
  void (*accumulate)(double* acc, const double* row, std::size_t m);
  SplitSums (*split_sums)(const double* left, const double* total,
                          std::size_t m);
};

const KernelTable& scalar_table();

// Returns nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();

std::vector<Isa> available_isas();

// Table used by the library. Defaults to the best available variant; the
// REDESC_KERNELS environment variable ("scalar" or "avx2") overrides it.
const KernelTable& active();

// Forces a variant for the rest of the process. Returns false if the
// variant is unavailable on this machine.
bool select(Isa isa);

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace redesc::kernels
