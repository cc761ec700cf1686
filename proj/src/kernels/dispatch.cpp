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

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace redesc::kernels {

namespace {

constexpr KernelTable kScalarTable{
    Isa::kScalar,          scalar::popcount,     scalar::popcount_and,
    scalar::popcount_or,   scalar::popcount_andnot, scalar::cross_counts,
    scalar::interval_mask, scalar::accumulate,   scalar::split_sums,
};

#if defined(REDESC_HAVE_AVX2)
constexpr KernelTable kAvx2Table{
    Isa::kAvx2,          avx2::popcount,     avx2::popcount_and,
    avx2::popcount_or,   avx2::popcount_andnot, avx2::cross_counts,
    avx2::interval_mask, avx2::accumulate,   avx2::split_sums,
};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma") &&
         __builtin_cpu_supports("popcnt");
}
#endif

const KernelTable* initial_table() {
  const char* env = std::getenv("REDESC_KERNELS");
  if (env != nullptr && std::string(env) == "scalar") return &kScalarTable;
  if (const KernelTable* t = avx2_table()) return t;
  return &kScalarTable;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_table() { return kScalarTable; }

const KernelTable* avx2_table() {
#if defined(REDESC_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::kScalar};
  if (avx2_table() != nullptr) out.push_back(Isa::kAvx2);
  return out;
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

bool select(Isa isa) {
  const KernelTable* t = isa == Isa::kScalar ? &kScalarTable : avx2_table();
  if (t == nullptr) return false;
  current().store(t, std::memory_order_relaxed);
  return true;
}

}  // namespace redesc::kernels
