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

#include <immintrin.h>

#include <bit>
#include <cmath>

#include "kernels_impl.hpp"

namespace redesc::kernels::avx2 {

namespace {

// Nibble lookup popcount (Mula, Kurz, Lemire). Returns four 64-bit lane sums.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                      _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  const __m128i s = _mm_add_epi64(_mm256_castsi256_si128(acc),
                                  _mm256_extracti128_si256(acc, 1));
  return static_cast<std::size_t>(_mm_cvtsi128_si64(s)) +
         static_cast<std::size_t>(_mm_extract_epi64(s, 1));
}

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

template <typename Op, typename Tail>
std::size_t reduce_binary(const std::uint64_t* a, const std::uint64_t* b,
                          std::size_t words, Op op, Tail tail) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_add_epi64(acc, popcount_lanes(op(load(a + i), load(b + i))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += std::popcount(tail(a[i], b[i]));
  return total;
}

}  // namespace

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t words) {
  return reduce_binary(
      a, b, words, [](__m256i x, __m256i y) { return _mm256_and_si256(x, y); },
      [](std::uint64_t x, std::uint64_t y) { return x & y; });
}

std::size_t popcount_or(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t words) {
  return reduce_binary(
      a, b, words, [](__m256i x, __m256i y) { return _mm256_or_si256(x, y); },
      [](std::uint64_t x, std::uint64_t y) { return x | y; });
}

std::size_t popcount_andnot(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t words) {
  // _mm256_andnot_si256(x, y) computes ~x & y.
  return reduce_binary(
      a, b, words,
      [](__m256i x, __m256i y) { return _mm256_andnot_si256(y, x); },
      [](std::uint64_t x, std::uint64_t y) { return x & ~y; });
}

CrossCounts cross_counts(const std::uint64_t* t1, const std::uint64_t* u1,
                         const std::uint64_t* t2, const std::uint64_t* u2,
                         std::size_t words) {
  __m256i tt = _mm256_setzero_si256();
  __m256i tu = _mm256_setzero_si256();
  __m256i ut = _mm256_setzero_si256();
  __m256i uu = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i a = load(t1 + i);
    const __m256i b = load(u1 + i);
    const __m256i c = load(t2 + i);
    const __m256i d = load(u2 + i);
    tt = _mm256_add_epi64(tt, popcount_lanes(_mm256_and_si256(a, c)));
    tu = _mm256_add_epi64(tu, popcount_lanes(_mm256_and_si256(a, d)));
    ut = _mm256_add_epi64(ut, popcount_lanes(_mm256_and_si256(b, c)));
    uu = _mm256_add_epi64(uu, popcount_lanes(_mm256_and_si256(b, d)));
  }
  CrossCounts out{horizontal_sum(tt), horizontal_sum(tu), horizontal_sum(ut),
                  horizontal_sum(uu)};
  for (; i < words; ++i) {
    out.tt += std::popcount(t1[i] & t2[i]);
    out.tu += std::popcount(t1[i] & u2[i]);
    out.ut += std::popcount(u1[i] & t2[i]);
    out.uu += std::popcount(u1[i] & u2[i]);
  }
  return out;
}

void interval_mask(const double* column, std::size_t n, Bound lo, Bound hi,
                   std::uint64_t* truth, std::uint64_t* missing) {
  const __m256d vlo = _mm256_set1_pd(lo.value);
  const __m256d vhi = _mm256_set1_pd(hi.value);
  const std::size_t words = words_for(n);
  for (std::size_t w = 0; w < words; ++w) {
    const std::size_t base = w * 64;
    const std::size_t end = std::min<std::size_t>(64, n - base);
    std::uint64_t t = 0;
    std::uint64_t m = 0;
    std::size_t b = 0;
    for (; b + 4 <= end; b += 4) {
      const __m256d x = _mm256_loadu_pd(column + base + b);
      // Ordered predicates are false on NaN, so missing cells never pass.
      const __m256d ge = lo.strict ? _mm256_cmp_pd(x, vlo, _CMP_GT_OQ)
                                   : _mm256_cmp_pd(x, vlo, _CMP_GE_OQ);
      const __m256d le = hi.strict ? _mm256_cmp_pd(x, vhi, _CMP_LT_OQ)
                                   : _mm256_cmp_pd(x, vhi, _CMP_LE_OQ);
      const __m256d nan = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);
      const auto tbits = static_cast<std::uint64_t>(
          _mm256_movemask_pd(_mm256_and_pd(ge, le)));
      const auto mbits = static_cast<std::uint64_t>(_mm256_movemask_pd(nan));
      t |= tbits << b;
      m |= mbits << b;
    }
    for (; b < end; ++b) {
      const double x = column[base + b];
      if (std::isnan(x)) {
        m |= std::uint64_t{1} << b;
      } else if ((lo.strict ? x > lo.value : x >= lo.value) &&
                 (hi.strict ? x < hi.value : x <= hi.value)) {
        t |= std::uint64_t{1} << b;
      }
    }
    truth[w] = t;
    missing[w] = m;
  }
}

void accumulate(double* acc, const double* row, std::size_t m) {
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    _mm256_storeu_pd(acc + j, _mm256_add_pd(_mm256_loadu_pd(acc + j),
                                            _mm256_loadu_pd(row + j)));
  }
  for (; j < m; ++j) acc[j] += row[j];
}

SplitSums split_sums(const double* left, const double* total, std::size_t m) {
  // Inputs are integer counts, so every partial sum is exact and the result
  // matches the scalar loop regardless of association order.
  __m256d ls = _mm256_setzero_pd();
  __m256d rs = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    const __m256d l = _mm256_loadu_pd(left + j);
    const __m256d r = _mm256_sub_pd(_mm256_loadu_pd(total + j), l);
    ls = _mm256_fmadd_pd(l, l, ls);
    rs = _mm256_fmadd_pd(r, r, rs);
  }
  alignas(32) double lbuf[4];
  alignas(32) double rbuf[4];
  _mm256_store_pd(lbuf, ls);
  _mm256_store_pd(rbuf, rs);
  SplitSums s{lbuf[0] + lbuf[1] + lbuf[2] + lbuf[3],
              rbuf[0] + rbuf[1] + rbuf[2] + rbuf[3]};
  for (; j < m; ++j) {
    const double r = total[j] - left[j];
    s.left_sq += left[j] * left[j];
    s.right_sq += r * r;
  }
  return s;
}

}  // namespace redesc::kernels::avx2
