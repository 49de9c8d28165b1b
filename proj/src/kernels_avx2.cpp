// AVX2 variants of the bit-block kernels. Compiled with -mavx2 and reached
// only through the runtime dispatcher, which checks cpu support first.

#if defined(__AVX2__)

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

namespace rtcover::kernels::avx2 {

namespace {

// Nibble-table popcount of a 256-bit lane, summed into four u64 counters.
inline __m256i popcount256(__m256i v) {
  const __m256i table = _mm256_setr_epi8(
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo),
                                _mm256_shuffle_epi8(table, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline long long horizontal_sum(__m256i acc) {
  return _mm256_extract_epi64(acc, 0) + _mm256_extract_epi64(acc, 1) +
         _mm256_extract_epi64(acc, 2) + _mm256_extract_epi64(acc, 3);
}

}  // namespace

int and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t nwords) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
  }
  int total = static_cast<int>(horizontal_sum(acc));
  for (; i < nwords; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

int and_popcount3(const std::uint64_t* a, const std::uint64_t* b,
                  const std::uint64_t* c, std::size_t nwords) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
    __m256i v = _mm256_and_si256(_mm256_and_si256(va, vb), vc);
    acc = _mm256_add_epi64(acc, popcount256(v));
  }
  int total = static_cast<int>(horizontal_sum(acc));
  for (; i < nwords; ++i) total += std::popcount(a[i] & b[i] & c[i]);
  return total;
}

int popcount(const std::uint64_t* a, std::size_t nwords) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, popcount256(va));
  }
  int total = static_cast<int>(horizontal_sum(acc));
  for (; i < nwords; ++i) total += std::popcount(a[i]);
  return total;
}

bool and_is_zero(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t nwords) {
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i v = _mm256_and_si256(va, vb);
    if (!_mm256_testz_si256(v, v)) return false;
  }
  for (; i < nwords; ++i) {
    if ((a[i] & b[i]) != 0) return false;
  }
  return true;
}

}  // namespace rtcover::kernels::avx2

#endif  // __AVX2__
