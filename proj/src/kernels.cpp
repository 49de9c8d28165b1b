#include "rtcover/kernels.hpp"

#include <bit>

namespace rtcover::kernels {

int and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t nwords) {
  int total = 0;
  for (std::size_t i = 0; i < nwords; ++i) {
    total += std::popcount(a[i] & b[i]);
  }
  return total;
}

int and_popcount3_scalar(const std::uint64_t* a, const std::uint64_t* b,
                         const std::uint64_t* c, std::size_t nwords) {
  int total = 0;
  for (std::size_t i = 0; i < nwords; ++i) {
    total += std::popcount(a[i] & b[i] & c[i]);
  }
  return total;
}

int popcount_scalar(const std::uint64_t* a, std::size_t nwords) {
  int total = 0;
  for (std::size_t i = 0; i < nwords; ++i) {
    total += std::popcount(a[i]);
  }
  return total;
}

bool and_is_zero_scalar(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t nwords) {
  for (std::size_t i = 0; i < nwords; ++i) {
    if ((a[i] & b[i]) != 0) return false;
  }
  return true;
}

#if defined(RTCOVER_AVX2_KERNELS)
namespace avx2 {
int and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t nwords);
int and_popcount3(const std::uint64_t* a, const std::uint64_t* b,
                  const std::uint64_t* c, std::size_t nwords);
int popcount(const std::uint64_t* a, std::size_t nwords);
bool and_is_zero(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t nwords);
}  // namespace avx2
#endif

namespace {

struct Dispatch {
  int (*and_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
  int (*and_popcount3)(const std::uint64_t*, const std::uint64_t*,
                       const std::uint64_t*, std::size_t);
  int (*popcount)(const std::uint64_t*, std::size_t);
  bool (*and_is_zero)(const std::uint64_t*, const std::uint64_t*, std::size_t);
  const char* name;
};

Dispatch select_dispatch() {
#if defined(RTCOVER_AVX2_KERNELS) && defined(__x86_64__)
  if (__builtin_cpu_supports("avx2")) {
    return {avx2::and_popcount, avx2::and_popcount3, avx2::popcount,
            avx2::and_is_zero, "avx2"};
  }
#endif
  return {and_popcount_scalar, and_popcount3_scalar, popcount_scalar,
          and_is_zero_scalar, "scalar"};
}

const Dispatch& dispatch() {
  static const Dispatch d = select_dispatch();
  return d;
}

}  // namespace

int and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t nwords) {
  return dispatch().and_popcount(a, b, nwords);
}

int and_popcount3(const std::uint64_t* a, const std::uint64_t* b,
                  const std::uint64_t* c, std::size_t nwords) {
  return dispatch().and_popcount3(a, b, c, nwords);
}

int popcount(const std::uint64_t* a, std::size_t nwords) {
  return dispatch().popcount(a, nwords);
}

bool and_is_zero(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t nwords) {
  return dispatch().and_is_zero(a, b, nwords);
}

const char* active_implementation() { return dispatch().name; }

}  // namespace rtcover::kernels
