#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "rtcover/kernels.hpp"

using namespace rtcover;

namespace {

// bit-by-bit reference, independent of std::popcount
int bitwise_and_count(const std::vector<std::uint64_t>& a,
                      const std::vector<std::uint64_t>& b) {
  int total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    for (int bit = 0; bit < 64; ++bit) {
      std::uint64_t mask = std::uint64_t{1} << bit;
      if ((a[w] & mask) && (b[w] & mask)) ++total;
    }
  }
  return total;
}

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n,
                                        int density_shift) {
  std::vector<std::uint64_t> out(n);
  for (auto& w : out) {
    w = rng();
    for (int i = 0; i < density_shift; ++i) w &= rng();
  }
  return out;
}

}  // namespace

TEST_CASE("scalar kernels match a bit-by-bit reference") {
  std::mt19937_64 rng(7);
  for (std::size_t nwords : {std::size_t{0}, std::size_t{1}, std::size_t{3},
                             std::size_t{17}}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_words(rng, nwords, trial % 3);
      auto b = random_words(rng, nwords, trial % 3);
      CHECK(kernels::and_popcount_scalar(a.data(), b.data(), nwords) ==
            bitwise_and_count(a, b));
    }
  }
}

TEST_CASE("dispatched kernels agree with the scalar reference") {
  INFO("active implementation: ", kernels::active_implementation());
  std::mt19937_64 rng(42);
  for (std::size_t nwords = 0; nwords <= 40; ++nwords) {
    auto a = random_words(rng, nwords, 1);
    auto b = random_words(rng, nwords, 1);
    auto c = random_words(rng, nwords, 1);
    CHECK(kernels::and_popcount(a.data(), b.data(), nwords) ==
          kernels::and_popcount_scalar(a.data(), b.data(), nwords));
    CHECK(kernels::and_popcount3(a.data(), b.data(), c.data(), nwords) ==
          kernels::and_popcount3_scalar(a.data(), b.data(), c.data(), nwords));
    CHECK(kernels::popcount(a.data(), nwords) ==
          kernels::popcount_scalar(a.data(), nwords));
    CHECK(kernels::and_is_zero(a.data(), b.data(), nwords) ==
          kernels::and_is_zero_scalar(a.data(), b.data(), nwords));
  }
}

TEST_CASE("disjointness kernel on sparse and adversarial patterns") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t nwords = 1 + rng() % 12;
    auto a = random_words(rng, nwords, 4);
    auto b = random_words(rng, nwords, 4);
    bool reference = bitwise_and_count(a, b) == 0;
    CHECK(kernels::and_is_zero(a.data(), b.data(), nwords) == reference);
    CHECK(kernels::and_is_zero_scalar(a.data(), b.data(), nwords) ==
          reference);
  }
  // single overlapping bit in the last word
  std::vector<std::uint64_t> a(9, 0), b(9, 0);
  a[8] = std::uint64_t{1} << 63;
  b[8] = std::uint64_t{1} << 63;
  CHECK(!kernels::and_is_zero(a.data(), b.data(), 9));
  CHECK(kernels::and_popcount(a.data(), b.data(), 9) == 1);
}

TEST_CASE("all-ones popcount") {
  std::vector<std::uint64_t> ones(11, ~std::uint64_t{0});
  CHECK(kernels::popcount(ones.data(), 11) == 11 * 64);
  CHECK(kernels::and_popcount3(ones.data(), ones.data(), ones.data(), 11) ==
        11 * 64);
}
