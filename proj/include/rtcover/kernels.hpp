#ifndef RTCOVER_KERNELS_HPP
#define RTCOVER_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Bit-block kernels behind the edge-intersection hot path. Edges are stored
// as 64-bit word blocks over global vertex ids; all pairwise/triple
// intersection sizes reduce to AND + popcount over these blocks.
//
// A scalar reference implementation always exists; an AVX2 variant is
// selected at process start when the CPU supports it. Both must agree
// bit-for-bit (equivalence-tested).

namespace rtcover::kernels {

// |A & B| over nwords 64-bit words.
int and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t nwords);

// |A & B & C| over nwords 64-bit words.
int and_popcount3(const std::uint64_t* a, const std::uint64_t* b,
                  const std::uint64_t* c, std::size_t nwords);

// |A| over nwords words.
int popcount(const std::uint64_t* a, std::size_t nwords);

// true iff A & B == 0.
bool and_is_zero(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t nwords);

// Scalar reference kernels (always available; used as the equivalence
// oracle for the dispatched variants).
int and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t nwords);
int and_popcount3_scalar(const std::uint64_t* a, const std::uint64_t* b,
                         const std::uint64_t* c, std::size_t nwords);
int popcount_scalar(const std::uint64_t* a, std::size_t nwords);
bool and_is_zero_scalar(const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t nwords);

// Name of the implementation the dispatcher picked ("scalar" or "avx2").
const char* active_implementation();

}  // namespace rtcover::kernels

#endif  // RTCOVER_KERNELS_HPP
