#pragma once

// Inner loops shared by the polynomial and counting modules. Each kernel has
// a serial reference and an OpenMP version that must agree exactly; the
// parallel versions split the output index range across threads, so every
// output slot is written by exactly one thread.

#include <cstddef>
#include <cstdint>
#include <span>

#include "gencomp/count.hpp"

namespace gencomp {

enum class Exec {
  serial,
  parallel,
  automatic,  // parallel once the work estimate passes kParallelThreshold
};

namespace kernels {

/// Multiply-add count above which Exec::automatic goes parallel.
inline constexpr std::size_t kParallelThreshold = 1u << 14;

/// out[m] = sum_i a[i] * c[m - i]; out.size() must be a.size() + c.size() - 1.
void convolve_serial(std::span<const Count> a, std::span<const Count> c, std::span<Count> out);
void convolve_parallel(std::span<const Count> a, std::span<const Count> c, std::span<Count> out);
void convolve(std::span<const Count> a, std::span<const Count> c, std::span<Count> out,
              Exec exec = Exec::automatic);

/// One row of the parts-count table. Given prev[n] = C(k-1, n) for all n in
/// the column range, fills
///   next[n] = sum_{i=1}^{min(r, n-k+1)} b_i * prev[n-i]   for k <= n <= r*k,
/// and zero elsewhere. prev and next must have the same length.
void composition_row_serial(std::span<const std::uint64_t> weights, std::size_t k,
                            std::span<const Count> prev, std::span<Count> next);
void composition_row_parallel(std::span<const std::uint64_t> weights, std::size_t k,
                              std::span<const Count> prev, std::span<Count> next);
void composition_row(std::span<const std::uint64_t> weights, std::size_t k,
                     std::span<const Count> prev, std::span<Count> next,
                     Exec exec = Exec::automatic);

}  // namespace kernels
}  // namespace gencomp
