#include <algorithm>
#include <cassert>
#include <cstdint>

#include "gencomp/kernels.hpp"

namespace gencomp::kernels {

// Output-stationary: each thread owns a block of out[] and accumulates its
// dot products privately, so no two threads touch the same mpz.
void convolve_parallel(std::span<const Count> a, std::span<const Count> c, std::span<Count> out) {
  assert(!a.empty() && !c.empty() && out.size() == a.size() + c.size() - 1);
  const auto len = static_cast<std::int64_t>(out.size());
  const auto na = static_cast<std::int64_t>(a.size());
  const auto nc = static_cast<std::int64_t>(c.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t m = 0; m < len; ++m) {
    Count acc = 0;
    const std::int64_t lo = std::max<std::int64_t>(0, m - nc + 1);
    const std::int64_t hi = std::min<std::int64_t>(na - 1, m);
    for (std::int64_t i = lo; i <= hi; ++i) acc += a[i] * c[m - i];
    out[m] = std::move(acc);
  }
}

void composition_row_parallel(std::span<const std::uint64_t> weights, std::size_t k,
                              std::span<const Count> prev, std::span<Count> next) {
  assert(prev.size() == next.size() && k >= 1);
  const auto r = static_cast<std::int64_t>(weights.size());
  const auto kk = static_cast<std::int64_t>(k);
  const auto len = static_cast<std::int64_t>(next.size());

#pragma omp parallel for schedule(static)
  for (std::int64_t n = 0; n < len; ++n) {
    Count acc = 0;
    if (n >= kk && n <= r * kk) {
      const std::int64_t top = std::min(r, n - kk + 1);
      for (std::int64_t i = 1; i <= top; ++i) {
        if (weights[i - 1] == 0) continue;
        acc += prev[n - i] * weights[i - 1];
      }
    }
    next[n] = std::move(acc);
  }
}

}  // namespace gencomp::kernels
