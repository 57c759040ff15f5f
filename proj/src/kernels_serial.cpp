#include <algorithm>
#include <cassert>

#include "gencomp/kernels.hpp"

namespace gencomp::kernels {

void convolve_serial(std::span<const Count> a, std::span<const Count> c, std::span<Count> out) {
  assert(!a.empty() && !c.empty() && out.size() == a.size() + c.size() - 1);
  for (auto& x : out) x = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) out[i + j] += a[i] * c[j];
  }
}

void composition_row_serial(std::span<const std::uint64_t> weights, std::size_t k,
                            std::span<const Count> prev, std::span<Count> next) {
  assert(prev.size() == next.size() && k >= 1);
  const std::size_t r = weights.size();
  for (std::size_t n = 0; n < next.size(); ++n) {
    next[n] = 0;
    if (n < k || n > r * k) continue;
    const std::size_t top = std::min(r, n - k + 1);
    for (std::size_t i = 1; i <= top; ++i) {
      if (weights[i - 1] == 0) continue;
      next[n] += prev[n - i] * weights[i - 1];
    }
  }
}

void convolve(std::span<const Count> a, std::span<const Count> c, std::span<Count> out, Exec exec) {
  if (exec == Exec::automatic)
    exec = a.size() * c.size() >= kParallelThreshold ? Exec::parallel : Exec::serial;
  if (exec == Exec::parallel)
    convolve_parallel(a, c, out);
  else
    convolve_serial(a, c, out);
}

void composition_row(std::span<const std::uint64_t> weights, std::size_t k,
                     std::span<const Count> prev, std::span<Count> next, Exec exec) {
  if (exec == Exec::automatic)
    exec = weights.size() * next.size() >= kParallelThreshold ? Exec::parallel : Exec::serial;
  if (exec == Exec::parallel)
    composition_row_parallel(weights, k, prev, next);
  else
    composition_row_serial(weights, k, prev, next);
}

}  // namespace gencomp::kernels
