#pragma once

#include <cstddef>
#include <vector>

#include "gencomp/core.hpp"
#include "gencomp/count.hpp"
#include "gencomp/kernels.hpp"

namespace gencomp {

/// C(k, n), the number of generalized compositions of n into exactly k
/// parts, for 0 <= k <= n <= max_n (and every (k, n) with k > n reads as 0).
///
/// Row 0 is the empty composition: C(0, 0) = 1 and C(0, n) = 0 for n >= 1.
/// Each later row comes from the previous one by
///   C(k, n) = sum_{i=1}^{min(r, n-k+1)} b_i C(k-1, n-i),   k <= n <= rk.
class CountTable {
 public:
  static CountTable build(const WeightVector& b, std::size_t max_n, Exec exec = Exec::automatic);

  /// Wraps precomputed rows without recomputing them. rows[k][n] must exist
  /// for 0 <= k, n <= max_n. Used to feed the identity checkers arbitrary
  /// (possibly wrong) tables.
  static CountTable from_rows(const WeightVector& b, std::vector<std::vector<Count>> rows);

  const WeightVector& weights() const noexcept { return b_; }
  std::size_t max_n() const noexcept { return rows_.size() - 1; }

  /// C(k, n); zero when k > n or either index is past max_n.
  const Count& at(std::size_t k, std::size_t n) const;

  /// sum_k C(k, n) over all part counts.
  Count row_sum(std::size_t n) const;

 private:
  CountTable(WeightVector b, std::vector<std::vector<Count>> rows)
      : b_(std::move(b)), rows_(std::move(rows)) {}

  WeightVector b_;
  std::vector<std::vector<Count>> rows_;
};

/// C(k, n) by the part-count recursion, with C(0, 0) = 1 and C(k, n) = 0
/// whenever k > n or n > r*k.
Count count_compositions(const WeightVector& b, std::size_t k, std::size_t n,
                         Exec exec = Exec::automatic);

/// F_n, the number of all generalized compositions of n, with F_0 = 1:
///   F_n = b_1 F_{n-1} + ... + b_r F_{n-r}   (n >= r)
///   F_n = b_1 F_{n-1} + ... + b_n F_0       (n < r)
/// evaluated with a window of the last r values.
Count count_all(const WeightVector& b, std::size_t n);

/// F_0, ..., F_n in one pass of the same recurrence.
std::vector<Count> count_all_prefix(const WeightVector& b, std::size_t n);

/// F_n as sum_{k=ceil(n/r)}^{n} {k,r|b choose n-k}, using polynomial powers
/// only. Requires n >= 1.
Count count_all_via_coefficients(const WeightVector& b, std::size_t n, Exec exec = Exec::automatic);

/// binomial(k, j) by Pascal's rule; 0 for j > k.
Count binomial(std::size_t k, std::size_t j);

/// Rows 0..k_max of Pascal's triangle built by addition only.
std::vector<std::vector<Count>> pascal_triangle(std::size_t k_max);

/// sum_{i=ceil(n/2)}^{n} binomial(i, n-i), which is the Fibonacci number
/// F_{n+1} with F_1 = F_2 = 1. Requires n >= 1.
Count fibonacci_via_binomials(std::size_t n);

/// r-generalized Fibonacci number without leading zeros: the number of
/// compositions of m into parts <= r. r = 2 gives 1, 1, 2, 3, 5, ...
Count r_fibonacci(std::size_t r, std::size_t m);

/// sum_{k=ceil(n/r)}^{n} {k,r choose n-k}. Requires r, n >= 1.
Count r_fibonacci_via_coefficients(std::size_t r, std::size_t n, Exec exec = Exec::automatic);

}  // namespace gencomp
