#include "gencomp/counting.hpp"

#include <stdexcept>

#include "gencomp/polyco.hpp"

namespace gencomp {
namespace {

const Count kZero = 0;

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

CountTable CountTable::build(const WeightVector& b, std::size_t max_n, Exec exec) {
  std::vector<std::vector<Count>> rows(max_n + 1, std::vector<Count>(max_n + 1));
  rows[0][0] = 1;
  for (std::size_t k = 1; k <= max_n; ++k)
    kernels::composition_row(b.weights(), k, rows[k - 1], rows[k], exec);
  return CountTable(b, std::move(rows));
}

CountTable CountTable::from_rows(const WeightVector& b, std::vector<std::vector<Count>> rows) {
  if (rows.empty()) throw std::invalid_argument("count table needs at least row 0");
  for (const auto& row : rows)
    if (row.size() != rows.size()) throw std::invalid_argument("count table must be square");
  return CountTable(b, std::move(rows));
}

const Count& CountTable::at(std::size_t k, std::size_t n) const {
  if (k >= rows_.size() || n >= rows_.size()) return kZero;
  return rows_[k][n];
}

Count CountTable::row_sum(std::size_t n) const {
  Count s = 0;
  for (std::size_t k = 0; k <= n && k < rows_.size(); ++k) s += at(k, n);
  return s;
}

Count count_compositions(const WeightVector& b, std::size_t k, std::size_t n, Exec exec) {
  if (k == 0) return n == 0 ? 1 : 0;
  if (k > n || n > b.size() * k) return 0;
  std::vector<Count> prev(n + 1), next(n + 1);
  prev[0] = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    kernels::composition_row(b.weights(), j, prev, next, exec);
    std::swap(prev, next);
  }
  return prev[n];
}

std::vector<Count> count_all_prefix(const WeightVector& b, std::size_t n) {
  const auto w = b.weights();
  const std::size_t r = w.size();
  std::vector<Count> f(n + 1);
  f[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    // Full window of r terms once m >= r; before that it stops at b_m F_0.
    const std::size_t window = m >= r ? r : m;
    Count acc = 0;
    for (std::size_t i = 1; i <= window; ++i)
      if (w[i - 1] != 0) acc += f[m - i] * w[i - 1];
    f[m] = std::move(acc);
  }
  return f;
}

Count count_all(const WeightVector& b, std::size_t n) {
  const auto w = b.weights();
  const std::size_t r = w.size();
  // ring[j % r] holds F_j for the last r indices j.
  std::vector<Count> ring(r);
  ring[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    const std::size_t window = m >= r ? r : m;
    Count acc = 0;
    for (std::size_t i = 1; i <= window; ++i)
      if (w[i - 1] != 0) acc += ring[(m - i) % r] * w[i - 1];
    ring[m % r] = std::move(acc);
  }
  return ring[n % r];
}

Count count_all_via_coefficients(const WeightVector& b, std::size_t n, Exec exec) {
  if (n == 0) throw std::domain_error("coefficient sum for totals needs n >= 1");
  const std::size_t lo = ceil_div(n, b.size());
  Count sum = 0;
  PowerSequence powers(from_weights(b), exec);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) powers.advance();
    if (k >= lo) sum += powers.current().coeff(static_cast<std::int64_t>(n - k));
  }
  return sum;
}

std::vector<std::vector<Count>> pascal_triangle(std::size_t k_max) {
  std::vector<std::vector<Count>> rows(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    rows[k].assign(k + 1, Count{1});
    for (std::size_t j = 1; j < k; ++j) rows[k][j] = rows[k - 1][j] + rows[k - 1][j - 1];
  }
  return rows;
}

Count binomial(std::size_t k, std::size_t j) {
  if (j > k) return 0;
  return pascal_triangle(k)[k][j];
}

Count fibonacci_via_binomials(std::size_t n) {
  if (n == 0) throw std::domain_error("fibonacci_via_binomials needs n >= 1");
  const auto pascal = pascal_triangle(n);
  Count sum = 0;
  for (std::size_t i = ceil_div(n, 2); i <= n; ++i) sum += pascal[i][n - i];
  return sum;
}

Count r_fibonacci(std::size_t r, std::size_t m) {
  if (r == 0) throw std::domain_error("r_fibonacci needs r >= 1");
  return count_all(ones(r), m);
}

Count r_fibonacci_via_coefficients(std::size_t r, std::size_t n, Exec exec) {
  if (r == 0) throw std::domain_error("r_fibonacci_via_coefficients needs r >= 1");
  return count_all_via_coefficients(ones(r), n, exec);
}

}  // namespace gencomp
