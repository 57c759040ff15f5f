#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gencomp/core.hpp"
#include "gencomp/count.hpp"
#include "gencomp/kernels.hpp"

namespace gencomp {

/// Dense univariate polynomial with Count coefficients, coeffs()[i] being the
/// coefficient of x^i. Always normalized: no trailing zero coefficient except
/// in the zero polynomial, which is stored as [0].
class DensePoly {
 public:
  DensePoly() : coeffs_{Count{0}} {}
  explicit DensePoly(std::vector<Count> coeffs);
  DensePoly(std::initializer_list<long> coeffs);

  std::span<const Count> coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// Coefficient of x^i; zero for i < 0 or i > degree().
  Count coeff(std::int64_t i) const;

  /// Value at x = 1.
  Count coefficient_sum() const;

  bool operator==(const DensePoly& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<Count> coeffs_;
};

/// b_1 + b_2 x + ... + b_r x^(r-1).
DensePoly from_weights(const WeightVector& b);

DensePoly poly_mul(const DensePoly& a, const DensePoly& c, Exec exec = Exec::automatic);

/// base^k by k-1 successive multiplications; base^0 = [1].
DensePoly poly_pow(const DensePoly& base, std::size_t k, Exec exec = Exec::automatic);

/// Coefficient of x^i in (b_1 + b_2 x + ... + b_r x^(r-1))^k, and 0 for i
/// outside [0, (r-1)k]. Requires k >= 1.
Count weighted_polynomial_coefficient(const WeightVector& b, std::size_t k, std::int64_t i);

/// All-ones case of weighted_polynomial_coefficient: coefficient of x^i in
/// (1 + x + ... + x^(r-1))^k.
Count polynomial_coefficient(std::size_t k, std::size_t r, std::int64_t i);

/// Successive powers base^1, base^2, ... computed one multiplication at a
/// time, for callers that need a whole run of exponents.
class PowerSequence {
 public:
  explicit PowerSequence(DensePoly base, Exec exec = Exec::automatic)
      : base_(std::move(base)), current_(base_), exponent_(1), exec_(exec) {}

  std::size_t exponent() const noexcept { return exponent_; }
  const DensePoly& current() const noexcept { return current_; }
  void advance() {
    current_ = poly_mul(current_, base_, exec_);
    ++exponent_;
  }

 private:
  DensePoly base_;
  DensePoly current_;
  std::size_t exponent_;
  Exec exec_;
};

}  // namespace gencomp
