#include "gencomp/polyco.hpp"

#include <stdexcept>

namespace gencomp {
namespace {

void normalize(std::vector<Count>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) coeffs.emplace_back(0);
}

}  // namespace

DensePoly::DensePoly(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c < 0) throw std::invalid_argument("negative polynomial coefficient");
  normalize(coeffs_);
}

DensePoly::DensePoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) {
    if (c < 0) throw std::invalid_argument("negative polynomial coefficient");
    coeffs_.emplace_back(c);
  }
  normalize(coeffs_);
}

Count DensePoly::coeff(std::int64_t i) const {
  if (i < 0 || static_cast<std::uint64_t>(i) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Count DensePoly::coefficient_sum() const {
  Count s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

DensePoly from_weights(const WeightVector& b) {
  std::vector<Count> coeffs;
  coeffs.reserve(b.size());
  for (std::uint64_t w : b.weights()) coeffs.emplace_back(static_cast<unsigned long>(w));
  return DensePoly(std::move(coeffs));
}

DensePoly poly_mul(const DensePoly& a, const DensePoly& c, Exec exec) {
  if (a.is_zero() || c.is_zero()) return DensePoly{};
  std::vector<Count> out(a.coeffs().size() + c.coeffs().size() - 1);
  kernels::convolve(a.coeffs(), c.coeffs(), out, exec);
  // Leading coefficients are nonzero and nonnegative, so out is normalized.
  return DensePoly(std::move(out));
}

DensePoly poly_pow(const DensePoly& base, std::size_t k, Exec exec) {
  if (k == 0) return DensePoly{1};
  DensePoly result = base;
  for (std::size_t j = 1; j < k; ++j) result = poly_mul(result, base, exec);
  return result;
}

Count weighted_polynomial_coefficient(const WeightVector& b, std::size_t k, std::int64_t i) {
  if (k == 0) throw std::domain_error("weighted polynomial coefficient needs k >= 1");
  const auto top = static_cast<std::int64_t>((b.size() - 1) * k);
  if (i < 0 || i > top) return 0;
  return poly_pow(from_weights(b), k).coeff(i);
}

Count polynomial_coefficient(std::size_t k, std::size_t r, std::int64_t i) {
  if (r == 0) throw std::domain_error("polynomial coefficient needs r >= 1");
  return weighted_polynomial_coefficient(ones(r), k, i);
}

}  // namespace gencomp
