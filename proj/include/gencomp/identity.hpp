#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gencomp/core.hpp"
#include "gencomp/count.hpp"
#include "gencomp/counting.hpp"

namespace gencomp {

/// The identities relating part counts, totals and polynomial coefficients
/// that can be checked over a finite grid.
enum class Identity {
  parts_coefficient,  // C(k, n) = {k,r|b choose n-k},  1 <= k <= k_max, k <= n <= rk
  zero_rules,         // C(k, n) = 0 for k > n or n > rk
  row_sum,            // sum_k C(k, n) = F_n
  total_coefficient,  // F_n = sum_{k=ceil(n/r)}^{n} {k,r|b choose n-k}
  binomial,           // b = (1,1): C(k, n+k) = binomial(k, n), 0 <= n <= k <= k_max
  fibonacci_binomial, // b = (1,1): F_n = sum_{i=ceil(n/2)}^{n} binomial(i, n-i)
  r_fibonacci,        // b = (1,...,1): r-Fibonacci(n) = sum_k {k,r choose n-k}
};

inline constexpr std::array kAllIdentities = {
    Identity::parts_coefficient, Identity::zero_rules,         Identity::row_sum,
    Identity::total_coefficient, Identity::binomial,           Identity::fibonacci_binomial,
    Identity::r_fibonacci,
};

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(std::string_view name)
      : std::invalid_argument("unknown identity '" + std::string(name) + "'") {}
};

std::string_view identity_name(Identity id);

/// Throws UnknownIdentity.
Identity identity_from_name(std::string_view name);

/// Bounds for one identity check. binomial and fibonacci_binomial always use
/// b = (1,1); r_fibonacci uses the all-ones vector of length b.size().
struct IdentityGrid {
  WeightVector b{1};
  std::size_t n_max = 20;
  std::size_t k_max = 8;
};

struct IdentityFailure {
  std::map<std::string, std::size_t> parameters;
  Count left;
  Count right;
};

struct IdentityReport {
  std::string identity;
  std::string grid;
  std::size_t checked = 0;
  std::vector<IdentityFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Evaluates both sides of the identity at every grid point. Grid points are
/// evaluated concurrently; failures are listed in grid order.
IdentityReport check_identity(Identity id, const IdentityGrid& grid);
IdentityReport check_identity(std::string_view name, const IdentityGrid& grid);

/// parts_coefficient with the left side read from a caller-supplied table,
/// for every 1 <= k <= k_max and k <= n <= min(rk, table.max_n()).
IdentityReport check_parts_coefficient(const CountTable& table, std::size_t k_max);

/// Whether the identity says anything specific about b: the general ones
/// always apply, the specializations only to their weight vectors.
bool applies_to(Identity id, const WeightVector& b);

}  // namespace gencomp
