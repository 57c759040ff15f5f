#include "gencomp/identity.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>

#include "gencomp/polyco.hpp"

namespace gencomp {
namespace {

constexpr std::pair<Identity, std::string_view> kNames[] = {
    {Identity::parts_coefficient, "parts-coefficient"},
    {Identity::zero_rules, "zero-rules"},
    {Identity::row_sum, "row-sum"},
    {Identity::total_coefficient, "total-coefficient"},
    {Identity::binomial, "binomial"},
    {Identity::fibonacci_binomial, "fibonacci-binomial"},
    {Identity::r_fibonacci, "r-fibonacci"},
};

using Params = std::map<std::string, std::size_t>;

struct Point {
  Params params;
  std::function<std::pair<Count, Count>()> sides;
};

std::string describe(const WeightVector& b) {
  std::ostringstream os;
  os << "b=(";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b.weights()[i];
  os << ")";
  return os.str();
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Grid points are independent; each slot of `outcome` is written by one
// thread and the failures are then gathered in grid order.
IdentityReport evaluate(Identity id, std::string grid, const std::vector<Point>& points) {
  const auto len = static_cast<std::int64_t>(points.size());
  std::vector<std::optional<IdentityFailure>> outcome(points.size());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < len; ++p) {
    auto [left, right] = points[p].sides();
    if (left != right) outcome[p] = IdentityFailure{points[p].params, std::move(left), std::move(right)};
  }

  IdentityReport report{std::string(identity_name(id)), std::move(grid), points.size(), {}};
  for (auto& o : outcome)
    if (o) report.failures.push_back(std::move(*o));
  return report;
}

// powers[k] = base^k for 1 <= k <= k_max; powers[0] is unused.
std::vector<DensePoly> power_run(const WeightVector& b, std::size_t k_max) {
  std::vector<DensePoly> powers(k_max + 1);
  if (k_max == 0) return powers;
  PowerSequence seq(from_weights(b));
  powers[1] = seq.current();
  for (std::size_t k = 2; k <= k_max; ++k) {
    seq.advance();
    powers[k] = seq.current();
  }
  return powers;
}

std::vector<Point> parts_coefficient_points(std::shared_ptr<const CountTable> table,
                                            std::shared_ptr<const std::vector<DensePoly>> powers,
                                            std::size_t k_max, std::size_t n_cap) {
  const std::size_t r = table->weights().size();
  std::vector<Point> points;
  for (std::size_t k = 1; k <= k_max; ++k)
    for (std::size_t n = k; n <= std::min(r * k, n_cap); ++n)
      points.push_back({{{"k", k}, {"n", n}}, [=] {
                          return std::pair{Count(table->at(k, n)),
                                           (*powers)[k].coeff(static_cast<std::int64_t>(n - k))};
                        }});
  return points;
}

// sum_{k=ceil(n/r)}^{n} powers[k][n-k]
Count coefficient_sum(const std::vector<DensePoly>& powers, std::size_t r, std::size_t n) {
  Count sum = 0;
  for (std::size_t k = ceil_div(n, r); k <= n; ++k)
    sum += powers[k].coeff(static_cast<std::int64_t>(n - k));
  return sum;
}

IdentityReport totals_against_coefficients(Identity id, const WeightVector& b, std::size_t n_max) {
  auto totals = std::make_shared<const std::vector<Count>>(count_all_prefix(b, n_max));
  auto powers = std::make_shared<const std::vector<DensePoly>>(power_run(b, n_max));
  const std::size_t r = b.size();
  std::vector<Point> points;
  for (std::size_t n = 1; n <= n_max; ++n)
    points.push_back({{{"n", n}}, [=] {
                        return std::pair{Count((*totals)[n]), coefficient_sum(*powers, r, n)};
                      }});
  return evaluate(id, describe(b) + " 1<=n<=" + std::to_string(n_max), points);
}

}  // namespace

std::string_view identity_name(Identity id) {
  for (const auto& [value, name] : kNames)
    if (value == id) return name;
  return "unknown";
}

Identity identity_from_name(std::string_view name) {
  for (const auto& [value, known] : kNames)
    if (known == name) return value;
  throw UnknownIdentity(name);
}

bool applies_to(Identity id, const WeightVector& b) {
  switch (id) {
    case Identity::binomial:
    case Identity::fibonacci_binomial:
      return b == WeightVector{1, 1};
    case Identity::r_fibonacci:
      return b.all_ones();
    default:
      return true;
  }
}

IdentityReport check_parts_coefficient(const CountTable& table, std::size_t k_max) {
  auto shared = std::make_shared<const CountTable>(table);
  auto powers = std::make_shared<const std::vector<DensePoly>>(power_run(table.weights(), k_max));
  return evaluate(Identity::parts_coefficient,
                  describe(table.weights()) + " 1<=k<=" + std::to_string(k_max) + " k<=n<=rk",
                  parts_coefficient_points(shared, powers, k_max, table.max_n()));
}

IdentityReport check_identity(Identity id, const IdentityGrid& grid) {
  const WeightVector& b = grid.b;
  const std::size_t r = b.size();
  switch (id) {
    case Identity::parts_coefficient:
      return check_parts_coefficient(CountTable::build(b, r * grid.k_max), grid.k_max);

    case Identity::zero_rules: {
      const std::size_t n_top = r * grid.k_max + 1;
      auto table = std::make_shared<const CountTable>(CountTable::build(b, n_top));
      std::vector<Point> points;
      for (std::size_t k = 0; k <= grid.k_max; ++k)
        for (std::size_t n = 0; n <= n_top; ++n)
          if (k > n || n > r * k)
            points.push_back({{{"k", k}, {"n", n}},
                              [=] { return std::pair{Count(table->at(k, n)), Count(0)}; }});
      return evaluate(id, describe(b) + " 0<=k<=" + std::to_string(grid.k_max) + " 0<=n<=" +
                              std::to_string(n_top) + " (k>n or n>rk)",
                      points);
    }

    case Identity::row_sum: {
      auto table = std::make_shared<const CountTable>(CountTable::build(b, grid.n_max));
      auto totals = std::make_shared<const std::vector<Count>>(count_all_prefix(b, grid.n_max));
      std::vector<Point> points;
      for (std::size_t n = 1; n <= grid.n_max; ++n)
        points.push_back({{{"n", n}}, [=] { return std::pair{table->row_sum(n), Count((*totals)[n])}; }});
      return evaluate(id, describe(b) + " 1<=n<=" + std::to_string(grid.n_max), points);
    }

    case Identity::total_coefficient:
      return totals_against_coefficients(id, b, grid.n_max);

    case Identity::binomial: {
      const WeightVector fib{1, 1};
      auto table = std::make_shared<const CountTable>(CountTable::build(fib, 2 * grid.k_max));
      auto pascal =
          std::make_shared<const std::vector<std::vector<Count>>>(pascal_triangle(grid.k_max));
      std::vector<Point> points;
      for (std::size_t k = 1; k <= grid.k_max; ++k)
        for (std::size_t n = 0; n <= k; ++n)
          points.push_back({{{"k", k}, {"n", n}},
                            [=] { return std::pair{Count(table->at(k, n + k)), Count((*pascal)[k][n])}; }});
      return evaluate(id, "b=(1,1) 0<=n<=k<=" + std::to_string(grid.k_max), points);
    }

    case Identity::fibonacci_binomial: {
      auto totals =
          std::make_shared<const std::vector<Count>>(count_all_prefix(WeightVector{1, 1}, grid.n_max));
      std::vector<Point> points;
      for (std::size_t n = 1; n <= grid.n_max; ++n)
        points.push_back(
            {{{"n", n}}, [=] { return std::pair{fibonacci_via_binomials(n), Count((*totals)[n])}; }});
      return evaluate(id, "b=(1,1) 1<=n<=" + std::to_string(grid.n_max), points);
    }

    case Identity::r_fibonacci:
      return totals_against_coefficients(id, ones(r), grid.n_max);
  }
  throw UnknownIdentity(std::to_string(static_cast<int>(id)));
}

IdentityReport check_identity(std::string_view name, const IdentityGrid& grid) {
  return check_identity(identity_from_name(name), grid);
}

}  // namespace gencomp
