// Acceptance gate: one PASS/FAIL line per criterion, exact equality
// throughout, each with its wall-clock budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "gencomp/counting.hpp"
#include "gencomp/enumerate.hpp"
#include "gencomp/polyco.hpp"
#include "generators.hpp"

using namespace gencomp;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<std::string()> run;  // empty string on success, else the reason
};

struct Captured {
  int code;
  std::string out;
};

Captured run_cli(const std::string& args) {
  const std::string cmd = std::string(GENCOMP_CLI) + " " + args + " 2>/dev/null";
  Captured result{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string describe(const WeightVector& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b.weights()[i]);
  return s + ")";
}

std::string parts_coefficient() {
  const auto vectors = testing::all_weight_vectors(4, 3);
  if (vectors.size() != 4 + 16 + 64 + 256) return "wrong grid size";
  std::size_t checked = 0;
  for (const auto& b : vectors)
    for (std::size_t k = 1; k <= 8; ++k)
      for (std::size_t n = k; n <= b.size() * k; ++n) {
        ++checked;
        if (count_compositions(b, k, n) != weighted_polynomial_coefficient(b, k, static_cast<std::int64_t>(n - k)))
          return "mismatch at b=" + describe(b) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
      }
  std::cout << "    " << checked << " (b,k,n) points\n";
  return {};
}

std::string total_coefficient() {
  const auto vectors = testing::random_weight_vectors(50, 5, 4, 20240519u);
  for (const auto& b : vectors) {
    const auto totals = count_all_prefix(b, 40);
    for (std::size_t n = 1; n <= 40; ++n) {
      if (count_all(b, n) != totals[n]) return "window/prefix disagree at b=" + describe(b);
      if (count_all(b, n) != count_all_via_coefficients(b, n))
        return "mismatch at b=" + describe(b) + " n=" + std::to_string(n);
    }
  }
  std::cout << "    50 vectors x 40 totals\n";
  return {};
}

std::string oracle_equivalence() {
  for (const auto& b : testing::all_weight_vectors(3, 2))
    for (std::size_t n = 1; n <= 10; ++n) {
      if (count_by_enumeration(b, n) != count_all(b, n))
        return "total mismatch at b=" + describe(b) + " n=" + std::to_string(n);
      for (std::size_t k = 1; k <= n; ++k)
        if (count_by_enumeration(b, n, k) != count_compositions(b, k, n))
          return "per-k mismatch at b=" + describe(b) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
    }
  return {};
}

std::string binomial_and_fibonacci() {
  const WeightVector fib{1, 1};
  // Pascal's rule, built here independently of the library.
  std::vector<std::vector<Count>> pascal{{1}};
  for (std::size_t k = 1; k <= 20; ++k) {
    std::vector<Count> row(k + 1, Count{1});
    for (std::size_t j = 1; j < k; ++j) row[j] = pascal[k - 1][j - 1] + pascal[k - 1][j];
    pascal.push_back(row);
  }
  for (std::size_t k = 0; k <= 20; ++k)
    for (std::size_t n = 0; n <= k; ++n)
      if (count_compositions(fib, k, n + k) != pascal[k][n])
        return "C(k,n+k) != binomial(k,n) at k=" + std::to_string(k) + " n=" + std::to_string(n);
  for (std::size_t n = 1; n <= 30; ++n)
    if (fibonacci_via_binomials(n) != count_all(fib, n)) return "Fibonacci mismatch at n=" + std::to_string(n);
  // Two-term recurrence: F_11 with F_1 = F_2 = 1.
  Count a = 1, c = 1;
  for (int i = 3; i <= 11; ++i) {
    Count next = a + c;
    a = c;
    c = next;
  }
  if (c != 89 || fibonacci_via_binomials(10) != 89) return "spot value fibonacci_via_binomials(10) != 89";
  return {};
}

std::string r_fibonacci_corollary() {
  for (std::size_t r = 1; r <= 5; ++r)
    for (std::size_t n = 1; n <= 25; ++n) {
      Count sum = 0;
      for (std::size_t k = (n + r - 1) / r; k <= n; ++k)
        sum += polynomial_coefficient(k, r, static_cast<std::int64_t>(n - k));
      if (sum != count_all(ones(r), n)) return "mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n);
      if (r_fibonacci_via_coefficients(r, n) != sum) return "r_fibonacci_via_coefficients disagrees";
    }
  return {};
}

std::string big_integers() {
  const WeightVector fib{1, 1};
  const Count window = count_all(fib, 300);
  const Count coeffs = count_all_via_coefficients(fib, 300);
  const std::string digits = to_decimal(window);
  std::cout << "    F = " << digits << " (" << digits.size() << " digits)\n";
  if (window != coeffs) return "recurrence and coefficient sum disagree";
  if (digits.size() <= 60) return "only " + std::to_string(digits.size()) + " digits";
  // F_301, computed independently.
  if (digits != "359579325206583560961765665172189099052367214309267232255589801")
    return "value differs from the frozen F_301";
  return {};
}

std::string cli_contract() {
  const auto verify = run_cli("verify --weights 2,1,3 --n-max 20 --k-max 8");
  if (verify.code != 0) return "verify exited " + std::to_string(verify.code);
  const auto usage = run_cli("verify --weights 1,-2 --n-max 5");
  if (usage.code != 2) return "usage error exited " + std::to_string(usage.code);
  const auto first = run_cli("table --weights 1,1 --n-max 6 --format csv");
  const auto second = run_cli("table --weights 1,1 --n-max 6 --format csv");
  if (first.code != 0 || second.code != 0) return "table failed";
  if (first.out.empty() || first.out != second.out) return "table output not byte-identical";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "parts count equals weighted polynomial coefficient (r<=4, b_i<=3, k<=8)", 60, parts_coefficient},
      {2, "total equals coefficient sum (50 seeded vectors, r<=5, b_i<=4, n<=40)", 30, total_coefficient},
      {3, "enumeration oracle matches per-k and total counts (r<=3, b_i<=2, n<=10)", 60, oracle_equivalence},
      {4, "binomial specialization (k<=20) and Fibonacci-binomial sum (n<=30)", 5, binomial_and_fibonacci},
      {5, "r-Fibonacci equals polynomial coefficient sum (r<=5, n<=25)", 10, r_fibonacci_corollary},
      {6, "300th Fibonacci total: recurrence == coefficient sum, > 60 digits", 10, big_integers},
      {7, "CLI: verify exits 0, usage error exits 2, table output byte-stable", 10, cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (reason.empty() && secs > c.budget_seconds)
      reason = "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s";
    const bool ok = reason.empty();
    if (!ok) ++failed;
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                ok ? "" : " -- ", reason.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
