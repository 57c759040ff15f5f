// Serial reference vs OpenMP kernels on polynomial powers and part-count
// tables. Usage: gencomp_bench [size] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include <omp.h>

#include "gencomp/counting.hpp"
#include "gencomp/polyco.hpp"

namespace {

using gencomp::Exec;

template <class F>
double best_ms(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::cout << name << "\n  serial   " << serial << " ms\n  parallel " << parallel
            << " ms\n  speedup  " << serial / parallel << (same ? "" : "  MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 400;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::cout << "threads " << omp_get_max_threads() << ", size " << size << '\n';

  const gencomp::WeightVector b{2, 1, 3, 1};
  const auto base = gencomp::from_weights(b);

  gencomp::DensePoly ps, pp;
  const double pow_serial = best_ms(repeats, [&] { ps = gencomp::poly_pow(base, size, Exec::serial); });
  const double pow_parallel = best_ms(repeats, [&] { pp = gencomp::poly_pow(base, size, Exec::parallel); });
  report("poly_pow (2+x+3x^2+x^3)^size", pow_serial, pow_parallel, ps == pp);

  const auto big = gencomp::poly_pow(base, size / 4, Exec::parallel);
  gencomp::DensePoly ms, mp;
  const double mul_serial = best_ms(repeats, [&] { ms = gencomp::poly_mul(big, big, Exec::serial); });
  const double mul_parallel = best_ms(repeats, [&] { mp = gencomp::poly_mul(big, big, Exec::parallel); });
  report("poly_mul square of degree 3*size/4", mul_serial, mul_parallel, ms == mp);

  bool same = true;
  const double table_serial = best_ms(repeats, [&] { (void)gencomp::CountTable::build(b, size, Exec::serial); });
  const double table_parallel =
      best_ms(repeats, [&] { (void)gencomp::CountTable::build(b, size, Exec::parallel); });
  {
    auto ts = gencomp::CountTable::build(b, size / 4, Exec::serial);
    auto tp = gencomp::CountTable::build(b, size / 4, Exec::parallel);
    for (std::size_t k = 0; k <= size / 4; ++k)
      for (std::size_t n = 0; n <= size / 4; ++n) same = same && ts.at(k, n) == tp.at(k, n);
  }
  report("CountTable::build up to size", table_serial, table_parallel, same);
  return 0;
}
