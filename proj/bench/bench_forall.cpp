// Times universal quantification over a batch of generated predicates four
// ways: epsilon search and brute force over representatives, each serial and
// OpenMP-parallel. All four must agree.
//
// Usage: ninf_bench [count] [max_modulus] [seed]

#include "ninf/dsl.hpp"
#include "ninf/oracle.hpp"
#include "support/generators.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ninf;

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
  const int count = argc > 1 ? std::atoi(argv[1]) : 20000;
  const Index max_modulus = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 32;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;

  testing::Rng rng(seed);
  testing::ExprGen gen(rng, max_modulus, 6);
  std::vector<Predicate> qs;
  std::vector<Index> moduli;
  for (int i = 0; i < count; ++i) {
    const dsl::Expr e = gen();
    qs.push_back(dsl::compile(e));
    moduli.push_back(dsl::modulus(e));
  }

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif

  std::vector<std::uint8_t> a, b, c, d;
  const double t_search = time_ms([&] { a = oracle::search_forall_batch(qs); });
  const double t_search_par = time_ms([&] { b = oracle::search_forall_batch_parallel(qs); });
  const double t_brute = time_ms([&] { c = oracle::brute_force_forall_batch(qs, moduli); });
  const double t_brute_par = time_ms([&] { d = oracle::brute_force_forall_batch_parallel(qs, moduli); });

  std::cout << count << " predicates, modulus <= " << max_modulus << ", " << threads << " thread(s)\n"
            << std::fixed << std::setprecision(2) << std::setw(28) << std::left << "epsilon search (serial)"
            << t_search << " ms\n"
            << std::setw(28) << "epsilon search (parallel)" << t_search_par << " ms\n"
            << std::setw(28) << "brute force (serial)" << t_brute << " ms\n"
            << std::setw(28) << "brute force (parallel)" << t_brute_par << " ms\n";

  if (a != b || a != c || a != d) {
    std::cerr << "kernels disagree\n";
    return 1;
  }
  return 0;
}
