// Serial vs OpenMP timings for the scan kernels.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "krull/finite_field.hpp"
#include "krull/galois.hpp"
#include "krull/gfb.hpp"
#include "krull/profinite.hpp"

using namespace krull;

namespace {

double seconds(const std::function<void(Execution)>& f, Execution exec, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f(exec);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const std::string& name, int reps, const std::function<void(Execution)>& f) {
  f(Execution::serial);  // warm caches and lazy tables
  const double s = seconds(f, Execution::serial, reps);
  const double p = seconds(f, Execution::parallel, reps);
  std::printf("%-40s %10.4f %10.4f %7.2fx\n", name.c_str(), s, p, p > 0 ? s / p : 0.0);
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-40s %10s %10s %8s\n", "kernel", "serial s", "parallel s", "speedup");

  const auto b16 = standard_gfb(16);
  row("induced_group_topology Z/16", 3, [&](Execution e) { (void)induced_group_topology(b16, e); });

  const auto b12 = standard_gfb(12);
  const auto t12 = induced_group_topology(b12);
  row("verify_topological_group Z/12", 3,
      [&](Execution e) { (void)verify_topological_group(b12.group(), t12, e); });

  row("compactness_check 360", 3, [](Execution e) { (void)compactness_check(360, Tower::additive, e); });
  row("compactness_check 360 units", 3, [](Execution e) { (void)compactness_check(360, Tower::units, e); });

  const FiniteField f12(2, 12);
  const PrimeField f2(2);
  // Roots: the copy of F_64 inside F_{2^12}.
  const auto xq = FpPolynomial::monomial(f2, 1, 64) - FpPolynomial::x(f2);
  row("roots_in_field X^64 - X over F_2^12", 3, [&](Execution e) { (void)roots_in_field(xq, f12, e); });

  const FrobeniusGroup g(2, 12);
  const auto h = fixing_subgroup(g, FiniteSubfield{4});
  row("fixed_field 4Z/12 in F_2^12", 3, [&](Execution e) { (void)fixed_field(g, h, e); });

  const auto sys = InverseSystem::reduction(720);
  row("check_inverse_system Z/720", 3, [&](Execution e) { (void)check_inverse_system(sys, e); });
}
