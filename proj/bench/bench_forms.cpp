// Benchmarks the form-matrix fill kernels: serial reference vs the OpenMP
// row-parallel version, on harmonic family instances of growing quotient
// dimension. Both kernels must produce identical matrices; the benchmark
// asserts that before reporting timings.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "conjcount/counting.hpp"

using namespace conjcount;

namespace {

double time_fill(const TraceTable& traces, const std::vector<GenPoly>& elems,
                 const GenPoly& xi, FillMode mode, GMatrix& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = gram_matrix(traces, elems, xi, /*hermitian_star=*/true, mode);
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

double time_reference(const TraceTable& traces, const std::vector<GenPoly>& elems,
                      const GenPoly& xi, GMatrix& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = gram_matrix_reference(traces, elems, xi, /*hermitian_star=*/true);
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  unsigned max_n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 6;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run the serial kernel\n");
#endif
  std::printf("%4s %8s %14s %12s %14s %10s\n", "n", "dim", "reference (ms)",
              "serial (ms)", "parallel (ms)", "speedup");

  for (unsigned n = 2; n <= max_n; ++n) {
    // A harmonic instance with m = n - 1 (the staircase that makes the
    // reduce-then-trace reference expensive); quotient dimension n^2.
    GenPoly h = GenPoly::variable_w(1, 0, n) + GenPoly::variable_w(1, 0) +
                GaussianRational(Rational(1), Rational(1)) *
                    GenPoly::variable_z(1, 0, n - 1) +
                GenPoly::constant(1, GaussianRational(Rational(1, 2)));
    if (n == 2)
      h += GenPoly::variable_z(1, 0);
    ConjSystem sys{{h}, 1};
    GroebnerBasis G = buchberger(build_conjugate_ideal(sys));
    QuotientBasis basis = standard_monomials(G);
    TraceTable traces(G, basis);
    std::vector<GenPoly> elems;
    for (const auto& m : basis.monomials)
      elems.push_back(GenPoly::term(1, m, 1));
    GenPoly xi = GenPoly::constant(1, 1);

    GMatrix reference_out, serial_out, parallel_out;
    // The reference fill reduces a high-degree product per entry; skip it
    // past n = 4 where it takes minutes.
    double t_reference = n <= 4
        ? time_reference(traces, elems, xi, reference_out)
        : -1.0;
    double t_serial = time_fill(traces, elems, xi, FillMode::Serial, serial_out);
    double t_parallel =
        time_fill(traces, elems, xi, FillMode::Parallel, parallel_out);
    if (serial_out != parallel_out ||
        (t_reference >= 0 && reference_out != serial_out)) {
      std::fprintf(stderr, "kernel mismatch at n = %u\n", n);
      return 1;
    }
    if (t_reference >= 0)
      std::printf("%4u %8zu %14.2f %12.2f %14.2f %9.2fx\n", n, basis.dimension(),
                  t_reference, t_serial, t_parallel, t_serial / t_parallel);
    else
      std::printf("%4u %8zu %14s %12.2f %14.2f %9.2fx\n", n, basis.dimension(),
                  "-", t_serial, t_parallel, t_serial / t_parallel);
  }
  return 0;
}
