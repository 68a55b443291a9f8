// Compares the serial and OpenMP convolution kernels behind expand_in_t.
#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jetforge/series.hpp"

using namespace jetforge;

namespace {

Poly dense_poly(std::mt19937& rng, const FieldSpec& field, int nvars, int degree) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> var(1, nvars);
    Poly p = Poly::zero(field);
    for (int t = 0; t < 40; ++t) {
        Monomial m;
        for (int k = 0; k < degree; ++k) m = m * Monomial::var(JetVar{0, var(rng)});
        int c = coeff(rng);
        if (c == 0) c = 1;
        p += Poly::term(field, Rational(c), m);
    }
    return p;
}

double time_expansion(const Poly& f, int m, SeriesKernel kernel, std::vector<Poly>& out) {
    auto start = std::chrono::steady_clock::now();
    out = expand_in_t(f, m, kernel);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main() {
    std::mt19937 rng(7);
    FieldSpec field = FieldSpec::prime_field(10007);
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#endif
    std::printf("%-8s %-6s %12s %12s %8s\n", "degree", "m", "serial(s)", "parallel(s)",
                "speedup");
    for (int degree : {4, 5, 6}) {
        for (int m : {6, 8, 10}) {
            Poly f = dense_poly(rng, field, 3, degree);
            std::vector<Poly> serial, parallel;
            double ts = time_expansion(f, m, SeriesKernel::Serial, serial);
            double tp = time_expansion(f, m, SeriesKernel::Parallel, parallel);
            if (serial != parallel) {
                std::fprintf(stderr, "kernel mismatch at degree %d, m %d\n", degree, m);
                return 1;
            }
            std::printf("%-8d %-6d %12.4f %12.4f %7.2fx\n", degree, m, ts, tp,
                        tp > 0 ? ts / tp : 0.0);
        }
    }
    return 0;
}
