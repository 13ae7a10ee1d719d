// Compares the OpenMP kernels against their serial reference versions.
#include <chrono>
#include <cstdio>

#include "ekr/matrix.hpp"
#include "ekr/operators.hpp"
#include "ekr/spectra.hpp"
#include "ekr/verifier.hpp"

using namespace ekr;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_spectrum(int n) {
    auto poly = polytope(n, PolytopeKind::setwise_strip);
    auto pt = interior_sample(poly);
    auto w = setwise_weight_solution(n, pt.first, pt.second);

    auto t0 = std::chrono::steady_clock::now();
    auto par = full_spectrum(w);
    double t_par = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto ser = full_spectrum_serial(w);
    double t_ser = ms_since(t0);

    bool agree = par.rows.size() == ser.rows.size();
    for (size_t i = 0; agree && i < par.rows.size(); ++i)
        agree = par.rows[i].lambda == ser.rows[i].lambda &&
                par.rows[i].eigenvalue == ser.rows[i].eigenvalue;
    std::printf("full_spectrum n=%d: omp %.1f ms, serial %.1f ms, speedup %.2fx, %s\n",
                n, t_par, t_ser, t_ser / t_par, agree ? "agree" : "MISMATCH");
}

void bench_matmul(int n) {
    auto e1 = module_operator(n, Partition{n - 1, 1});
    auto e2 = module_operator(n, Partition{n - 2, 2});

    auto t0 = std::chrono::steady_clock::now();
    auto par = matmul(e1, e2);
    double t_par = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto ser = matmul_serial(e1, e2);
    double t_ser = ms_since(t0);

    std::printf("matmul %dx%d (n=%d): omp %.1f ms, serial %.1f ms, speedup %.2fx, %s\n",
                par.rows(), par.cols(), n, t_par, t_ser, t_ser / t_par,
                par == ser ? "agree" : "MISMATCH");
}

}  // namespace

int main() {
    bench_spectrum(14);
    bench_spectrum(16);
    bench_matmul(5);
    return 0;
}
