#include "susyqm/eigensolver.hpp"
#include "susyqm/kernels.hpp"
#include "susyqm/spectral.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace susyqm;

const CsrMatrix& hamiltonian(int points) {
    static std::map<int, CsrMatrix> cache;
    auto it = cache.find(points);
    if (it == cache.end()) {
        const auto complex = build_discrete_complex(example3(1.0), uniform_grid(2, -8.0, 8.0, points));
        it = cache.emplace(points, complex.hamiltonian(1).matrix).first;
    }
    return it->second;
}

Eigen::MatrixXd block(Eigen::Index rows, Eigen::Index cols) {
    std::mt19937_64 rng(kDefaultSeed);
    std::normal_distribution<double> g;
    Eigen::MatrixXd x(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) x(i, j) = g(rng);
    }
    return x;
}

template <void (*Kernel)(const CsrMatrix&, const Eigen::VectorXd&, Eigen::VectorXd&)>
void bm_matvec(benchmark::State& state) {
    const auto& h = hamiltonian(static_cast<int>(state.range(0)));
    const Eigen::VectorXd x = block(h.cols(), 1).col(0);
    Eigen::VectorXd y(h.rows());
    for (auto _ : state) {
        Kernel(h, x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * h.nonZeros());
}

template <void (*Kernel)(const CsrMatrix&, const Eigen::MatrixXd&, Eigen::MatrixXd&)>
void bm_matmat(benchmark::State& state) {
    const auto& h = hamiltonian(static_cast<int>(state.range(0)));
    const Eigen::MatrixXd x = block(h.cols(), 16);
    Eigen::MatrixXd y(h.rows(), 16);
    for (auto _ : state) {
        Kernel(h, x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * h.nonZeros() * 16);
}

template <bool Parallel>
void bm_sample_w(benchmark::State& state) {
    const auto sp = example3(1.0);
    const auto grid = uniform_grid(2, -8.0, 8.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sample_w_half_grid(sp, grid, Parallel));
}

template <bool Parallel>
void bm_rep_matrices(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_rep_matrices(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2, Parallel));
}

} // namespace

BENCHMARK(bm_matvec<susyqm::csr_matvec_serial>)->Name("csr_matvec/serial")->Arg(128)->Arg(256);
BENCHMARK(bm_matvec<susyqm::csr_matvec_parallel>)->Name("csr_matvec/openmp")->Arg(128)->Arg(256);
BENCHMARK(bm_matmat<susyqm::csr_matmat_serial>)->Name("csr_matmat/serial")->Arg(128)->Arg(256);
BENCHMARK(bm_matmat<susyqm::csr_matmat_parallel>)->Name("csr_matmat/openmp")->Arg(128)->Arg(256);
BENCHMARK(bm_sample_w<false>)->Name("sample_w/serial")->Arg(256);
BENCHMARK(bm_sample_w<true>)->Name("sample_w/openmp")->Arg(256);
BENCHMARK(bm_rep_matrices<false>)->Name("rep_matrices/serial")->Arg(9);
BENCHMARK(bm_rep_matrices<true>)->Name("rep_matrices/openmp")->Arg(9);

BENCHMARK_MAIN();
