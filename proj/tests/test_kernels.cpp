#include "susyqm/errors.hpp"
#include "susyqm/kernels.hpp"
#include "susyqm/spectral.hpp"

#include <doctest.h>

#include <random>

using namespace susyqm;

namespace {

CsrMatrix random_sparse(int rows, int cols, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0), p(0.0, 1.0);
    std::vector<Eigen::Triplet<double, int>> t;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (p(rng) < density) t.emplace_back(i, j, u(rng));
        }
    }
    CsrMatrix m(rows, cols);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

} // namespace

TEST_CASE("OpenMP matvec and matmat are bitwise equal to the serial kernels") {
    const auto a = random_sparse(700, 500, 0.02, 1);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    Eigen::MatrixXd x(500, 7);
    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = g(rng);
    Eigen::VectorXd ys, yp;
    csr_matvec_serial(a, x.col(0), ys);
    csr_matvec_parallel(a, x.col(0), yp);
    CHECK((ys.array() == yp.array()).all());
    CHECK((ys - a * x.col(0)).norm() < 1e-12);
    Eigen::MatrixXd ms, mp;
    csr_matmat_serial(a, x, ms);
    csr_matmat_parallel(a, x, mp);
    CHECK((ms.array() == mp.array()).all());
    CHECK((ms - a * x).norm() < 1e-12);
}

TEST_CASE("sampling is order independent and reports the first failure") {
    const auto f = [](std::size_t i) { return std::sin(0.1 * static_cast<double>(i)); };
    const auto s = sample_serial(10000, f);
    const auto p = sample_parallel(10000, f);
    CHECK(s == p);
    const auto bad = [](std::size_t i) -> double {
        if (i == 4000 || i == 9000) throw Error(ErrorCode::SingularArgument, "at " + std::to_string(i));
        return 0.0;
    };
    try {
        sample_parallel(10000, bad);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()) == "singular-argument: at 4000");
    }
}

TEST_CASE("superpotential sampling on the grid matches between serial and OpenMP") {
    const auto sp = example3(1.0);
    const auto g = uniform_grid(2, -8.0, 8.0, 96);
    CHECK(sample_w_half_grid(sp, g, true) == sample_w_half_grid(sp, g, false));
    const auto a = build_discrete_complex(sp, g, true);
    const auto b = build_discrete_complex(sp, g, false);
    for (std::size_t m = 0; m < a.plus.size(); ++m) {
        const CsrMatrix d = a.plus[m].matrix - b.plus[m].matrix;
        CHECK(d.norm() == 0.0);
    }
}
