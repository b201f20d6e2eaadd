#include "oracles.hpp"

#include "susyqm/eigensolver.hpp"
#include "susyqm/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace susyqm;

namespace {

// -1/2 Laplacian on an n x n Dirichlet box.
CsrMatrix box(int n, double h) {
    std::vector<Eigen::Triplet<double, int>> t;
    const auto id = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            t.emplace_back(id(i, j), id(i, j), 2.0 / (h * h));
            if (i > 0) t.emplace_back(id(i, j), id(i - 1, j), -0.5 / (h * h));
            if (i + 1 < n) t.emplace_back(id(i, j), id(i + 1, j), -0.5 / (h * h));
            if (j > 0) t.emplace_back(id(i, j), id(i, j - 1), -0.5 / (h * h));
            if (j + 1 < n) t.emplace_back(id(i, j), id(i, j + 1), -0.5 / (h * h));
        }
    }
    CsrMatrix m(n * n, n * n);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

std::vector<double> expected_box(int n, double h, std::size_t k) {
    auto l = oracle::box_laplacian_levels(n, h);
    for (auto& v : l) v *= 0.5;
    return oracle::lowest_sums({l, l}, k);
}

} // namespace

TEST_CASE("dense path reproduces the discrete particle-in-a-box levels") {
    const int n = 20;
    const double h = 1.0 / (n + 1);
    const auto r = eigen_lowest(box(n, h), 8);
    CHECK(r.dense);
    const auto e = expected_box(n, h, 8);
    for (int i = 0; i < 8; ++i) CHECK(std::abs(r.values(i) - e[static_cast<std::size_t>(i)]) < 1e-9 * e.back());
}

TEST_CASE("iterative path agrees with the exact levels, including degeneracies") {
    const int n = 90;
    const double h = 1.0 / (n + 1);
    const auto m = box(n, h);
    const auto r = eigen_lowest(m, 10);
    CHECK_FALSE(r.dense);
    const auto e = expected_box(n, h, 10);
    for (int i = 0; i < 10; ++i) CHECK(std::abs(r.values(i) - e[static_cast<std::size_t>(i)]) < 1e-8 * infinity_norm(m));
    CHECK(r.max_residual < 1e-8 * infinity_norm(m));
    const Eigen::MatrixXd gram = r.vectors.transpose() * r.vectors;
    CHECK((gram - Eigen::MatrixXd::Identity(10, 10)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("fixed seed gives identical iterative results") {
    const auto m = box(70, 0.01);
    const auto a = eigen_lowest(m, 6);
    const auto b = eigen_lowest(m, 6);
    CHECK((a.values.array() == b.values.array()).all());
    CHECK((a.vectors.array() == b.vectors.array()).all());
}

TEST_CASE("Gershgorin bound and input checks") {
    const auto m = box(20, 0.1);
    CHECK(gershgorin_lower(m) <= 0.5 * oracle::box_laplacian_levels(20, 0.1)[0] * 2.0);
    CsrMatrix bad(3, 3);
    bad.insert(0, 1) = 1.0;
    CHECK_THROWS_AS(eigen_lowest(bad, 1), Error);
    CHECK_THROWS_AS(eigen_lowest(m, 0), Error);
}

TEST_CASE("inertia count matches the exact level count") {
    const int n = 25;
    const double h = 1.0 / (n + 1);
    const auto e = expected_box(n, h, 40);
    for (std::size_t i : {0u, 5u, 17u, 33u}) {
        const double x = 0.5 * (e[i] + e[i + 1]);
        if (e[i + 1] - e[i] < 1e-9) continue;
        CHECK(count_below(box(n, h), x) == static_cast<int>(i) + 1);
    }
    CHECK(count_below(box(n, h), 0.5 * e[0]) == 0);
}

TEST_CASE("badly scaled positive operator converges on the iterative path") {
    // D A D with a wildly varying diagonal D keeps A positive definite but pushes the Gershgorin bound far below zero.
    const int n = 36;
    const auto a = box(n, 1.0 / (n + 1));
    Eigen::VectorXd d(n * n);
    for (int i = 0; i < n * n; ++i) d(i) = std::pow(10.0, 3.0 * ((i * 7919) % 101) / 100.0);
    const CsrMatrix m = CsrMatrix(d.asDiagonal() * a * d.asDiagonal());
    REQUIRE(gershgorin_lower(m) < -1e3);
    const auto r = eigen_lowest(m, 6);
    CHECK_FALSE(r.dense);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(m)};
    for (int i = 0; i < 6; ++i) CHECK(std::abs(r.values(i) - es.eigenvalues()(i)) < 1e-8 * infinity_norm(m));
}
