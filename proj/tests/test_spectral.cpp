#include "oracles.hpp"

#include "susyqm/errors.hpp"
#include "susyqm/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace susyqm;

namespace {

Eigen::VectorXd dense_eigenvalues(const CsrMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(m)};
    return es.eigenvalues();
}

double max_abs(const CsrMatrix& m) { return m.nonZeros() == 0 ? 0.0 : Eigen::MatrixXd(m).cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("free supercharges compose to the discrete Dirichlet Laplacian") {
    const int n = 20;
    const auto g = uniform_grid(2, -1.0, 1.0, n);
    const auto c = build_discrete_complex(free_superpotential(3), g);
    auto levels = oracle::box_laplacian_levels(n, g.step(0));
    for (auto& v : levels) v *= 0.5;
    const auto expect = oracle::lowest_sums({levels, levels}, 12);
    const auto got = dense_eigenvalues(c.hamiltonian(0).matrix);
    for (int i = 0; i < 12; ++i) CHECK(std::abs(got(i) - expect[static_cast<std::size_t>(i)]) < 1e-10 * expect.back());
}

TEST_CASE("discrete supercharges are nilpotent and minus is the transpose") {
    const auto sp = example3(1.0);
    const auto g = uniform_grid(2, -6.0, 6.0, 24);
    const auto c = build_discrete_complex(sp, g);
    const CsrMatrix pp = c.plus[1].matrix * c.plus[0].matrix;
    CHECK(max_abs(pp) < 1e-12 * max_abs(c.plus[0].matrix) * max_abs(c.plus[1].matrix));
    const auto minus = discretize_supercharge(build_supercharge(sp, 1, Direction::Minus), g);
    const CsrMatrix diff = minus.matrix - CsrMatrix(c.plus[0].matrix.transpose());
    CHECK(diff.norm() == 0.0);
    CHECK(minus.source_sector == 1);
    CHECK(minus.target_sector == 0);
    CHECK_THROWS_AS(static_cast<void>(c.minus(0)), Error);
    CHECK_THROWS_AS(static_cast<void>(c.hamiltonian(3)), Error);
}

TEST_CASE("periodic Sutherland complex is nilpotent on a staggered torus") {
    const auto sp = pairwise_superpotential(pair_model("sutherland", {{"a", 2.0}}), 3);
    GridSpec g;
    g.boundary = Boundary::Periodic;
    g.axes = {GridAxis{0.0, std::sqrt(2.0) * M_PI, 16, 0.25}, GridAxis{0.0, std::sqrt(6.0) * M_PI, 16, 0.125}};
    const auto c = build_discrete_complex(sp, g);
    const CsrMatrix pp = c.plus[1].matrix * c.plus[0].matrix;
    CHECK(max_abs(pp) < 1e-12 * max_abs(c.plus[0].matrix) * max_abs(c.plus[1].matrix));
    const auto e = dense_eigenvalues(c.hamiltonian(0).matrix);
    CHECK(e(0) > -1e-9);
}

TEST_CASE("nonzero spectra of q-q+ and q+q- coincide") {
    const auto sp = example3(1.0);
    const auto g = uniform_grid(2, -6.0, 6.0, 20);
    const auto c = build_discrete_complex(sp, g);
    for (int m = 0; m < 2; ++m) {
        const CsrMatrix& p = c.plus[static_cast<std::size_t>(m)].matrix;
        const auto a = dense_eigenvalues(CsrMatrix(p.transpose() * p));
        const auto b = dense_eigenvalues(CsrMatrix(p * p.transpose()));
        const double scale = std::max(a.maxCoeff(), b.maxCoeff());
        std::vector<double> na, nb;
        for (double v : a) if (v > 1e-8 * scale) na.push_back(v);
        for (double v : b) if (v > 1e-8 * scale) nb.push_back(v);
        REQUIRE(na.size() == nb.size());
        for (std::size_t i = 0; i < na.size(); ++i) CHECK(std::abs(na[i] - nb[i]) < 1e-10 * scale);
    }
}

TEST_CASE("two-particle oscillator: ground state unpaired, excited states paired") {
    const auto sp = pairwise_superpotential(pair_model("calogero", {{"a", 1.0}, {"b", 0.0}}), 2);
    const auto g = uniform_grid(1, -7.0, 7.0, 400);
    const auto rep = verify_pairing(sp, g, 0, 5, 1e-6);
    CHECK(rep.pass);
    REQUIRE(rep.eigenvalues.size() == 5);
    CHECK(std::abs(rep.eigenvalues[0]) < 1e-10);
    for (int i = 1; i < 5; ++i) CHECK(std::abs(rep.eigenvalues[static_cast<std::size_t>(i)] - 2.0 * i) < 2e-3 * i * i);
    bool ground_kernel = false;
    for (const auto& k : rep.kernel_candidates) {
        if (k.sector == 0 && std::abs(k.eigenvalue) < 1e-10) ground_kernel = k.boundary_weight < 1e-6;
    }
    CHECK(ground_kernel);
    CHECK(rep.pairs.size() == 4);
}

TEST_CASE("pairing succeeds for example3 and fails against a different partner") {
    const auto sp = example3(1.0);
    const auto g = uniform_grid(2, -8.0, 8.0, 48);
    const auto ok = verify_pairing(sp, g, 0, 6, 5e-3);
    CHECK(ok.pass);
    CHECK(ok.pairs.size() == 6);
    CHECK(ok.max_residual < 5e-3);
    PairingOptions o;
    o.partner = example3(1.25);
    const auto bad = verify_pairing(sp, g, 0, 6, 5e-3, o);
    CHECK_FALSE(bad.pass);
    const auto top = verify_pairing(sp, g, 1, 6, 5e-3);
    CHECK(top.pass);
    bool zero_mode = false;
    for (const auto& k : top.kernel_candidates) zero_mode = zero_mode || (k.sector == 2 && k.eigenvalue < 1e-8 && k.boundary_weight < 1e-3);
    CHECK(zero_mode);
    CHECK_THROWS_AS(verify_pairing(sp, g, 2, 4, 1e-3), Error);
}

TEST_CASE("grid refinement reduces the discretization error at second order") {
    const auto sp = example3(1.0);
    BlockOptions opts;
    opts.include_cmm = false;
    const auto blk = build_block(sp, 0, opts);
    double err_direct[2], err_gap[2];
    int idx = 0;
    for (int n : {24, 49}) {
        const auto g = uniform_grid(2, -6.0, 6.0, n);
        const auto d = dense_eigenvalues(discretize_block(blk, g).matrix);
        err_direct[idx] = std::abs(d(0) - 4.0);
        const auto c = dense_eigenvalues(build_discrete_complex(sp, g).hamiltonian(0).matrix);
        err_gap[idx] = std::abs((c(1) - c(0)) - 1.0);
        ++idx;
    }
    CHECK(err_direct[0] / err_direct[1] >= 3.0);
    CHECK(err_gap[0] / err_gap[1] >= 3.0);
    CHECK(oracle::observed_order(err_direct[0], err_direct[1]) > 1.6);
}

TEST_CASE("one-dimensional center-of-mass ladders") {
    const auto sp = example3(1.0);
    const GridAxis axis{-8.0, 8.0, 400, 0.5};
    const auto lo = dense_eigenvalues(discretize_cmm(sp, Branch::Lower, axis).matrix);
    const auto up = dense_eigenvalues(discretize_cmm(sp, Branch::Upper, axis).matrix);
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(lo(i) - (i + 1.0)) < 2e-3);
        CHECK(std::abs(up(i) - i) < 2e-3);
    }
}

TEST_CASE("level clustering") {
    const auto c = cluster_levels({4.0, 5.01, 4.99, 6.0, 6.02, 5.98}, 0.25);
    REQUIRE(c.size() == 3);
    CHECK(c[0].size == 1);
    CHECK(c[1].size == 2);
    CHECK(c[2].size == 3);
    CHECK(c[2].mean == doctest::Approx(6.0));
}

TEST_CASE("singular grid points are rejected") {
    const auto sp = pairwise_superpotential(pair_model("calogero", {{"a", 1.0}, {"b", 1.0}}), 3);
    // x1 = x2 on y1 = 0, which is a half-lattice point of an even-sized symmetric Dirichlet box.
    CHECK_THROWS_AS(build_discrete_complex(sp, uniform_grid(2, -4.0, 4.0, 16)), Error);
}
