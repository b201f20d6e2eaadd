#include "oracles.hpp"

#include "susyqm/combinatorics.hpp"
#include "susyqm/errors.hpp"
#include "susyqm/hamiltonian.hpp"
#include "susyqm/jacobi.hpp"

#include <doctest.h>

#include <cmath>

using namespace susyqm;

namespace {

Eigen::VectorXd base(int n) {
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) b(i) = 0.6 * (i - 0.5 * (n - 1));
    return b;
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("sector-0 block is the scalar Witten form") {
    const auto sp = example3(1.3);
    BlockOptions o;
    o.include_cmm = false;
    const auto blk = build_block(sp, 0, o);
    for (const auto& x : sample_points(sp, 10, 4, base(3), 1.5)) {
        const Eigen::VectorXd g = sp.grad(x);
        const double expect = 0.5 * (g.squaredNorm() - sp.hess(x).trace());
        CHECK(std::abs(blk.potential(x)(0, 0) - expect) < 1e-12 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("example3 relative ground block reduces to a shifted oscillator") {
    // h^(0) = 1/2(-Laplacian + a^2 r^2) + 3a on the relative plane.
    const double a = 0.8;
    const auto sp = example3(a);
    BlockOptions o;
    o.include_cmm = false;
    const auto blk = build_block(sp, 0, o);
    const auto r = build_R(3).R;
    for (const auto& x : sample_points(sp, 10, 9, base(3), 2.0)) {
        const Eigen::VectorXd y = r * x;
        const double rel2 = y(0) * y(0) + y(1) * y(1);
        CHECK(std::abs(blk.potential(x)(0, 0) - (0.5 * a * a * rel2 + 3 * a)) < 1e-11);
    }
}

TEST_CASE("center-of-mass term differs between branches by W_C''") {
    const auto sp = example3(1.0);
    BlockOptions lo, up;
    up.branch = Branch::Upper;
    const Eigen::Vector3d x(0.2, -0.4, 0.7);
    const double y = x.sum() / std::sqrt(3.0);
    const double diff = build_block(sp, 1, up).potential(x)(0, 0) - build_block(sp, 1, lo).potential(x)(0, 0);
    CHECK(std::abs(diff - sp.wc_d2(y)) < 1e-13);
}

TEST_CASE("pairwise and Hessian constructions agree") {
    for (int n : {3, 4}) {
        const auto pm = pair_model("calogero", {{"a", 1.0}, {"b", 0.5}});
        const auto sp = pairwise_superpotential(pm, n);
        for (int m = 0; m < n; ++m) {
            BlockOptions o;
            const auto a = build_block(sp, m, o);
            const auto b = build_pairwise_block(pm, n, m);
            for (const auto& x : sample_points(sp, 5, 8, base(n), 0.2)) {
                const double s = 1.0 + max_abs(a.potential(x));
                CHECK(max_abs(a.potential(x) - b.potential(x)) < 1e-11 * s);
            }
        }
    }
}

TEST_CASE("Clebsch-Gordan tensor is the phi creation operator restricted to the relative basis") {
    for (int n = 3; n <= 5; ++n) {
        for (int m = 0; m + 1 < n; ++m) {
            const auto cg = cg_tensor(n, m);
            REQUIRE(static_cast<int>(cg.cg.size()) == n - 1);
            for (int b = 0; b < n - 1; ++b) {
                const auto& c = cg.cg[static_cast<std::size_t>(b)];
                CHECK(c.rows() == binomial(n - 1, m + 1));
                CHECK(c.cols() == binomial(n - 1, m));
                CHECK(max_abs(c.array().abs() * (1.0 - c.array().abs())) < 1e-12);
            }
        }
    }
}

TEST_CASE("intertwining and nilpotency on smooth test functions") {
    const auto sp = example3(1.0);
    const auto pts = sample_points(sp, 6, 1, base(3), 1.0);
    for (int m = 0; m < 2; ++m) {
        const auto tests = test_function_suite(3, binomial(2, m), 4, 7 + m, base(3), 1.0);
        CHECK(intertwining_residual(sp, m, tests, pts) < 1e-10);
        ResidualOptions st;
        st.force_stencil = true;
        CHECK(intertwining_residual(sp, m, tests, pts, st) < 1e-9);
        CHECK(nilpotency_residual(sp, m, tests, pts) < 1e-10);
    }
    const auto sut = pairwise_superpotential(pair_model("sutherland", {{"a", 1.0}}), 4);
    const auto p4 = sample_points(sut, 6, 2, base(4), 0.2);
    for (int m = 0; m < 3; ++m) {
        const auto tests = test_function_suite(4, binomial(3, m), 3, 11 + m, base(4), 0.5);
        CHECK(intertwining_residual(sut, m, tests, p4) < 1e-10);
    }
    CHECK_THROWS_AS(build_supercharge(sp, 2, Direction::Plus), Error);
}

TEST_CASE("a sign defect in one matrix breaks intertwining") {
    const auto sp = example3(1.0);
    const auto pts = sample_points(sp, 6, 1, base(3), 1.0);
    const auto tests = test_function_suite(3, 2, 4, 3, base(3), 1.0);
    auto reps = build_rep_matrices(3, 1);
    reps.matrices.at({1, 2}) *= -1.0;
    ResidualOptions o;
    o.source_reps = reps;
    CHECK(intertwining_residual(sp, 1, tests, pts, o) > 1e-2);
}

TEST_CASE("full superhamiltonian forms agree and do not couple sectors") {
    for (int n : {3, 4}) {
        const auto sp = n == 3 ? example3(1.0) : pairwise_superpotential(pair_model("sutherland", {{"a", 1.0}}), 4);
        const auto pts = sample_points(sp, 5, 6, base(n), 0.2);
        const auto rep = hs_form_consistency(sp, pts);
        CHECK(rep.pass);
        CHECK(rep.max_number_coupling == 0.0);
        CHECK(rep.max_form_difference < 1e-9 * (1.0 + rep.scale));
        const auto tests = test_function_suite(n, Eigen::Index{1} << n, 2, 9, base(n), 0.5);
        CHECK(qc_anticommutator_residual(sp, tests, pts) < 1e-10);
    }
}
