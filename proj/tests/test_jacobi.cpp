#include "oracles.hpp"

#include "susyqm/combinatorics.hpp"
#include "susyqm/fock.hpp"
#include "susyqm/jacobi.hpp"

#include <doctest.h>

#include <algorithm>

using namespace susyqm;

TEST_CASE("Jacobi matrix is orthogonal and matches the coordinate formulas") {
    for (int n = 2; n <= 10; ++n) {
        const auto j = build_R(n);
        CHECK((j.R - oracle::jacobi(n)).cwiseAbs().maxCoeff() < 1e-14);
        CHECK((j.R * j.R.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-14);
        Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(n, -1.0, 2.0);
        CHECK((j.from_jacobi(j.to_jacobi(x)) - x).norm() < 1e-13);
    }
}

TEST_CASE("phi creation operators satisfy the canonical relations") {
    const int n = 4;
    for (int m = 0; m + 1 < n; ++m) {
        for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
                const Eigen::MatrixXd a = phi_creation_matrix(n, m + 1, k).to_dense() * phi_creation_matrix(n, m, l).to_dense();
                const Eigen::MatrixXd b = phi_creation_matrix(n, m + 1, l).to_dense() * phi_creation_matrix(n, m, k).to_dense();
                CHECK((a + b).cwiseAbs().maxCoeff() < 1e-14);
            }
        }
    }
}

TEST_CASE("phi basis coefficients are minors of R") {
    for (int n = 2; n <= 6; ++n) {
        const auto r = build_R(n).R;
        for (int m = 0; m <= n - 1; ++m) {
            const auto pb = build_phi_basis(n, m);
            CHECK(static_cast<std::int64_t>(pb.size()) == binomial(n - 1, m));
            const Eigen::MatrixXd lex_minors = oracle::phi_state_minors(r, m);
            // Oracle rows follow lexicographic subsets; the Fock basis is in mask order.
            const auto fock = enumerate_basis(n, m);
            const auto lex = oracle::subsets(n, m);
            Eigen::MatrixXd minors(lex_minors.rows(), lex_minors.cols());
            for (std::size_t i = 0; i < fock.size(); ++i) {
                std::vector<int> occ;
                for (int mode = 1; mode <= n; ++mode) {
                    if (fock.states[i].occupied(mode)) occ.push_back(mode - 1);
                }
                const auto pos = std::find(lex.begin(), lex.end(), occ) - lex.begin();
                minors.row(static_cast<Eigen::Index>(i)) = lex_minors.row(pos);
            }
            // The oracle covers all N modes; relative labels are the subsets avoiding mode N, in the same order.
            const auto all = oracle::subsets(n, m);
            std::size_t col = 0;
            for (std::size_t b = 0; b < all.size(); ++b) {
                if (!all[b].empty() && all[b].back() == n - 1) continue;
                CHECK((pb.vectors.col(static_cast<Eigen::Index>(col)) - minors.col(static_cast<Eigen::Index>(b))).cwiseAbs().maxCoeff() < 1e-13);
                ++col;
            }
            CHECK(col == pb.size());
            CHECK((pb.vectors.transpose() * pb.vectors - Eigen::MatrixXd::Identity(pb.vectors.cols(), pb.vectors.cols())).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}

TEST_CASE("center-of-mass states complete the relative basis") {
    const int n = 4;
    for (int m = 1; m <= n; ++m) {
        const auto rel = build_phi_basis(n, m == n ? m - 1 : m);
        const auto cmm = build_phi_cmm_states(n, m);
        CHECK(static_cast<std::int64_t>(cmm.size()) == binomial(n - 1, m - 1));
        if (m < n) {
            Eigen::MatrixXd all(rel.vectors.rows(), rel.vectors.cols() + cmm.vectors.cols());
            all << rel.vectors, cmm.vectors;
            CHECK((all.transpose() * all - Eigen::MatrixXd::Identity(all.cols(), all.cols())).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}
