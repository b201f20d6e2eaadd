#pragma once

#include "susyqm/sparse.hpp"

#include <Eigen/Dense>

#include <vector>

namespace susyqm {

/// Orthogonal Jacobi transform y = R x. Rows 1..N-1 are relative modes, row N is the center of mass.
struct JacobiMatrix {
    int n = 0;
    Eigen::MatrixXd R;

    [[nodiscard]] Eigen::VectorXd to_jacobi(const Eigen::VectorXd& x) const { return R * x; }
    [[nodiscard]] Eigen::VectorXd from_jacobi(const Eigen::VectorXd& y) const { return R.transpose() * y; }
};

JacobiMatrix build_R(int n);

/// phi^+_k = sum_l R_kl psi^+_l as a map from psi-sector M to M+1. k is 1-based.
RealOperator phi_creation_matrix(int n, int sector, int k);

/// States phi^+_{b1}...phi^+_{bM}|0> expressed in the psi-Fock sector M.
struct PhiBasis {
    int n = 0;
    int sector = 0;
    /// 1-based Jacobi labels of each column, ascending within a label.
    std::vector<std::vector<int>> labels;
    /// One column per label, rows indexed by enumerate_basis(n, sector).
    Eigen::MatrixXd vectors;

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
};

/// Relative-mode states, b_1 < ... < b_M < N, in lexicographic order of the labels.
PhiBasis build_phi_basis(int n, int sector);

/// States phi^+_{b1}...phi^+_{b_{M-1}} phi^+_N |0> with the center-of-mass mode occupied.
/// Labels omit the trailing N.
PhiBasis build_phi_cmm_states(int n, int sector);

} // namespace susyqm
