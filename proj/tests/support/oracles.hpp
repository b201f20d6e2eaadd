#pragma once

// Reference computations written independently of the library code paths they check.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

/// k-subsets of {0..n-1} from a bitmask scan, sorted lexicographically.
std::vector<std::vector<int>> subsets(int n, int k);

/// Sign and result of c^+_mode acting on an occupation list; sign 0 when the mode is filled.
struct Applied {
    int sign = 0;
    std::vector<int> modes;  // ascending, 1-based
};
Applied create(const std::vector<int>& modes, int mode);
Applied annihilate(const std::vector<int>& modes, int mode);

/// Jacobi matrix from the explicit coordinate formulas y_b = (x_1 + ... + x_b - b x_{b+1}) / sqrt(b(b+1)).
Eigen::MatrixXd jacobi(int n);

/// Coefficient of psi^+_{s1}..psi^+_{sM}|0> (s ascending) in phi^+_{b1}..phi^+_{bM}|0> is det R[b, s].
Eigen::MatrixXd phi_state_minors(const Eigen::MatrixXd& r, int sector);

/// Number of standard Young tableaux of a shape by corner removal.
std::int64_t syt_count(const std::vector<int>& shape);

/// Characters of the hook (n-M, 1^M) from det(1 + tP) / (1 + t) for a cycle type.
std::int64_t hook_character(int n, int sector, const std::vector<int>& cycle_type);

/// Character table of S_3 indexed [irrep][class]; irreps (3), (2,1), (1,1,1); classes 1^3, 2 1, 3.
const std::vector<std::vector<int>>& s3_table();

/// Explicit permutation matrix of the standard representation restricted to the sum-zero subspace, as a check on B_ij.
Eigen::MatrixXd transposition_on_standard(int n, int i, int j);

/// Central 6th-order finite differences of a scalar function.
Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x, double h);
Eigen::MatrixXd fd_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x, double h);

/// Discrete Dirichlet Laplacian eigenvalues (2 - 2 cos(k pi/(n+1)))/h^2, k = 1..n.
std::vector<double> box_laplacian_levels(int n, double h);

/// Smallest sums of one value from each list, with multiplicity, sorted.
std::vector<double> lowest_sums(const std::vector<std::vector<double>>& lists, std::size_t count);

/// Order of convergence log2(e_coarse / e_fine) for errors at steps h and h/2.
double observed_order(double e_coarse, double e_fine);

} // namespace oracle
