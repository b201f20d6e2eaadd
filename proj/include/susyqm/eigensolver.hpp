#pragma once

#include "susyqm/kernels.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace susyqm {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct EigenOptions {
    std::uint64_t seed = kDefaultSeed;
    /// Residual target relative to the infinity norm of the matrix.
    double tolerance = 1e-8;
    int max_iterations = 200;
    Eigen::Index dense_limit = 600;
    /// Extra block vectors beyond k for the iterative path.
    int guard_vectors = 4;
};

struct EigenResult {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // unit columns
    double max_residual = 0.0;
    double scale = 0.0;
    int iterations = 0;
    bool dense = false;
};

double infinity_norm(const CsrMatrix& a);
/// Lower bound on the spectrum of a symmetric matrix from Gershgorin discs.
double gershgorin_lower(const CsrMatrix& a);
double max_asymmetry(const CsrMatrix& a);

/// Number of eigenvalues below x, read off the LDLT pivots of H - x (Sylvester inertia).
/// Returns -1 when the factorization hits a zero pivot.
int count_below(const CsrMatrix& h, double x);

/// The k smallest eigenpairs of a symmetric matrix. Small matrices go through a dense solver,
/// larger ones through shift-and-invert block iteration with Rayleigh-Ritz extraction.
EigenResult eigen_lowest(const CsrMatrix& h, int k, const EigenOptions& options = {});

} // namespace susyqm
