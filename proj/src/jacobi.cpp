#include "susyqm/jacobi.hpp"

#include "susyqm/combinatorics.hpp"
#include "susyqm/fock.hpp"

#include <cmath>

namespace susyqm {

JacobiMatrix build_R(int n) {
    if (n < 2 || n > kMaxModes) throw Error(ErrorCode::InvalidArgument, "Jacobi transform requires 2 <= n <= " + std::to_string(kMaxModes));
    JacobiMatrix j{n, Eigen::MatrixXd::Zero(n, n)};
    for (int b = 1; b < n; ++b) {
        const double s = 1.0 / std::sqrt(static_cast<double>(b) * (b + 1));
        for (int l = 0; l < b; ++l) j.R(b - 1, l) = s;
        j.R(b - 1, b) = -b * s;
    }
    j.R.row(n - 1).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
    return j;
}

RealOperator phi_creation_matrix(int n, int sector, int k) {
    if (k < 1 || k > n) throw Error(ErrorCode::InvalidMode, "Jacobi mode out of range");
    if (sector < 0 || sector >= n) throw Error(ErrorCode::InvalidSector, "creation source sector out of range");
    const JacobiMatrix jm = build_R(n);
    std::vector<RealOperator::Entry> t;
    for (int l = 1; l <= n; ++l) {
        const double c = jm.R(k - 1, l - 1);
        if (c == 0.0) continue;
        const IntOperator psi = creation_matrix(n, sector, l);
        for (const auto& e : psi.entries()) {
            t.push_back({e.row, e.col, c * static_cast<double>(e.value)});
        }
    }
    return RealOperator::from_triplets(static_cast<std::size_t>(binomial(n, sector + 1)),
                                       static_cast<std::size_t>(binomial(n, sector)), std::move(t));
}

namespace {

// Applies phi^+_{modes[0]} ... phi^+_{modes[last]} to the vacuum, rightmost first.
Eigen::VectorXd phi_product_state(const std::vector<int>& modes,
                                  const std::vector<std::vector<RealOperator>>& phi) {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(1);
    int sector = 0;
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
        v = multiply(phi[static_cast<std::size_t>(sector)][static_cast<std::size_t>(*it - 1)], v);
        ++sector;
    }
    return v;
}

std::vector<std::vector<RealOperator>> phi_tables(int n, int max_sector) {
    std::vector<std::vector<RealOperator>> phi(static_cast<std::size_t>(max_sector));
    for (int m = 0; m < max_sector; ++m) {
        for (int k = 1; k <= n; ++k) phi[static_cast<std::size_t>(m)].push_back(phi_creation_matrix(n, m, k));
    }
    return phi;
}

} // namespace

PhiBasis build_phi_basis(int n, int sector) {
    if (n < 2 || n > kMaxModes) throw Error(ErrorCode::InvalidArgument, "phi basis requires 2 <= n <= " + std::to_string(kMaxModes));
    if (sector < 0 || sector > n - 1) throw Error(ErrorCode::InvalidSector, "phi basis sector must lie in [0, n-1]");
    PhiBasis pb{n, sector, {}, {}};
    const auto subsets = lexicographic_subsets(n - 1, sector);
    const auto phi = phi_tables(n, sector);
    pb.vectors.resize(binomial(n, sector), static_cast<Eigen::Index>(subsets.size()));
    for (std::size_t c = 0; c < subsets.size(); ++c) {
        std::vector<int> label;
        for (int b : subsets[c]) label.push_back(b + 1);
        pb.vectors.col(static_cast<Eigen::Index>(c)) = phi_product_state(label, phi);
        pb.labels.push_back(std::move(label));
    }
    return pb;
}

PhiBasis build_phi_cmm_states(int n, int sector) {
    if (n < 2 || n > kMaxModes) throw Error(ErrorCode::InvalidArgument, "phi basis requires 2 <= n <= " + std::to_string(kMaxModes));
    if (sector < 1 || sector > n) throw Error(ErrorCode::InvalidSector, "center-of-mass states need sector in [1, n]");
    PhiBasis pb{n, sector, {}, {}};
    const auto subsets = lexicographic_subsets(n - 1, sector - 1);
    const auto phi = phi_tables(n, sector);
    pb.vectors.resize(binomial(n, sector), static_cast<Eigen::Index>(subsets.size()));
    for (std::size_t c = 0; c < subsets.size(); ++c) {
        std::vector<int> label;
        for (int b : subsets[c]) label.push_back(b + 1);
        std::vector<int> modes = label;
        modes.push_back(n);
        pb.vectors.col(static_cast<Eigen::Index>(c)) = phi_product_state(modes, phi);
        pb.labels.push_back(std::move(label));
    }
    return pb;
}

} // namespace susyqm
