#include "susyqm/fock.hpp"

#include "susyqm/combinatorics.hpp"

#include <algorithm>
#include <bit>

namespace susyqm {

namespace {

void check_modes(int n_modes) {
    if (n_modes < 2 || n_modes > kMaxModes) {
        throw Error(ErrorCode::InvalidArgument, "number of modes must lie in [2, " + std::to_string(kMaxModes) + "]");
    }
}

void check_mode(int n_modes, int mode) {
    if (mode < 1 || mode > n_modes) throw Error(ErrorCode::InvalidMode, "mode index " + std::to_string(mode) + " out of range");
}

int sign_below(Mask mask, int mode) {
    const Mask below = mask & ((Mask{1} << (mode - 1)) - 1U);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

} // namespace

int FockState::fermion_number() const noexcept { return std::popcount(mask); }

std::optional<std::size_t> FockBasis::index_of(Mask mask) const {
    auto it = std::lower_bound(states.begin(), states.end(), mask,
                               [](const FockState& s, Mask m) { return s.mask < m; });
    if (it == states.end() || it->mask != mask) return std::nullopt;
    return static_cast<std::size_t>(it - states.begin());
}

FockBasis enumerate_basis(int n_modes, int sector) {
    check_modes(n_modes);
    if (sector < 0 || sector > n_modes) throw Error(ErrorCode::InvalidSector, "sector out of range");
    FockBasis basis{n_modes, sector, {}};
    basis.states.reserve(static_cast<std::size_t>(binomial(n_modes, sector)));
    const Mask limit = Mask{1} << n_modes;
    if (sector == 0) {
        basis.states.push_back({0, n_modes});
        return basis;
    }
    // Gosper's hack walks masks of fixed popcount in increasing order.
    Mask m = (Mask{1} << sector) - 1U;
    while (m < limit) {
        basis.states.push_back({m, n_modes});
        const Mask c = m & (~m + 1U);
        const Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return basis;
}

IntOperator creation_matrix(int n_modes, int sector, int mode) {
    check_modes(n_modes);
    if (sector < 0 || sector >= n_modes) throw Error(ErrorCode::InvalidSector, "creation source sector out of range");
    check_mode(n_modes, mode);
    const FockBasis src = enumerate_basis(n_modes, sector);
    const FockBasis dst = enumerate_basis(n_modes, sector + 1);
    const Mask bit = Mask{1} << (mode - 1);
    std::vector<IntOperator::Entry> t;
    for (std::size_t col = 0; col < src.size(); ++col) {
        const Mask m = src.states[col].mask;
        if (m & bit) continue;
        const auto row = dst.index_of(m | bit);
        t.push_back({*row, col, sign_below(m, mode)});
    }
    return IntOperator::from_triplets(dst.size(), src.size(), std::move(t));
}

IntOperator annihilation_matrix(int n_modes, int sector, int mode) {
    check_modes(n_modes);
    if (sector < 1 || sector > n_modes) throw Error(ErrorCode::InvalidSector, "annihilation source sector out of range");
    return creation_matrix(n_modes, sector - 1, mode).transpose();
}

IntOperator permutation_operator(int n_modes, int sector, int i, int j) {
    check_modes(n_modes);
    if (i < 1 || j < 1 || i > n_modes || j > n_modes || i == j) {
        throw Error(ErrorCode::InvalidIndices, "permutation indices must be distinct modes");
    }
    if (sector < 0 || sector > n_modes) throw Error(ErrorCode::InvalidSector, "sector out of range");
    const auto dim = static_cast<std::size_t>(binomial(n_modes, sector));
    IntOperator k = IntOperator::identity(dim);
    if (sector == 0) return k;
    const IntOperator down = annihilation_matrix(n_modes, sector, i) - annihilation_matrix(n_modes, sector, j);
    const IntOperator up = creation_matrix(n_modes, sector - 1, i) - creation_matrix(n_modes, sector - 1, j);
    return k - up * down;
}

namespace {

void check_full(int n_modes) {
    if (n_modes < 2 || n_modes > kMaxFullSpaceModes) {
        throw Error(ErrorCode::InvalidArgument, "full Fock space assembly limited to N <= " + std::to_string(kMaxFullSpaceModes));
    }
}

} // namespace

IntOperator full_creation(int n_modes, int mode) {
    check_full(n_modes);
    check_mode(n_modes, mode);
    const std::size_t dim = std::size_t{1} << n_modes;
    const Mask bit = Mask{1} << (mode - 1);
    std::vector<IntOperator::Entry> t;
    for (Mask m = 0; m < dim; ++m) {
        if (m & bit) continue;
        t.push_back({static_cast<std::size_t>(m | bit), static_cast<std::size_t>(m), sign_below(m, mode)});
    }
    return IntOperator::from_triplets(dim, dim, std::move(t));
}

IntOperator full_annihilation(int n_modes, int mode) { return full_creation(n_modes, mode).transpose(); }

IntOperator full_permutation(int n_modes, int i, int j) {
    check_full(n_modes);
    if (i < 1 || j < 1 || i > n_modes || j > n_modes || i == j) {
        throw Error(ErrorCode::InvalidIndices, "permutation indices must be distinct modes");
    }
    const std::size_t dim = std::size_t{1} << n_modes;
    const IntOperator up = full_creation(n_modes, i) - full_creation(n_modes, j);
    const IntOperator down = full_annihilation(n_modes, i) - full_annihilation(n_modes, j);
    return IntOperator::identity(dim) - up * down;
}

} // namespace susyqm
