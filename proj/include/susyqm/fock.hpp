#pragma once

#include "susyqm/sparse.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace susyqm {

using Mask = std::uint32_t;

/// Occupation state over N fermionic modes. Bit i-1 of the mask is mode i.
struct FockState {
    Mask mask = 0;
    int n_modes = 0;

    [[nodiscard]] int fermion_number() const noexcept;
    [[nodiscard]] bool occupied(int mode) const noexcept { return (mask >> (mode - 1)) & 1U; }

    friend bool operator==(const FockState&, const FockState&) = default;
};

/// Fixed-fermion-number sector with states sorted by ascending mask.
struct FockBasis {
    int n_modes = 0;
    int sector = 0;
    std::vector<FockState> states;

    [[nodiscard]] std::size_t size() const noexcept { return states.size(); }
    [[nodiscard]] std::optional<std::size_t> index_of(Mask mask) const;
};

inline constexpr int kMaxModes = 24;
inline constexpr int kMaxFullSpaceModes = 12;

FockBasis enumerate_basis(int n_modes, int sector);

/// psi^+_mode from sector M to M+1. Modes are 1-based.
IntOperator creation_matrix(int n_modes, int sector, int mode);

/// psi_mode from sector M to M-1; the transpose of creation_matrix(n_modes, sector - 1, mode).
IntOperator annihilation_matrix(int n_modes, int sector, int mode);

/// K_ij = 1 - (psi^+_i - psi^+_j)(psi_i - psi_j) restricted to sector M.
IntOperator permutation_operator(int n_modes, int sector, int i, int j);

// Whole 2^N Fock space, indexed directly by mask. Only for algebra checks.
IntOperator full_creation(int n_modes, int mode);
IntOperator full_annihilation(int n_modes, int mode);
IntOperator full_permutation(int n_modes, int i, int j);

} // namespace susyqm
