#pragma once

#include "susyqm/eigensolver.hpp"
#include "susyqm/grid.hpp"
#include "susyqm/hamiltonian.hpp"
#include "susyqm/kernels.hpp"
#include "susyqm/superpotential.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace susyqm {

/// Sparse matrix together with the sector layouts of its columns (source) and rows (target).
struct DiscreteOperator {
    CsrMatrix matrix;
    std::string kind;
    int source_sector = 0;
    int target_sector = 0;
    SectorLayout source_layout;
    SectorLayout target_layout;

    [[nodiscard]] Eigen::Index rows() const { return matrix.rows(); }
    [[nodiscard]] Eigen::Index cols() const { return matrix.cols(); }
};

/// Relative particle coordinates x = R_rel^T y for a point y of the relative Jacobi grid.
Eigen::VectorXd relative_to_particles(int n, const Eigen::VectorXd& y);

/// w sampled once on the half-step lattice of the grid.
std::vector<double> sample_w_half_grid(const Superpotential& sp, const GridSpec& grid, bool parallel = true);

/**
 * Supercharge on a staggered grid in gauge form q+ = 2^{-1/2} e^{-w} d e^{w}.
 * A sector-M component with Jacobi label S lives on links along the axes in S, so the
 * difference quotient d is exact, (q+)^2 = 0 holds identically and the minus component
 * is the exact transpose of the plus component.
 */
DiscreteOperator discretize_supercharge(const SuperchargeSpec& spec, const GridSpec& grid, bool parallel = true);

/// Plus component from sector M using a precomputed half-lattice sample of w.
DiscreteOperator discretize_plus(const Superpotential& sp, const GridSpec& grid, int sector, const std::vector<double>& w_half);

/// Direct collocated discretization: 5-point kinetic term and the block potential sampled at nodes.
DiscreteOperator discretize_block(const BlockOperatorSpec& spec, const GridSpec& grid, bool parallel = true);

/// One-dimensional center-of-mass operator -1/2 d^2/dy^2 + 1/2 (W_C'^2 -/+ W_C'') on a Dirichlet axis.
DiscreteOperator discretize_cmm(const Superpotential& sp, Branch branch, const GridAxis& axis);

/// {q+, q-} on one sector from the incoming (M-1 -> M) and outgoing (M -> M+1) plus components.
DiscreteOperator susy_composed_hamiltonian(const DiscreteOperator* incoming, const DiscreteOperator* outgoing);

/// All plus components of the relative problem on one grid.
struct DiscreteComplex {
    int n = 0;
    GridSpec grid;
    std::vector<DiscreteOperator> plus;  // plus[M]: sector M -> M+1

    [[nodiscard]] int top_sector() const { return n - 1; }
    [[nodiscard]] DiscreteOperator minus(int sector) const;
    [[nodiscard]] DiscreteOperator hamiltonian(int sector) const;
    [[nodiscard]] Eigen::Index sector_size(int sector) const;
};

DiscreteComplex build_discrete_complex(const Superpotential& sp, const GridSpec& grid, bool parallel = true);

inline constexpr double kKernelThreshold = 1e-6;

struct MappedVector {
    Eigen::VectorXd vector;
    double norm = 0.0;
    bool kernel = false;
};

/// q+ (direction Plus, sector -> sector+1) or q- applied to v, normalized unless the image norm is below 1e-6.
MappedVector map_eigenfunction(const DiscreteComplex& complex, const Eigen::VectorXd& v, int sector, Direction direction);

struct SpectrumPair {
    double e_low = 0.0;
    double e_high = 0.0;
    double residual = 0.0;
};

struct KernelCandidate {
    int sector = 0;
    double eigenvalue = 0.0;
    double image_norm = 0.0;
    /// Share of the squared norm on the outermost tenth of each axis.
    double boundary_weight = 0.0;
};

struct SpectrumReport {
    int n = 0;
    int sector = 0;
    int partner_sector = 0;
    Branch branch = Branch::Lower;
    std::string model;
    std::map<std::string, double> params;
    GridSpec grid;
    double tolerance = 0.0;
    double residual_tolerance = 0.0;
    std::vector<double> eigenvalues;
    std::vector<double> partner_eigenvalues;
    std::vector<SpectrumPair> pairs;
    std::vector<KernelCandidate> kernel_candidates;
    std::vector<double> unpaired;
    /// Sector-M states annihilated by q+ only; their partners sit in sector M-1.
    std::vector<double> lower_partnered;
    double max_residual = 0.0;
    bool pass = false;
};

struct PairingOptions {
    double residual_tolerance = 5e-3;
    EigenOptions eigen;
    /// Builds the partner sector from a different superpotential (a negative control).
    std::optional<Superpotential> partner;
    bool parallel = true;
};

/// Eigenvalues of sector M and M+1 of the composed operator matched greedily within tol,
/// with the q+ images of sector-M eigenvectors checked against the partner Hamiltonian.
SpectrumReport verify_pairing(const Superpotential& sp, const GridSpec& grid, int sector, int k, double tol,
                              const PairingOptions& options = {});

/// Fraction of |v|^2 carried by points in the outer tenth of any axis.
double boundary_weight(const Eigen::VectorXd& v, const SectorLayout& layout, const GridSpec& grid);

struct LevelCluster {
    double mean = 0.0;
    int size = 0;
};

/// Groups ascending eigenvalues whose consecutive spacing is below tol.
std::vector<LevelCluster> cluster_levels(const std::vector<double>& values, double tol);

struct OscillatorReport {
    double a = 0.0;
    GridSpec grid;
    std::vector<double> eigenvalues;         // composed sector 0
    std::vector<double> direct_eigenvalues;  // collocated sector 0
    std::vector<LevelCluster> clusters;
    std::vector<double> gaps;
    double max_gap_error = 0.0;  // relative to a
    bool degeneracy_ok = false;
    std::vector<double> cmm_lower;
    std::vector<double> cmm_upper;
    double partial_solvability_residual = 0.0;
    bool pass = false;
};

/// Sector-0 oscillator structure of the three-particle example with the given grid.
OscillatorReport example3_oscillator_check(double a, const GridSpec& grid, int k, const EigenOptions& eigen = {});

} // namespace susyqm
