#pragma once

#include "susyqm/jets.hpp"
#include "susyqm/superpotential.hpp"
#include "susyqm/symrep.hpp"

#include <Eigen/Dense>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace susyqm {

/// Which center-of-mass component a block pairs with: Lower has phi_N empty (-W_C''), Upper has it filled (+W_C'').
enum class Branch { Lower, Upper };

std::string to_string(Branch b);
Branch parse_branch(const std::string& s);

/**
 * Matrix Schrodinger operator -1/2 Laplacian + scalar_potential + matrix_potential
 * acting on C(N-1, M)-component functions of the N particle coordinates.
 */
struct BlockOperatorSpec {
    int n = 0;
    int sector = 0;
    Branch branch = Branch::Lower;
    Eigen::Index block_dim = 0;
    std::string model;
    std::map<std::string, double> params;

    std::function<double(const Eigen::VectorXd&)> scalar_potential;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> matrix_potential;
    /// Gradient of scalar_potential * I + matrix_potential, one matrix per coordinate.
    std::function<std::vector<Eigen::MatrixXd>(const Eigen::VectorXd&)> potential_gradient;

    [[nodiscard]] Eigen::MatrixXd potential(const Eigen::VectorXd& x) const;
    [[nodiscard]] SchrodingerOperator as_operator() const;
};

struct BlockOptions {
    Branch branch = Branch::Lower;
    /// Replaces the representation matrices, e.g. to inject a deliberate defect.
    std::optional<RepMatrixSet> reps;
    /// Use the finite-difference fallback for third derivatives even when analytic ones exist.
    bool force_stencil = false;
    double stencil_scale = 1.0;
    /// Drop 1/2 (W_C'^2 -/+ W_C'') to get the relative operator h^(M) alone.
    bool include_cmm = true;
};

BlockOperatorSpec build_block(const Superpotential& sp, int sector, const BlockOptions& options = {});

/// The same block from the pair-model form: scalar 1/2 sum_{i!=l} [U'^2 - (N-2) v0], matrix -1/2 sum B_ij U''.
BlockOperatorSpec build_pairwise_block(const PairModel& model, int n, int sector, Branch branch = Branch::Lower,
                                       bool calogero_cmm = false);

/// cg[b-1] is the matrix of phi^+_b from the relative phi basis of sector M to that of M+1.
struct CGTensor {
    int n = 0;
    int sector = 0;
    std::vector<Eigen::MatrixXd> cg;
};

CGTensor cg_tensor(int n, int sector);

enum class Direction { Plus, Minus };

/**
 * First-order matrix operator sum_l coef[l] d_l + zeroth(x).
 *
 * Plus maps sector M to M+1 with coef[l] = coupling[l]/sqrt(2) and
 * zeroth = sum_l coupling[l] d_l w / sqrt(2), coupling[l] = sum_b R_bl cg[b].
 * Minus uses the transposed couplings and flips the derivative sign.
 */
struct SuperchargeSpec {
    int n = 0;
    int source = 0;
    int target = 0;
    Direction direction = Direction::Plus;
    std::vector<Eigen::MatrixXd> coupling;
    std::vector<Eigen::MatrixXd> coef;
    Superpotential superpotential;
    bool force_stencil = false;
    double stencil_scale = 1.0;

    [[nodiscard]] Eigen::MatrixXd zeroth(const Eigen::VectorXd& x) const;
    [[nodiscard]] FirstOrderOperator as_operator() const;
};

SuperchargeSpec build_supercharge(const Superpotential& sp, int sector, Direction direction, bool force_stencil = false,
                                  double stencil_scale = 1.0);

struct ResidualOptions {
    std::optional<RepMatrixSet> source_reps;
    std::optional<RepMatrixSet> target_reps;
    bool force_stencil = false;
    double stencil_scale = 1.0;
    Branch branch = Branch::Lower;
};

/// max over functions and points of |H^(M+1) q+ f - q+ H^(M) f| relative to the size of both sides.
double intertwining_residual(const Superpotential& sp, int sector, const std::vector<TestFunction>& tests,
                             const std::vector<Eigen::VectorXd>& points, const ResidualOptions& options = {});

/// max |q+_(M+1) q+_(M) f| and the same for the minus chain, absolute.
double nilpotency_residual(const Superpotential& sp, int sector, const std::vector<TestFunction>& tests,
                           const std::vector<Eigen::VectorXd>& points, bool force_stencil = false);

/// Supercharges lifted to the whole 2^N Fock space, in the psi-mask basis.
FirstOrderOperator full_relative_supercharge(const Superpotential& sp, Direction direction);
FirstOrderOperator full_cmm_supercharge(const Superpotential& sp, Direction direction);

/// max over the four anticommutators {Q_C(+/-), q(+/-)} applied to test functions on the whole Fock space.
double qc_anticommutator_residual(const Superpotential& sp, const std::vector<TestFunction>& tests,
                                  const std::vector<Eigen::VectorXd>& points);

struct HsFormReport {
    /// ψ-Hessian form against the K-operator form, full Fock space.
    double max_form_difference = 0.0;
    /// K-operator form rotated into the phi basis against the assembled blocks.
    double max_block_difference = 0.0;
    /// Largest entry linking different fermion numbers (structurally zero).
    double max_number_coupling = 0.0;
    /// Largest entry linking phi_N-empty and phi_N-filled states within one fermion number.
    double max_cmm_coupling = 0.0;
    double scale = 0.0;
    bool pass = false;
};

/// Potentials of H_S in both forms; kinetic terms agree identically and are omitted.
Eigen::MatrixXd hs_potential_hessian_form(const Superpotential& sp, const Eigen::VectorXd& x);
Eigen::MatrixXd hs_potential_permutation_form(const Superpotential& sp, const Eigen::VectorXd& x);

HsFormReport hs_form_consistency(const Superpotential& sp, const std::vector<Eigen::VectorXd>& samples);

/// Seeded points around `base`, rejected when the superpotential guard fires.
std::vector<Eigen::VectorXd> sample_points(const Superpotential& sp, int count, std::uint64_t seed,
                                           const Eigen::VectorXd& base, double spread);

} // namespace susyqm
