#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace susyqm {

/// Young diagram row lengths, weakly decreasing.
struct Partition {
    std::vector<int> rows;

    [[nodiscard]] int size() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Conjugacy class label of S_N given by cycle lengths, weakly decreasing.
struct CycleType {
    std::vector<int> lengths;

    [[nodiscard]] int size() const;
    friend bool operator==(const CycleType&, const CycleType&) = default;
};

void validate(const Partition& p);
void validate(const CycleType& c);

/// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);
std::vector<CycleType> cycle_types_of(int n);

/// One-line notation, 1-based: perm[k-1] is the image of k.
using Permutation = std::vector<int>;
using Transposition = std::pair<int, int>;

Eigen::MatrixXd t_matrix(int n, int i, int j);

/// R T_(ij) R^T.
Eigen::MatrixXd t_tilde(int n, int i, int j);

/// Matrix of K_ij on the relative phi basis of sector M.
Eigen::MatrixXd b_matrix(int n, int sector, int i, int j);

/// Same matrix via the M-th compound of the relative block of t_tilde.
Eigen::MatrixXd b_matrix_exterior(int n, int sector, int i, int j);

/// All k x k minors of a, rows and columns indexed by lexicographic k-subsets.
Eigen::MatrixXd compound_matrix(const Eigen::MatrixXd& a, int k);

/// The matrices B_ij of one sector, keyed by (i, j) with i < j, 1-based.
struct RepMatrixSet {
    int n = 0;
    int sector = 0;
    std::map<std::pair<int, int>, Eigen::MatrixXd> matrices;

    [[nodiscard]] const Eigen::MatrixXd& at(int i, int j) const;
    [[nodiscard]] Eigen::Index dim() const;
};

/// Builds every B_ij of the sector. The parallel build fills the same slots as the serial one.
RepMatrixSet build_rep_matrices(int n, int sector, bool parallel = true);

struct RepAxiomReport {
    double orthogonality = 0.0;  // max |B^T B - I|
    double involution = 0.0;     // max |B^2 - I|
    double braid = 0.0;          // adjacent (s_i s_{i+1})^3 = 1, distant generators commute
    double conjugation = 0.0;    // B_ik = B_ij B_jk B_ij
    [[nodiscard]] double max() const;
};

RepAxiomReport check_rep_axioms(const RepMatrixSet& reps);

/// sigma = t_1 t_2 ... t_k with the rightmost factor acting first.
std::vector<Transposition> transposition_decomposition(const Permutation& perm);
void validate_permutation(int n, const Permutation& perm);

Eigen::MatrixXd b_permutation(const RepMatrixSet& reps, const std::vector<Transposition>& factors);
Eigen::MatrixXd b_permutation(const RepMatrixSet& reps, const Permutation& perm);
Eigen::MatrixXd b_permutation(int n, int sector, const Permutation& perm);

/// Cycles laid out on consecutive ascending integers, e.g. (3,1) -> (1 2 3)(4).
Permutation class_representative(const CycleType& c);
CycleType cycle_type_of(const Permutation& perm);

double character(const RepMatrixSet& reps, const CycleType& c);
double character(int n, int sector, const CycleType& c);

/// Murnaghan-Nakayama character of the irrep labelled by lambda.
std::int64_t mn_character(const Partition& lambda, const CycleType& c);

std::int64_t class_size(const CycleType& c);

struct IrreducibilityReport {
    int n = 0;
    int sector = 0;
    std::vector<CycleType> classes;
    std::vector<double> characters;
    double inner_product = 0.0;
    bool pass = false;
};

IrreducibilityReport verify_irreducible(int n, int sector);
IrreducibilityReport verify_irreducible(const RepMatrixSet& reps);

/// The unique partition whose characters match the sector's, class by class.
Partition identify_tableau(int n, int sector);
Partition identify_tableau(const IrreducibilityReport& report);

std::int64_t hook_dimension(const Partition& p);

} // namespace susyqm
