#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace susyqm {

/// Third derivatives stored as one matrix per direction: t[k](i, j) = d_i d_j d_k w.
using ThirdDerivative = std::vector<Eigen::MatrixXd>;

/**
 * Superpotential W(x) = w(x) + W_C(y_N) with y_N = (x_1 + ... + x_N)/sqrt(N).
 *
 * The relative part w and its derivatives act on particle coordinates. The
 * center-of-mass part W_C is a function of one variable and defaults to zero.
 * `guard` throws singular-argument when a point is too close to a singularity.
 */
struct Superpotential {
    int n = 0;
    std::string name;
    std::map<std::string, double> params;

    std::function<double(const Eigen::VectorXd&)> w;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hess;
    std::function<ThirdDerivative(const Eigen::VectorXd&)> third;

    std::function<double(double)> wc = [](double) { return 0.0; };
    std::function<double(double)> wc_d1 = [](double) { return 0.0; };
    std::function<double(double)> wc_d2 = [](double) { return 0.0; };
    std::function<double(double)> wc_d3 = [](double) { return 0.0; };

    std::function<void(const Eigen::VectorXd&)> guard = [](const Eigen::VectorXd&) {};

    [[nodiscard]] bool has_third() const { return static_cast<bool>(third); }
    [[nodiscard]] double y_cm(const Eigen::VectorXd& x) const;
};

/// Analytic third derivatives when available, otherwise an 8th-order central stencil on hess.
ThirdDerivative third_derivatives(const Superpotential& sp, const Eigen::VectorXd& x, double scale = 1.0,
                                  bool force_stencil = false);

/// w = W_C = 0.
Superpotential free_superpotential(int n);

/// Three-particle example: w = -ln(3 + aS) - (a/6) S with S = sum_{j<k} (x_j - x_k)^2, W_C = -(a/2) y^2.
Superpotential example3(double a);

struct SeparabilityReport {
    double max_gradient_sum = 0.0;
    double max_gradient_error = 0.0;
    double max_hessian_error = 0.0;
    double max_hessian_asymmetry = 0.0;
    bool separable = false;
    bool derivatives_consistent = false;
    bool pass = false;
};

SeparabilityReport check_separability(const Superpotential& sp, const std::vector<Eigen::VectorXd>& samples);

enum class PairKind { Calogero, Linear, Sutherland, Hyperbolic };

/// Even pair interaction U with the derivatives and the pairwise decomposition term v0.
struct PairModel {
    std::string name;
    PairKind kind = PairKind::Calogero;
    double a = 1.0;
    double b = 0.0;
    bool singular_at_zero = true;

    /// Distance to the nearest singular argument.
    [[nodiscard]] double singular_distance(double x) const;
    void guard(double x) const;

    [[nodiscard]] double U(double x) const;
    [[nodiscard]] double U1(double x) const;
    [[nodiscard]] double U2(double x) const;
    [[nodiscard]] double U3(double x) const;
    [[nodiscard]] double v0(double x) const;
    [[nodiscard]] double v0_d1(double x) const;
    /// The V column as printed in the model table, delta terms dropped.
    [[nodiscard]] double printed_v(double x) const;
};

inline constexpr double kSingularityGuard = 1e-8;

std::vector<std::string> pair_model_names();

/// Registry lookup. Calogero reads a and b, the others read a.
PairModel pair_model(const std::string& name, const std::map<std::string, double>& params);

/// |U'(A)U'(B) + U'(A)U'(C) + U'(B)U'(C) - v0(A) - v0(B) - v0(C)| with C = -A - B.
double functional_eq_residual(const PairModel& model, double A, double B);

struct FunctionalEqSample {
    double A = 0.0;
    double B = 0.0;
    double residual = 0.0;
};

/// Seeded random (A, B) pairs kept at least `margin` away from singular arguments.
std::vector<FunctionalEqSample> sample_functional_eq(const PairModel& model, int count, std::uint64_t seed,
                                                     double margin = 0.1);

/// w = sum_{i<j} U(x_i - x_j). With calogero_cmm the Calogero center-of-mass term W_C = (a N / 2) y^2 is added.
Superpotential pairwise_superpotential(const PairModel& model, int n, bool calogero_cmm = false);

struct ModelTableRow {
    double x = 0.0;
    double printed = 0.0;
    /// U'^2 + v0, the literal reading of the table column.
    double derived = 0.0;
    /// U'^2 - (N - 2) v0 at N = 3, the pair potential that the three-body sum actually produces.
    double pairwise = 0.0;
};

struct ModelTableDiagnostic {
    std::string model;
    std::vector<ModelTableRow> rows;
    double max_difference = 0.0;
    double max_pairwise_difference = 0.0;
    /// Functional-equation residual if printed V - U'^2 were used as v0.
    double printed_eq_residual = 0.0;
};

ModelTableDiagnostic model_table_diagnostic(const PairModel& model, const std::vector<double>& xs);

} // namespace susyqm
