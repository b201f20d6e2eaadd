#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace susyqm {

/**
 * Pointwise Taylor data of a vector-valued function of n coordinates.
 * Derivative tensors are fully symmetric; only the stored order is valid.
 */
struct VectorJet {
    int order = 0;
    Eigen::VectorXd value;
    std::vector<Eigen::VectorXd> d1;                            // [m]
    std::vector<std::vector<Eigen::VectorXd>> d2;               // [m][k]
    std::vector<std::vector<std::vector<Eigen::VectorXd>>> d3;  // [m][k][p]

    static VectorJet zero(Eigen::Index dim, int n, int order);
    [[nodiscard]] int coords() const { return static_cast<int>(d1.size()); }
    [[nodiscard]] Eigen::Index dim() const { return value.size(); }
};

/// Component-wise (alpha + beta . (x - c)) exp(-|x - c|^2 / (2 sigma^2)).
struct TestFunction {
    Eigen::VectorXd center;
    double sigma = 1.0;
    Eigen::VectorXd alpha;  // per component
    Eigen::MatrixXd beta;   // component x coordinate

    [[nodiscard]] VectorJet jet(const Eigen::VectorXd& x, int order) const;
};

std::vector<TestFunction> test_function_suite(int n, Eigen::Index dim, int count, std::uint64_t seed,
                                              const Eigen::VectorXd& center, double spread);

/// sum_l C_l d_l + Z(x), with the derivatives of Z supplied analytically.
struct FirstOrderOperator {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    std::vector<Eigen::MatrixXd> coef;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> zeroth;
    std::function<std::vector<Eigen::MatrixXd>(const Eigen::VectorXd&)> zeroth_d1;
    std::function<std::vector<std::vector<Eigen::MatrixXd>>(const Eigen::VectorXd&)> zeroth_d2;
};

/// Applies op to f, returning a jet of out_order; f must carry out_order + 1.
VectorJet apply(const FirstOrderOperator& op, const VectorJet& f, const Eigen::VectorXd& x, int out_order);

/// -1/2 Laplacian + V(x).
struct SchrodingerOperator {
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> potential;
    std::function<std::vector<Eigen::MatrixXd>(const Eigen::VectorXd&)> potential_d1;
};

/// Applies H to f, returning a jet of out_order (0 or 1); f must carry out_order + 2.
VectorJet apply(const SchrodingerOperator& h, const VectorJet& f, const Eigen::VectorXd& x, int out_order);

VectorJet operator+(const VectorJet& a, const VectorJet& b);

} // namespace susyqm
