#include "oracles.hpp"

#include "susyqm/errors.hpp"
#include "susyqm/superpotential.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace susyqm;

namespace {

// Independent closed forms for U' and the pairwise term.
double u1(const std::string& name, double a, double b, double x) {
    if (name == "calogero") return a * x + b / x;
    if (name == "linear") return x > 0 ? a : -a;
    if (name == "sutherland") return a / std::tan(x);
    return a / std::tanh(x);
}

double v0(const std::string& name, double a, double b, double x) {
    if (name == "calogero") return -a * a * x * x / 2.0 - a * b;
    if (name == "sutherland") return a * a / 3.0;
    return -a * a / 3.0;
}

} // namespace

TEST_CASE("functional equation against independent closed forms") {
    const std::vector<std::pair<std::string, std::map<std::string, double>>> models = {
        {"calogero", {{"a", 1.0}, {"b", 2.0}}}, {"sutherland", {{"a", 1.0}}}, {"hyperbolic", {{"a", 0.7}}}, {"linear", {{"a", 1.3}}}};
    for (const auto& [name, params] : models) {
        const auto pm = pair_model(name, params);
        const double a = params.at("a"), b = params.count("b") ? params.at("b") : 0.0;
        for (const auto& s : sample_functional_eq(pm, 1000, 5)) {
            const double A = s.A, B = s.B, C = -s.A - s.B;
            const double lhs = u1(name, a, b, A) * u1(name, a, b, B) + u1(name, a, b, A) * u1(name, a, b, C) +
                               u1(name, a, b, B) * u1(name, a, b, C);
            const double rhs = v0(name, a, b, A) + v0(name, a, b, B) + v0(name, a, b, C);
            const double scale = 1.0 + std::abs(lhs);
            CHECK(std::abs(lhs - rhs) < 1e-11 * scale);
            CHECK(s.residual < 1e-12 * scale);
            CHECK(std::abs(pm.v0(A) - v0(name, a, b, A)) < 1e-14 * (1.0 + std::abs(A * A)));
        }
    }
}

TEST_CASE("pair-model derivatives match finite differences") {
    for (const auto& name : pair_model_names()) {
        std::map<std::string, double> params = {{"a", 1.1}};
        if (name == "calogero") params["b"] = 0.4;
        const auto pm = pair_model(name, params);
        for (double x : {0.37, 0.9, 1.4, 2.2}) {
            const auto f = [&](double (PairModel::*g)(double) const) {
                return [&pm, g](const Eigen::VectorXd& v) { return (pm.*g)(v(0)); };
            };
            Eigen::VectorXd p(1);
            p << x;
            CHECK(std::abs(oracle::fd_gradient(f(&PairModel::U), p, 1e-3)(0) - pm.U1(x)) < 1e-8);
            CHECK(std::abs(oracle::fd_gradient(f(&PairModel::U1), p, 1e-3)(0) - pm.U2(x)) < 1e-7);
            CHECK(std::abs(oracle::fd_gradient(f(&PairModel::U2), p, 1e-3)(0) - pm.U3(x)) < 1e-6);
        }
    }
}

TEST_CASE("registry validation") {
    CHECK_THROWS_AS(pair_model("weierstrass", {{"a", 1.0}}), Error);
    CHECK_THROWS_AS(pair_model("nope", {}), Error);
    CHECK_THROWS_AS(pair_model("sutherland", {{"a", -1.0}}), Error);
    try {
        pair_model("weierstrass", {});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownModel);
    }
    CHECK_THROWS_AS(static_cast<void>(pair_model("sutherland", {{"a", 1.0}}).U(M_PI)), Error);
    CHECK_THROWS_AS(example3(0.0), Error);
}

TEST_CASE("example3 derivatives and separability") {
    const auto sp = example3(1.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<Eigen::VectorXd> pts;
    for (int t = 0; t < 20; ++t) {
        Eigen::VectorXd x(3);
        for (int i = 0; i < 3; ++i) x(i) = u(rng);
        pts.push_back(x);
        CHECK((oracle::fd_gradient(sp.w, x, 1e-3) - sp.grad(x)).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((oracle::fd_jacobian(sp.grad, x, 1e-3) - sp.hess(x)).cwiseAbs().maxCoeff() < 1e-8);
        const auto third = sp.third(x);
        for (int k = 0; k < 3; ++k) {
            const auto hk = [&](const Eigen::VectorXd& y) { return Eigen::VectorXd(sp.hess(y).col(k)); };
            CHECK((oracle::fd_jacobian(hk, x, 1e-3) - third[static_cast<std::size_t>(k)]).cwiseAbs().maxCoeff() < 1e-7);
        }
        CHECK(std::abs(sp.grad(x).sum()) < 1e-12);
    }
    const auto rep = check_separability(sp, pts);
    CHECK(rep.pass);
}

TEST_CASE("a superpotential with a center-of-mass dependence in w fails separability") {
    auto sp = example3(1.0);
    sp.w = [](const Eigen::VectorXd& x) { return x.sum() * x.sum(); };
    sp.grad = [](const Eigen::VectorXd& x) { return Eigen::VectorXd(Eigen::VectorXd::Constant(3, 2.0 * x.sum())); };
    sp.hess = [](const Eigen::VectorXd&) { return Eigen::MatrixXd(Eigen::MatrixXd::Constant(3, 3, 2.0)); };
    sp.third = nullptr;
    std::vector<Eigen::VectorXd> pts = {Eigen::Vector3d(0.1, 0.5, -0.2), Eigen::Vector3d(1.0, 0.3, 0.4)};
    CHECK_FALSE(check_separability(sp, pts).pass);
}

TEST_CASE("pairwise superpotential sums the pair interaction") {
    const auto pm = pair_model("sutherland", {{"a", 2.0}});
    const auto sp = pairwise_superpotential(pm, 4);
    Eigen::VectorXd x(4);
    x << 0.1, 0.8, 1.7, 2.9;
    double w = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) w += 2.0 * std::log(std::abs(std::sin(x(i) - x(j))));
    }
    CHECK(std::abs(sp.w(x) - w) < 1e-13);
    CHECK((oracle::fd_gradient(sp.w, x, 1e-3) - sp.grad(x)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((oracle::fd_jacobian(sp.grad, x, 1e-3) - sp.hess(x)).cwiseAbs().maxCoeff() < 1e-7);
    Eigen::VectorXd bad = x;
    bad(1) = bad(0) + M_PI;
    CHECK_THROWS_AS(sp.guard(bad), Error);
}

TEST_CASE("table diagnostic separates the two readings of the printed column") {
    const auto pm = pair_model("sutherland", {{"a", 1.0}});
    const auto d = model_table_diagnostic(pm, {0.4, 1.0, 2.0});
    for (const auto& row : d.rows) {
        const double u = 1.0 / std::tan(row.x);
        CHECK(std::abs(row.derived - (u * u + 1.0 / 3.0)) < 1e-12);
        CHECK(std::abs(row.pairwise - (u * u - 1.0 / 3.0)) < 1e-12);
    }
}
