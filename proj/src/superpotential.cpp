#include "susyqm/superpotential.hpp"

#include "susyqm/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace susyqm {

double Superpotential::y_cm(const Eigen::VectorXd& x) const { return x.sum() / std::sqrt(static_cast<double>(n)); }

ThirdDerivative third_derivatives(const Superpotential& sp, const Eigen::VectorXd& x, double scale, bool force_stencil) {
    if (sp.has_third() && !force_stencil) return sp.third(x);
    if (!sp.hess) throw Error(ErrorCode::DerivativeOrder, "superpotential provides neither third derivatives nor a Hessian");
    static constexpr std::array<double, 4> c{4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
    const double h = 1e-3 * scale;
    ThirdDerivative t(static_cast<std::size_t>(sp.n));
    for (int k = 0; k < sp.n; ++k) {
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(sp.n, sp.n);
        for (int m = 1; m <= 4; ++m) {
            Eigen::VectorXd xp = x;
            Eigen::VectorXd xm = x;
            xp(k) += m * h;
            xm(k) -= m * h;
            acc += c[static_cast<std::size_t>(m - 1)] * (sp.hess(xp) - sp.hess(xm));
        }
        t[static_cast<std::size_t>(k)] = acc / h;
    }
    return t;
}

Superpotential free_superpotential(int n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
    Superpotential sp;
    sp.n = n;
    sp.name = "free";
    sp.w = [](const Eigen::VectorXd&) { return 0.0; };
    sp.grad = [n](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(n).eval(); };
    sp.hess = [n](const Eigen::VectorXd&) { return Eigen::MatrixXd::Zero(n, n).eval(); };
    sp.third = [n](const Eigen::VectorXd&) { return ThirdDerivative(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n)); };
    return sp;
}

Superpotential example3(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "example3 requires a > 0");
    constexpr int n = 3;
    // S = sum_{j<k} (x_j - x_k)^2, g = grad S, G = Hessian of S (constant).
    const auto S = [](const Eigen::VectorXd& x) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) s += (x(j) - x(k)) * (x(j) - x(k));
        }
        return s;
    };
    const auto g = [](const Eigen::VectorXd& x) { return Eigen::VectorXd(2.0 * (3.0 * x.array() - x.sum())); };
    const Eigen::MatrixXd G = 2.0 * (n * Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Ones(n, n));

    Superpotential sp;
    sp.n = n;
    sp.name = "example3";
    sp.params = {{"a", a}};
    sp.w = [a, S](const Eigen::VectorXd& x) {
        const double s = S(x);
        return -std::log(3.0 + a * s) - a / 6.0 * s;
    };
    sp.grad = [a, S, g](const Eigen::VectorXd& x) {
        const double d = 3.0 + a * S(x);
        return ((-a / d - a / 6.0) * g(x)).eval();
    };
    sp.hess = [a, S, g, G](const Eigen::VectorXd& x) {
        const double d = 3.0 + a * S(x);
        const Eigen::VectorXd gv = g(x);
        return ((-a / d - a / 6.0) * G + (a * a / (d * d)) * gv * gv.transpose()).eval();
    };
    sp.third = [a, S, g, G](const Eigen::VectorXd& x) {
        const double d = 3.0 + a * S(x);
        const Eigen::VectorXd gv = g(x);
        ThirdDerivative t(n, Eigen::MatrixXd::Zero(n, n));
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    t[static_cast<std::size_t>(k)](i, j) =
                        a * a * (G(i, j) * gv(k) + G(i, k) * gv(j) + G(j, k) * gv(i)) / (d * d) -
                        2.0 * a * a * a * gv(i) * gv(j) * gv(k) / (d * d * d);
                }
            }
        }
        return t;
    };
    sp.wc = [a](double y) { return -0.5 * a * y * y; };
    sp.wc_d1 = [a](double y) { return -a * y; };
    sp.wc_d2 = [a](double) { return -a; };
    return sp;
}

SeparabilityReport check_separability(const Superpotential& sp, const std::vector<Eigen::VectorXd>& samples) {
    SeparabilityReport rep;
    const double h = 1e-4;
    for (const auto& x : samples) {
        sp.guard(x);
        const Eigen::VectorXd gr = sp.grad(x);
        const Eigen::MatrixXd he = sp.hess(x);
        rep.max_gradient_sum = std::max(rep.max_gradient_sum, std::abs(gr.sum()));
        rep.max_hessian_asymmetry = std::max(rep.max_hessian_asymmetry, (he - he.transpose()).cwiseAbs().maxCoeff());

        Eigen::VectorXd gfd(sp.n);
        Eigen::MatrixXd hfd(sp.n, sp.n);
        const double w0 = sp.w(x);
        for (int i = 0; i < sp.n; ++i) {
            Eigen::VectorXd xp = x;
            Eigen::VectorXd xm = x;
            xp(i) += h;
            xm(i) -= h;
            gfd(i) = (sp.w(xp) - sp.w(xm)) / (2 * h);
            hfd(i, i) = (sp.w(xp) - 2 * w0 + sp.w(xm)) / (h * h);
            for (int j = i + 1; j < sp.n; ++j) {
                Eigen::VectorXd xpp = xp, xpm = xp, xmp = xm, xmm = xm;
                xpp(j) += h;
                xpm(j) -= h;
                xmp(j) += h;
                xmm(j) -= h;
                hfd(i, j) = hfd(j, i) = (sp.w(xpp) - sp.w(xpm) - sp.w(xmp) + sp.w(xmm)) / (4 * h * h);
            }
        }
        const double gscale = std::max(1.0, gr.cwiseAbs().maxCoeff());
        const double hscale = std::max(1.0, he.cwiseAbs().maxCoeff());
        rep.max_gradient_error = std::max(rep.max_gradient_error, (gfd - gr).cwiseAbs().maxCoeff() / gscale);
        rep.max_hessian_error = std::max(rep.max_hessian_error, (hfd - he).cwiseAbs().maxCoeff() / hscale);
    }
    rep.separable = rep.max_gradient_sum < 1e-10;
    rep.derivatives_consistent = rep.max_gradient_error < 1e-6 && rep.max_hessian_error < 1e-6 && rep.max_hessian_asymmetry < 1e-12;
    rep.pass = rep.separable && rep.derivatives_consistent;
    return rep;
}

double PairModel::singular_distance(double x) const {
    if (kind == PairKind::Sutherland) {
        const double pi = std::numbers::pi;
        return std::abs(x - pi * std::round(x / pi));
    }
    return std::abs(x);
}

void PairModel::guard(double x) const {
    if (!std::isfinite(x)) throw Error(ErrorCode::SingularArgument, "non-finite pair argument");
    if (singular_at_zero && singular_distance(x) < kSingularityGuard) {
        throw Error(ErrorCode::SingularArgument, name + " pair interaction evaluated at a singular argument");
    }
}

double PairModel::U(double x) const {
    guard(x);
    switch (kind) {
    case PairKind::Calogero: return 0.5 * a * x * x + b * std::log(std::abs(x));
    case PairKind::Linear: return a * std::abs(x);
    case PairKind::Sutherland: return a * std::log(std::abs(std::sin(x)));
    case PairKind::Hyperbolic: return a * std::log(std::abs(std::sinh(x)));
    }
    return 0.0;
}

double PairModel::U1(double x) const {
    guard(x);
    switch (kind) {
    case PairKind::Calogero: return a * x + b / x;
    case PairKind::Linear: return x > 0 ? a : -a;
    case PairKind::Sutherland: return a * std::cos(x) / std::sin(x);
    case PairKind::Hyperbolic: return a * std::cosh(x) / std::sinh(x);
    }
    return 0.0;
}

double PairModel::U2(double x) const {
    guard(x);
    switch (kind) {
    case PairKind::Calogero: return a - b / (x * x);
    case PairKind::Linear: return 0.0;
    case PairKind::Sutherland: {
        const double s = std::sin(x);
        return -a / (s * s);
    }
    case PairKind::Hyperbolic: {
        const double s = std::sinh(x);
        return -a / (s * s);
    }
    }
    return 0.0;
}

double PairModel::U3(double x) const {
    guard(x);
    switch (kind) {
    case PairKind::Calogero: return 2.0 * b / (x * x * x);
    case PairKind::Linear: return 0.0;
    case PairKind::Sutherland: {
        const double s = std::sin(x);
        return 2.0 * a * std::cos(x) / (s * s * s);
    }
    case PairKind::Hyperbolic: {
        const double s = std::sinh(x);
        return 2.0 * a * std::cosh(x) / (s * s * s);
    }
    }
    return 0.0;
}

double PairModel::v0(double x) const {
    switch (kind) {
    case PairKind::Calogero: return -0.5 * a * a * x * x - a * b;
    case PairKind::Linear: return -a * a / 3.0;
    case PairKind::Sutherland: return a * a / 3.0;
    case PairKind::Hyperbolic: return -a * a / 3.0;
    }
    return 0.0;
}

double PairModel::v0_d1(double x) const { return kind == PairKind::Calogero ? -a * a * x : 0.0; }

double PairModel::printed_v(double x) const {
    guard(x);
    switch (kind) {
    case PairKind::Calogero: return b * (b + 1) / (x * x) + 1.5 * a * a * x * x + 3 * a * b + a;
    case PairKind::Linear: return a * a - a * a / 3.0;
    case PairKind::Sutherland: {
        const double s = std::sin(x);
        return a * (a - 1) / (s * s) - 4.0 / 3.0 * a * a;
    }
    case PairKind::Hyperbolic: {
        const double s = std::sinh(x);
        return a * (a - 1) / (s * s) + 2.0 / 3.0 * a * a;
    }
    }
    return 0.0;
}

std::vector<std::string> pair_model_names() { return {"calogero", "linear", "sutherland", "hyperbolic"}; }

PairModel pair_model(const std::string& name, const std::map<std::string, double>& params) {
    PairModel m;
    m.name = name;
    if (name == "calogero") m.kind = PairKind::Calogero;
    else if (name == "linear") m.kind = PairKind::Linear;
    else if (name == "sutherland") m.kind = PairKind::Sutherland;
    else if (name == "hyperbolic") m.kind = PairKind::Hyperbolic;
    else if (name == "weierstrass") throw Error(ErrorCode::UnknownModel, "the Weierstrass pair model is not supported");
    else throw Error(ErrorCode::UnknownModel, "unknown pair model '" + name + "'");

    for (const auto& [key, value] : params) {
        if (key != "a" && !(key == "b" && m.kind == PairKind::Calogero)) {
            throw Error(ErrorCode::InvalidArgument, "parameter '" + key + "' is not used by model " + name);
        }
        if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "parameter '" + key + "' must be finite");
    }
    if (auto it = params.find("a"); it != params.end()) m.a = it->second;
    if (auto it = params.find("b"); it != params.end()) m.b = it->second;
    if (!(m.a > 0.0)) throw Error(ErrorCode::InvalidArgument, "parameter a must be positive");
    // A Calogero model with b = 0 is a plain oscillator and has no singularity.
    m.singular_at_zero = !(m.kind == PairKind::Calogero && m.b == 0.0);
    return m;
}

double functional_eq_residual(const PairModel& model, double A, double B) {
    const double C = -A - B;
    for (double v : {A, B, C}) {
        if (model.singular_distance(v) < kSingularityGuard) {
            throw Error(ErrorCode::SingularArgument, "functional equation evaluated at a singular argument");
        }
    }
    const double ua = model.U1(A), ub = model.U1(B), uc = model.U1(C);
    const double lhs = ua * ub + ua * uc + ub * uc;
    const double rhs = model.v0(A) + model.v0(B) + model.v0(C);
    return std::abs(lhs - rhs);
}

std::vector<FunctionalEqSample> sample_functional_eq(const PairModel& model, int count, std::uint64_t seed, double margin) {
    if (count < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    std::vector<FunctionalEqSample> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        const double A = dist(rng);
        const double B = dist(rng);
        const double C = -A - B;
        if (model.singular_distance(A) < margin || model.singular_distance(B) < margin || model.singular_distance(C) < margin) {
            continue;
        }
        out.push_back({A, B, functional_eq_residual(model, A, B)});
    }
    return out;
}

Superpotential pairwise_superpotential(const PairModel& model, int n, bool calogero_cmm) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
    if (calogero_cmm && model.kind != PairKind::Calogero) {
        throw Error(ErrorCode::InvalidArgument, "the center-of-mass oscillator term applies to the Calogero model only");
    }
    Superpotential sp;
    sp.n = n;
    sp.name = model.name;
    sp.params = {{"a", model.a}};
    if (model.kind == PairKind::Calogero) sp.params["b"] = model.b;
    sp.guard = [model, n](const Eigen::VectorXd& x) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) model.guard(x(i) - x(j));
        }
    };
    sp.w = [model, n](const Eigen::VectorXd& x) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) s += model.U(x(i) - x(j));
        }
        return s;
    };
    sp.grad = [model, n](const Eigen::VectorXd& x) {
        Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double u1 = model.U1(x(i) - x(j));
                g(i) += u1;
                g(j) -= u1;
            }
        }
        return g;
    };
    sp.hess = [model, n](const Eigen::VectorXd& x) {
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double u2 = model.U2(x(i) - x(j));
                h(i, i) += u2;
                h(j, j) += u2;
                h(i, j) -= u2;
                h(j, i) -= u2;
            }
        }
        return h;
    };
    sp.third = [model, n](const Eigen::VectorXd& x) {
        ThirdDerivative t(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double u3 = model.U3(x(p) - x(q));
                Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
                e(p) = 1.0;
                e(q) = -1.0;
                const Eigen::MatrixXd outer = e * e.transpose();
                t[static_cast<std::size_t>(p)] += u3 * outer;
                t[static_cast<std::size_t>(q)] -= u3 * outer;
            }
        }
        return t;
    };
    if (calogero_cmm) {
        const double an = model.a * n;
        sp.params["cmm"] = 1.0;
        sp.wc = [an](double y) { return 0.5 * an * y * y; };
        sp.wc_d1 = [an](double y) { return an * y; };
        sp.wc_d2 = [an](double) { return an; };
    }
    return sp;
}

ModelTableDiagnostic model_table_diagnostic(const PairModel& model, const std::vector<double>& xs) {
    ModelTableDiagnostic d;
    d.model = model.name;
    for (double x : xs) {
        const double u1 = model.U1(x);
        ModelTableRow row{x, model.printed_v(x), u1 * u1 + model.v0(x), u1 * u1 - model.v0(x)};
        d.max_difference = std::max(d.max_difference, std::abs(row.printed - row.derived));
        d.max_pairwise_difference = std::max(d.max_pairwise_difference, std::abs(row.printed - row.pairwise));
        d.rows.push_back(row);
    }
    // Feed printed V - U'^2 into the functional equation on triples built from the sample points.
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            const double A = xs[i], B = xs[j], C = -A - B;
            if (model.singular_distance(C) < 0.1) continue;
            const auto v = [&](double t) {
                const double u = model.U1(t);
                return model.printed_v(t) - u * u;
            };
            const double lhs = model.U1(A) * model.U1(B) + model.U1(A) * model.U1(C) + model.U1(B) * model.U1(C);
            d.printed_eq_residual = std::max(d.printed_eq_residual, std::abs(lhs - v(A) - v(B) - v(C)));
        }
    }
    return d;
}

} // namespace susyqm
