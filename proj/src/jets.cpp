#include "susyqm/jets.hpp"

#include "susyqm/errors.hpp"

#include <algorithm>
#include <random>

namespace susyqm {

VectorJet VectorJet::zero(Eigen::Index dim, int n, int order) {
    VectorJet j;
    j.order = order;
    const Eigen::VectorXd z = Eigen::VectorXd::Zero(dim);
    const auto un = static_cast<std::size_t>(n);
    j.value = z;
    j.d1.assign(un, z);
    if (order >= 2) j.d2.assign(un, std::vector<Eigen::VectorXd>(un, z));
    if (order >= 3) j.d3.assign(un, std::vector<std::vector<Eigen::VectorXd>>(un, std::vector<Eigen::VectorXd>(un, z)));
    return j;
}

VectorJet TestFunction::jet(const Eigen::VectorXd& x, int order) const {
    if (order < 0 || order > 3) throw Error(ErrorCode::DerivativeOrder, "test functions provide derivatives up to third order");
    const int n = static_cast<int>(x.size());
    const Eigen::Index dim = alpha.size();
    const Eigen::VectorXd r = x - center;
    const double s = sigma * sigma;
    const double g = std::exp(-r.squaredNorm() / (2 * s));
    const auto dl = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    const auto g1 = [&](int m) { return -r(m) / s * g; };
    const auto g2 = [&](int m, int k) { return (r(m) * r(k) / (s * s) - dl(m, k) / s) * g; };
    const auto g3 = [&](int m, int k, int p) {
        return (-r(m) * r(k) * r(p) / (s * s * s) + (dl(m, k) * r(p) + dl(m, p) * r(k) + dl(k, p) * r(m)) / (s * s)) * g;
    };
    const Eigen::VectorXd poly = alpha + beta * r;

    VectorJet j = VectorJet::zero(dim, n, std::max(order, 1));
    j.order = order;
    j.value = poly * g;
    for (int m = 0; m < n; ++m) {
        j.d1[static_cast<std::size_t>(m)] = beta.col(m) * g + poly * g1(m);
    }
    if (order >= 2) {
        for (int m = 0; m < n; ++m) {
            for (int k = 0; k < n; ++k) {
                j.d2[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                    beta.col(m) * g1(k) + beta.col(k) * g1(m) + poly * g2(m, k);
            }
        }
    }
    if (order >= 3) {
        for (int m = 0; m < n; ++m) {
            for (int k = 0; k < n; ++k) {
                for (int p = 0; p < n; ++p) {
                    j.d3[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] =
                        beta.col(m) * g2(k, p) + beta.col(k) * g2(m, p) + beta.col(p) * g2(m, k) + poly * g3(m, k, p);
                }
            }
        }
    }
    return j;
}

std::vector<TestFunction> test_function_suite(int n, Eigen::Index dim, int count, std::uint64_t seed,
                                              const Eigen::VectorXd& center, double spread) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<TestFunction> out;
    for (int t = 0; t < count; ++t) {
        TestFunction f;
        f.center = center;
        for (int m = 0; m < n; ++m) f.center(m) += 0.25 * spread * u(rng);
        f.sigma = spread * (0.75 + 0.25 * u(rng));
        f.alpha = Eigen::VectorXd(dim);
        f.beta = Eigen::MatrixXd(dim, n);
        for (Eigen::Index c = 0; c < dim; ++c) {
            f.alpha(c) = u(rng);
            for (int m = 0; m < n; ++m) f.beta(c, m) = u(rng) / spread;
        }
        out.push_back(std::move(f));
    }
    return out;
}

VectorJet apply(const FirstOrderOperator& op, const VectorJet& f, const Eigen::VectorXd& x, int out_order) {
    if (f.order < out_order + 1) throw Error(ErrorCode::DerivativeOrder, "input jet too short for a first-order operator");
    if (f.dim() != op.cols) throw Error(ErrorCode::DimensionMismatch, "operator and jet dimensions differ");
    const int n = f.coords();
    const auto un = static_cast<std::size_t>(n);
    VectorJet out = VectorJet::zero(op.rows, n, std::max(out_order, 1));
    out.order = out_order;
    const Eigen::MatrixXd z = op.zeroth(x);

    out.value = z * f.value;
    for (std::size_t l = 0; l < un; ++l) out.value += op.coef[l] * f.d1[l];
    if (out_order >= 1) {
        const auto z1 = op.zeroth_d1(x);
        for (std::size_t m = 0; m < un; ++m) {
            Eigen::VectorXd v = z1[m] * f.value + z * f.d1[m];
            for (std::size_t l = 0; l < un; ++l) v += op.coef[l] * f.d2[l][m];
            out.d1[m] = v;
        }
    }
    if (out_order >= 2) {
        const auto z1 = op.zeroth_d1(x);
        const auto z2 = op.zeroth_d2(x);
        for (std::size_t m = 0; m < un; ++m) {
            for (std::size_t k = 0; k < un; ++k) {
                Eigen::VectorXd v = z2[m][k] * f.value + z1[m] * f.d1[k] + z1[k] * f.d1[m] + z * f.d2[m][k];
                for (std::size_t l = 0; l < un; ++l) v += op.coef[l] * f.d3[l][m][k];
                out.d2[m][k] = v;
            }
        }
    }
    return out;
}

VectorJet apply(const SchrodingerOperator& h, const VectorJet& f, const Eigen::VectorXd& x, int out_order) {
    if (out_order > 1) throw Error(ErrorCode::DerivativeOrder, "Schrodinger jets are produced up to first order");
    if (f.order < out_order + 2) throw Error(ErrorCode::DerivativeOrder, "input jet too short for a second-order operator");
    const int n = f.coords();
    const auto un = static_cast<std::size_t>(n);
    const Eigen::MatrixXd v = h.potential(x);
    VectorJet out = VectorJet::zero(v.rows(), n, 1);
    out.order = out_order;
    out.value = v * f.value;
    for (std::size_t l = 0; l < un; ++l) out.value -= 0.5 * f.d2[l][l];
    if (out_order >= 1) {
        const auto dv = h.potential_d1(x);
        for (std::size_t m = 0; m < un; ++m) {
            Eigen::VectorXd g = dv[m] * f.value + v * f.d1[m];
            for (std::size_t l = 0; l < un; ++l) g -= 0.5 * f.d3[l][l][m];
            out.d1[m] = g;
        }
    }
    return out;
}

VectorJet operator+(const VectorJet& a, const VectorJet& b) {
    VectorJet out = a;
    out.order = std::min(a.order, b.order);
    out.value += b.value;
    for (std::size_t m = 0; m < out.d1.size(); ++m) out.d1[m] += b.d1[m];
    if (out.order >= 2) {
        for (std::size_t m = 0; m < out.d2.size(); ++m) {
            for (std::size_t k = 0; k < out.d2[m].size(); ++k) out.d2[m][k] += b.d2[m][k];
        }
    }
    return out;
}

} // namespace susyqm
