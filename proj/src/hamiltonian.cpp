#include "susyqm/hamiltonian.hpp"

#include "susyqm/combinatorics.hpp"
#include "susyqm/errors.hpp"
#include "susyqm/fock.hpp"
#include "susyqm/jacobi.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace susyqm {

std::string to_string(Branch b) { return b == Branch::Lower ? "lower" : "upper"; }

Branch parse_branch(const std::string& s) {
    if (s == "lower") return Branch::Lower;
    if (s == "upper") return Branch::Upper;
    throw Error(ErrorCode::InvalidArgument, "branch must be 'lower' or 'upper'");
}

Eigen::MatrixXd BlockOperatorSpec::potential(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd m = matrix_potential(x);
    m.diagonal().array() += scalar_potential(x);
    return m;
}

SchrodingerOperator BlockOperatorSpec::as_operator() const {
    return {[spec = *this](const Eigen::VectorXd& x) { return spec.potential(x); }, potential_gradient};
}

namespace {

double branch_sign(Branch b) { return b == Branch::Lower ? -1.0 : 1.0; }

void check_block_sector(int n, int sector) {
    if (sector < 0 || sector > n - 1) throw Error(ErrorCode::InvalidSector, "block sector must lie in [0, n-1]");
}

// Center-of-mass contribution 1/2 (W_C'^2 -/+ W_C'') and its derivative in y.
struct CmmTerm {
    double value;
    double dy;
};

CmmTerm cmm_term(const Superpotential& sp, double y, Branch branch) {
    const double s = branch_sign(branch);
    const double d1 = sp.wc_d1(y), d2 = sp.wc_d2(y), d3 = sp.wc_d3(y);
    return {0.5 * (d1 * d1 + s * d2), d1 * d2 + 0.5 * s * d3};
}

} // namespace

BlockOperatorSpec build_block(const Superpotential& sp, int sector, const BlockOptions& options) {
    check_block_sector(sp.n, sector);
    auto reps = std::make_shared<const RepMatrixSet>(options.reps ? *options.reps : build_rep_matrices(sp.n, sector));
    if (reps->n != sp.n || reps->sector != sector) throw Error(ErrorCode::DimensionMismatch, "representation set does not match the block");
    const int n = sp.n;
    const double rt = std::sqrt(static_cast<double>(n));
    const Branch branch = options.branch;
    const double cmm_weight = options.include_cmm ? 1.0 : 0.0;

    BlockOperatorSpec spec;
    spec.n = n;
    spec.sector = sector;
    spec.branch = branch;
    spec.block_dim = reps->dim();
    spec.model = sp.name;
    spec.params = sp.params;
    spec.scalar_potential = [sp, branch, cmm_weight](const Eigen::VectorXd& x) {
        sp.guard(x);
        return 0.5 * sp.grad(x).squaredNorm() + cmm_weight * cmm_term(sp, sp.y_cm(x), branch).value;
    };
    spec.matrix_potential = [sp, reps, n](const Eigen::VectorXd& x) {
        sp.guard(x);
        const Eigen::MatrixXd h = sp.hess(x);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(reps->dim(), reps->dim());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) m += h(i, j) * reps->at(i + 1, j + 1);
        }
        return m;
    };
    spec.potential_gradient = [sp, reps, n, rt, branch, cmm_weight, force = options.force_stencil,
                               scale = options.stencil_scale](const Eigen::VectorXd& x) {
        sp.guard(x);
        const Eigen::VectorXd g = sp.grad(x);
        const Eigen::MatrixXd h = sp.hess(x);
        const ThirdDerivative t = third_derivatives(sp, x, scale, force);
        const double cmm_dy = cmm_weight * cmm_term(sp, sp.y_cm(x), branch).dy;
        std::vector<Eigen::MatrixXd> out;
        for (int m = 0; m < n; ++m) {
            const auto& tm = t[static_cast<std::size_t>(m)];
            Eigen::MatrixXd d = Eigen::MatrixXd::Zero(reps->dim(), reps->dim());
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) d += tm(i, j) * reps->at(i + 1, j + 1);
            }
            d.diagonal().array() += g.dot(h.col(m)) + cmm_dy / rt;
            out.push_back(std::move(d));
        }
        return out;
    };
    return spec;
}

BlockOperatorSpec build_pairwise_block(const PairModel& model, int n, int sector, Branch branch, bool calogero_cmm) {
    check_block_sector(n, sector);
    const Superpotential sp = pairwise_superpotential(model, n, calogero_cmm);
    auto reps = std::make_shared<const RepMatrixSet>(build_rep_matrices(n, sector));
    const double rt = std::sqrt(static_cast<double>(n));
    const double multiplicity = n - 2;

    BlockOperatorSpec spec;
    spec.n = n;
    spec.sector = sector;
    spec.branch = branch;
    spec.block_dim = reps->dim();
    spec.model = model.name;
    spec.params = sp.params;
    spec.scalar_potential = [model, sp, n, multiplicity, branch](const Eigen::VectorXd& x) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int l = i + 1; l < n; ++l) {
                const double d = x(i) - x(l);
                const double u1 = model.U1(d);
                s += u1 * u1 - multiplicity * model.v0(d);
            }
        }
        return s + cmm_term(sp, sp.y_cm(x), branch).value;
    };
    spec.matrix_potential = [model, reps, n](const Eigen::VectorXd& x) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(reps->dim(), reps->dim());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) m -= model.U2(x(i) - x(j)) * reps->at(i + 1, j + 1);
        }
        return m;
    };
    spec.potential_gradient = [model, sp, reps, n, rt, multiplicity, branch](const Eigen::VectorXd& x) {
        std::vector<Eigen::MatrixXd> out(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(reps->dim(), reps->dim()));
        const double cmm_dy = cmm_term(sp, sp.y_cm(x), branch).dy;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double d = x(i) - x(j);
                const double ds = 2.0 * model.U1(d) * model.U2(d) - multiplicity * model.v0_d1(d);
                const Eigen::MatrixXd dm = -model.U3(d) * reps->at(i + 1, j + 1);
                out[static_cast<std::size_t>(i)] += dm;
                out[static_cast<std::size_t>(j)] -= dm;
                out[static_cast<std::size_t>(i)].diagonal().array() += ds;
                out[static_cast<std::size_t>(j)].diagonal().array() -= ds;
            }
        }
        for (auto& m : out) m.diagonal().array() += cmm_dy / rt;
        return out;
    };
    return spec;
}

CGTensor cg_tensor(int n, int sector) {
    if (sector < 0 || sector > n - 2) throw Error(ErrorCode::InvalidSector, "CG tensors exist for sectors 0..n-2");
    const PhiBasis lo = build_phi_basis(n, sector);
    const PhiBasis hi = build_phi_basis(n, sector + 1);
    CGTensor t{n, sector, {}};
    for (int b = 1; b < n; ++b) {
        t.cg.push_back(hi.vectors.transpose() * multiply(phi_creation_matrix(n, sector, b), lo.vectors));
    }
    return t;
}

namespace {

std::vector<Eigen::MatrixXd> plus_coupling(int n, int sector) {
    const CGTensor t = cg_tensor(n, sector);
    const JacobiMatrix jm = build_R(n);
    std::vector<Eigen::MatrixXd> c;
    for (int l = 0; l < n; ++l) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(t.cg.front().rows(), t.cg.front().cols());
        for (int b = 0; b < n - 1; ++b) m += jm.R(b, l) * t.cg[static_cast<std::size_t>(b)];
        c.push_back(std::move(m));
    }
    return c;
}

// First-order operator sum_l (sign C_l d_l + C_l d_l w) / sqrt(2) with C_l constant.
FirstOrderOperator coupled_operator(const std::vector<Eigen::MatrixXd>& coupling, double sign, const Superpotential& sp,
                                    bool force_stencil, double scale) {
    const double r2 = std::sqrt(2.0);
    FirstOrderOperator op;
    op.rows = coupling.front().rows();
    op.cols = coupling.front().cols();
    for (const auto& c : coupling) op.coef.push_back(sign * c / r2);
    const std::size_t n = coupling.size();
    op.zeroth = [coupling, sp, r2, n](const Eigen::VectorXd& x) {
        const Eigen::VectorXd g = sp.grad(x);
        Eigen::MatrixXd z = Eigen::MatrixXd::Zero(coupling.front().rows(), coupling.front().cols());
        for (std::size_t l = 0; l < n; ++l) z += coupling[l] * (g(static_cast<Eigen::Index>(l)) / r2);
        return z;
    };
    op.zeroth_d1 = [coupling, sp, r2, n](const Eigen::VectorXd& x) {
        const Eigen::MatrixXd h = sp.hess(x);
        std::vector<Eigen::MatrixXd> out;
        for (std::size_t m = 0; m < n; ++m) {
            Eigen::MatrixXd z = Eigen::MatrixXd::Zero(coupling.front().rows(), coupling.front().cols());
            for (std::size_t l = 0; l < n; ++l) z += coupling[l] * (h(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) / r2);
            out.push_back(std::move(z));
        }
        return out;
    };
    op.zeroth_d2 = [coupling, sp, r2, n, force_stencil, scale](const Eigen::VectorXd& x) {
        const ThirdDerivative t = third_derivatives(sp, x, scale, force_stencil);
        std::vector<std::vector<Eigen::MatrixXd>> out(n);
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t k = 0; k < n; ++k) {
                Eigen::MatrixXd z = Eigen::MatrixXd::Zero(coupling.front().rows(), coupling.front().cols());
                for (std::size_t l = 0; l < n; ++l) {
                    z += coupling[l] * (t[k](static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) / r2);
                }
                out[m].push_back(std::move(z));
            }
        }
        return out;
    };
    return op;
}

} // namespace

Eigen::MatrixXd SuperchargeSpec::zeroth(const Eigen::VectorXd& x) const {
    return as_operator().zeroth(x);
}

FirstOrderOperator SuperchargeSpec::as_operator() const {
    return coupled_operator(coupling, direction == Direction::Plus ? 1.0 : -1.0, superpotential, force_stencil, stencil_scale);
}

SuperchargeSpec build_supercharge(const Superpotential& sp, int sector, Direction direction, bool force_stencil,
                                  double stencil_scale) {
    const int n = sp.n;
    SuperchargeSpec q;
    q.n = n;
    q.source = sector;
    q.direction = direction;
    q.superpotential = sp;
    q.force_stencil = force_stencil;
    q.stencil_scale = stencil_scale;
    if (direction == Direction::Plus) {
        if (sector < 0 || sector > n - 2) throw Error(ErrorCode::BoundarySector, "plus supercharge needs source sector in [0, n-2]");
        q.target = sector + 1;
        q.coupling = plus_coupling(n, sector);
    } else {
        if (sector < 1 || sector > n - 1) throw Error(ErrorCode::BoundarySector, "minus supercharge needs source sector in [1, n-1]");
        q.target = sector - 1;
        for (const auto& c : plus_coupling(n, sector - 1)) q.coupling.push_back(c.transpose());
    }
    const double r2 = std::sqrt(2.0);
    const double sign = direction == Direction::Plus ? 1.0 : -1.0;
    for (const auto& c : q.coupling) q.coef.push_back(sign * c / r2);
    return q;
}

namespace {

double relative_gap(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double floor) {
    const double denom = std::max({a.norm(), b.norm(), floor, 1e-300});
    return (a - b).norm() / denom;
}

} // namespace

double intertwining_residual(const Superpotential& sp, int sector, const std::vector<TestFunction>& tests,
                             const std::vector<Eigen::VectorXd>& points, const ResidualOptions& options) {
    if (sector < 0 || sector > sp.n - 2) throw Error(ErrorCode::BoundarySector, "intertwining needs sector in [0, n-2]");
    BlockOptions lo{options.branch, options.source_reps, options.force_stencil, options.stencil_scale};
    BlockOptions hi{options.branch, options.target_reps, options.force_stencil, options.stencil_scale};
    const SchrodingerOperator h0 = build_block(sp, sector, lo).as_operator();
    const SchrodingerOperator h1 = build_block(sp, sector + 1, hi).as_operator();
    const FirstOrderOperator q = build_supercharge(sp, sector, Direction::Plus, options.force_stencil, options.stencil_scale).as_operator();
    double worst = 0.0;
    for (const auto& tf : tests) {
        if (tf.alpha.size() != q.cols) throw Error(ErrorCode::DimensionMismatch, "test function has the wrong number of components");
        for (const auto& x : points) {
            const VectorJet f = tf.jet(x, 3);
            const Eigen::VectorXd lhs = apply(h1, apply(q, f, x, 2), x, 0).value;
            const Eigen::VectorXd rhs = apply(q, apply(h0, f, x, 1), x, 0).value;
            worst = std::max(worst, relative_gap(lhs, rhs, f.value.norm()));
        }
    }
    return worst;
}

double nilpotency_residual(const Superpotential& sp, int sector, const std::vector<TestFunction>& tests,
                           const std::vector<Eigen::VectorXd>& points, bool force_stencil) {
    double worst = 0.0;
    const int n = sp.n;
    const auto chain = [&](const FirstOrderOperator& first, const FirstOrderOperator& second) {
        for (const auto& tf : tests) {
            if (tf.alpha.size() != first.cols) continue;
            for (const auto& x : points) {
                const VectorJet f = tf.jet(x, 2);
                const Eigen::VectorXd r = apply(second, apply(first, f, x, 1), x, 0).value;
                worst = std::max(worst, r.cwiseAbs().maxCoeff());
            }
        }
    };
    if (sector <= n - 3) {
        chain(build_supercharge(sp, sector, Direction::Plus, force_stencil).as_operator(),
              build_supercharge(sp, sector + 1, Direction::Plus, force_stencil).as_operator());
    }
    if (sector >= 2) {
        chain(build_supercharge(sp, sector, Direction::Minus, force_stencil).as_operator(),
              build_supercharge(sp, sector - 1, Direction::Minus, force_stencil).as_operator());
    }
    return worst;
}

namespace {

std::vector<Eigen::MatrixXd> full_psi_creations(int n) {
    std::vector<Eigen::MatrixXd> out;
    for (int l = 1; l <= n; ++l) out.push_back(full_creation(n, l).to_dense());
    return out;
}

Eigen::MatrixXd full_phi_creation(int n, int b, const std::vector<Eigen::MatrixXd>& psi) {
    const JacobiMatrix jm = build_R(n);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(psi.front().rows(), psi.front().cols());
    for (int l = 0; l < n; ++l) m += jm.R(b - 1, l) * psi[static_cast<std::size_t>(l)];
    return m;
}

} // namespace

FirstOrderOperator full_relative_supercharge(const Superpotential& sp, Direction direction) {
    const int n = sp.n;
    const auto psi = full_psi_creations(n);
    const JacobiMatrix jm = build_R(n);
    std::vector<Eigen::MatrixXd> coupling;
    for (int l = 0; l < n; ++l) {
        Eigen::MatrixXd c = Eigen::MatrixXd::Zero(psi.front().rows(), psi.front().cols());
        for (int b = 1; b < n; ++b) c += jm.R(b - 1, l) * full_phi_creation(n, b, psi);
        coupling.push_back(direction == Direction::Plus ? c : Eigen::MatrixXd(c.transpose()));
    }
    return coupled_operator(coupling, direction == Direction::Plus ? 1.0 : -1.0, sp, false, 1.0);
}

FirstOrderOperator full_cmm_supercharge(const Superpotential& sp, Direction direction) {
    const int n = sp.n;
    const auto psi = full_psi_creations(n);
    Eigen::MatrixXd phin = full_phi_creation(n, n, psi);
    if (direction == Direction::Minus) phin.transposeInPlace();
    const double r2 = std::sqrt(2.0);
    const double rn = 1.0 / std::sqrt(static_cast<double>(n));
    const double sign = direction == Direction::Plus ? 1.0 : -1.0;
    FirstOrderOperator op;
    op.rows = phin.rows();
    op.cols = phin.cols();
    op.coef.assign(static_cast<std::size_t>(n), sign * rn / r2 * phin);
    op.zeroth = [sp, phin, r2](const Eigen::VectorXd& x) { return Eigen::MatrixXd(phin * (sp.wc_d1(sp.y_cm(x)) / r2)); };
    op.zeroth_d1 = [sp, phin, r2, rn, n](const Eigen::VectorXd& x) {
        return std::vector<Eigen::MatrixXd>(static_cast<std::size_t>(n), phin * (sp.wc_d2(sp.y_cm(x)) * rn / r2));
    };
    op.zeroth_d2 = [sp, phin, r2, rn, n](const Eigen::VectorXd& x) {
        const auto un = static_cast<std::size_t>(n);
        return std::vector<std::vector<Eigen::MatrixXd>>(
            un, std::vector<Eigen::MatrixXd>(un, phin * (sp.wc_d3(sp.y_cm(x)) * rn * rn / r2)));
    };
    return op;
}

double qc_anticommutator_residual(const Superpotential& sp, const std::vector<TestFunction>& tests,
                                  const std::vector<Eigen::VectorXd>& points) {
    const FirstOrderOperator cp = full_cmm_supercharge(sp, Direction::Plus);
    const FirstOrderOperator cm = full_cmm_supercharge(sp, Direction::Minus);
    const FirstOrderOperator qp = full_relative_supercharge(sp, Direction::Plus);
    const FirstOrderOperator qm = full_relative_supercharge(sp, Direction::Minus);
    const std::vector<std::pair<const FirstOrderOperator*, const FirstOrderOperator*>> pairs{
        {&cp, &qp}, {&cm, &qm}, {&cp, &qm}, {&cm, &qp}};
    double worst = 0.0;
    for (const auto& tf : tests) {
        if (tf.alpha.size() != cp.cols) throw Error(ErrorCode::DimensionMismatch, "test function must span the whole Fock space");
        for (const auto& x : points) {
            const VectorJet f = tf.jet(x, 2);
            for (const auto& [a, b] : pairs) {
                const Eigen::VectorXd ab = apply(*a, apply(*b, f, x, 1), x, 0).value;
                const Eigen::VectorXd ba = apply(*b, apply(*a, f, x, 1), x, 0).value;
                const double denom = std::max({ab.norm(), ba.norm(), f.value.norm(), 1e-300});
                worst = std::max(worst, (ab + ba).norm() / denom);
            }
        }
    }
    return worst;
}

Eigen::MatrixXd hs_potential_hessian_form(const Superpotential& sp, const Eigen::VectorXd& x) {
    sp.guard(x);
    const int n = sp.n;
    const auto psi = full_psi_creations(n);
    const double y = sp.y_cm(x);
    const double rn = std::sqrt(static_cast<double>(n));
    const Eigen::VectorXd grad = sp.grad(x).array() + sp.wc_d1(y) / rn;
    const Eigen::MatrixXd hess = sp.hess(x).array() + sp.wc_d2(y) / n;
    const auto dim = psi.front().rows();
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(dim, dim) * (0.5 * (grad.squaredNorm() - hess.trace()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            p += hess(i, j) * psi[static_cast<std::size_t>(i)] * psi[static_cast<std::size_t>(j)].transpose();
        }
    }
    return p;
}

Eigen::MatrixXd hs_potential_permutation_form(const Superpotential& sp, const Eigen::VectorXd& x) {
    sp.guard(x);
    const int n = sp.n;
    const auto psi = full_psi_creations(n);
    const double y = sp.y_cm(x);
    const Eigen::MatrixXd h = sp.hess(x);
    const auto dim = psi.front().rows();
    const double d1 = sp.wc_d1(y), d2 = sp.wc_d2(y);
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(dim, dim) * (0.5 * (sp.grad(x).squaredNorm() + d1 * d1 - d2));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) p += h(i - 1, j - 1) * full_permutation(n, i, j).to_dense();
    }
    Eigen::MatrixXd total = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& c : psi) total += c;
    p += (d2 / n) * total * total.transpose();
    return p;
}

HsFormReport hs_form_consistency(const Superpotential& sp, const std::vector<Eigen::VectorXd>& samples) {
    const int n = sp.n;
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    HsFormReport rep;

    // Orthonormal phi-adapted basis of each fermion number, embedded into the mask-indexed space.
    struct SectorFrame {
        int m;
        Eigen::MatrixXd lower;  // relative states, phi_N empty
        Eigen::MatrixXd upper;  // phi_N filled
    };
    std::vector<SectorFrame> frames;
    std::vector<BlockOperatorSpec> lower_blocks, upper_blocks;
    for (int m = 0; m <= n; ++m) {
        const FockBasis fb = enumerate_basis(n, m);
        const auto embed = [&](const Eigen::MatrixXd& v) {
            Eigen::MatrixXd e = Eigen::MatrixXd::Zero(dim, v.cols());
            for (std::size_t r = 0; r < fb.size(); ++r) e.row(fb.states[r].mask) = v.row(static_cast<Eigen::Index>(r));
            return e;
        };
        SectorFrame f{m, Eigen::MatrixXd(dim, 0), Eigen::MatrixXd(dim, 0)};
        if (m <= n - 1) f.lower = embed(build_phi_basis(n, m).vectors);
        if (m >= 1) f.upper = embed(build_phi_cmm_states(n, m).vectors);
        frames.push_back(std::move(f));
        if (m <= n - 1) {
            BlockOptions opt;
            lower_blocks.push_back(build_block(sp, m, opt));
            opt.branch = Branch::Upper;
            upper_blocks.push_back(build_block(sp, m, opt));
        }
    }

    for (const auto& x : samples) {
        const Eigen::MatrixXd a = hs_potential_hessian_form(sp, x);
        const Eigen::MatrixXd b = hs_potential_permutation_form(sp, x);
        rep.scale = std::max({rep.scale, a.cwiseAbs().maxCoeff(), 1.0});
        rep.max_form_difference = std::max(rep.max_form_difference, (a - b).cwiseAbs().maxCoeff());
        for (Eigen::Index r = 0; r < dim; ++r) {
            for (Eigen::Index c = 0; c < dim; ++c) {
                if (std::popcount(static_cast<unsigned>(r)) != std::popcount(static_cast<unsigned>(c))) {
                    rep.max_number_coupling = std::max({rep.max_number_coupling, std::abs(a(r, c)), std::abs(b(r, c))});
                }
            }
        }
        for (const auto& f : frames) {
            if (f.lower.cols() > 0) {
                const Eigen::MatrixXd blk = f.lower.transpose() * b * f.lower;
                rep.max_block_difference = std::max(rep.max_block_difference,
                                                    (blk - lower_blocks[static_cast<std::size_t>(f.m)].potential(x)).cwiseAbs().maxCoeff());
            }
            if (f.upper.cols() > 0) {
                const Eigen::MatrixXd blk = f.upper.transpose() * b * f.upper;
                rep.max_block_difference = std::max(rep.max_block_difference,
                                                    (blk - upper_blocks[static_cast<std::size_t>(f.m - 1)].potential(x)).cwiseAbs().maxCoeff());
            }
            if (f.lower.cols() > 0 && f.upper.cols() > 0) {
                rep.max_cmm_coupling = std::max(rep.max_cmm_coupling, (f.lower.transpose() * b * f.upper).cwiseAbs().maxCoeff());
            }
        }
    }
    rep.pass = rep.max_form_difference < 1e-9 * rep.scale && rep.max_block_difference < 1e-9 * rep.scale &&
               rep.max_number_coupling == 0.0 && rep.max_cmm_coupling < 1e-12 * rep.scale;
    return rep;
}

std::vector<Eigen::VectorXd> sample_points(const Superpotential& sp, int count, std::uint64_t seed, const Eigen::VectorXd& base,
                                           double spread) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-spread, spread);
    std::vector<Eigen::VectorXd> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 1000 * count) throw Error(ErrorCode::SingularArgument, "could not draw nonsingular sample points");
        Eigen::VectorXd x = base;
        for (Eigen::Index i = 0; i < x.size(); ++i) x(i) += u(rng);
        try {
            sp.guard(x);
        } catch (const Error&) {
            continue;
        }
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace susyqm
