#include "susyqm/spectral.hpp"

#include "susyqm/combinatorics.hpp"
#include "susyqm/errors.hpp"
#include "susyqm/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

namespace susyqm {

namespace {

using Triplet = Eigen::Triplet<double, int>;

void require_relative_grid(int n, const GridSpec& grid) {
    validate(grid);
    if (grid.dims() != n - 1) {
        throw Error(ErrorCode::DimensionMismatch, "grid must have one axis per relative Jacobi coordinate");
    }
}

CsrMatrix from_triplets(Eigen::Index rows, Eigen::Index cols, const std::vector<Triplet>& t) {
    CsrMatrix m(rows, cols);
    m.setFromTriplets(t.begin(), t.end());
    m.makeCompressed();
    return m;
}

CsrMatrix symmetrized(const CsrMatrix& a) {
    CsrMatrix at = CsrMatrix(a.transpose());
    CsrMatrix s = 0.5 * (a + at);
    s.makeCompressed();
    return s;
}

std::size_t half_flat_of(const GridSpec& grid, const HalfGrid& hg, const ComponentGrid& c, const std::vector<int>& idx) {
    std::vector<int> h(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) h[a] = half_index(grid, idx[a], c.is_link[a]);
    return hg.flat(h);
}

// Sign of phi^+_b between lexicographic Jacobi subsets; the Clebsch-Gordan entries are exactly 0 or +-1.
std::vector<Eigen::MatrixXd> cg_signs(int n, int sector) {
    auto cg = cg_tensor(n, sector).cg;
    for (auto& m : cg) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                const double r = std::round(m(i, j));
                if (std::abs(m(i, j) - r) > 1e-9 || std::abs(r) > 1.0) {
                    throw Error(ErrorCode::InvalidArgument, "phi creation coefficients are not signs");
                }
                m(i, j) = r;
            }
        }
    }
    return cg;
}

std::vector<Eigen::MatrixXd> sample_matrices(std::size_t count, const std::function<Eigen::MatrixXd(std::size_t)>& f,
                                             bool parallel) {
    std::vector<Eigen::MatrixXd> out(count);
    std::vector<std::exception_ptr> errors(count);
    const auto body = [&](std::size_t i) {
        try {
            out[i] = f(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i) body(i);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

} // namespace

Eigen::VectorXd relative_to_particles(int n, const Eigen::VectorXd& y) {
    const auto jac = build_R(n);
    Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
    full.head(n - 1) = y;
    return jac.from_jacobi(full);
}

std::vector<double> sample_w_half_grid(const Superpotential& sp, const GridSpec& grid, bool parallel) {
    require_relative_grid(sp.n, grid);
    const HalfGrid hg = half_grid(grid);
    const auto jac = build_R(sp.n);
    const auto f = [&](std::size_t k) {
        std::vector<int> idx(hg.extent.size());
        for (std::size_t a = hg.extent.size(); a-- > 0;) {
            idx[a] = static_cast<int>(k % static_cast<std::size_t>(hg.extent[a]));
            k /= static_cast<std::size_t>(hg.extent[a]);
        }
        Eigen::VectorXd full = Eigen::VectorXd::Zero(sp.n);
        full.head(sp.n - 1) = half_coordinates(grid, idx);
        const Eigen::VectorXd x = jac.from_jacobi(full);
        sp.guard(x);
        const double w = sp.w(x);
        if (!std::isfinite(w)) throw Error(ErrorCode::SingularArgument, "superpotential is not finite on the grid");
        return w;
    };
    return parallel ? sample_parallel(hg.size(), f) : sample_serial(hg.size(), f);
}

DiscreteOperator discretize_plus(const Superpotential& sp, const GridSpec& grid, int sector,
                                 const std::vector<double>& w_half) {
    require_relative_grid(sp.n, grid);
    const int d = grid.dims();
    if (sector < 0 || sector >= d) throw Error(ErrorCode::BoundarySector, "no plus supercharge out of the top relative sector");
    const HalfGrid hg = half_grid(grid);
    if (w_half.size() != hg.size()) throw Error(ErrorCode::DimensionMismatch, "half-lattice sample has the wrong size");

    DiscreteOperator op;
    op.kind = "supercharge+";
    op.source_sector = sector;
    op.target_sector = sector + 1;
    op.source_layout = sector_layout(grid, sector, true);
    op.target_layout = sector_layout(grid, sector + 1, true);
    const auto signs = cg_signs(sp.n, sector);
    const bool periodic = grid.boundary == Boundary::Periodic;

    std::vector<Triplet> t;
    for (std::size_t ti = 0; ti < op.target_layout.components.size(); ++ti) {
        const auto& tc = op.target_layout.components[ti];
        for (int b : tc.link_axes) {
            std::vector<int> s_axes;
            for (int a : tc.link_axes) {
                if (a != b) s_axes.push_back(a);
            }
            const std::size_t si = subset_rank(d, s_axes);
            const auto& sc = op.source_layout.components[si];
            const double sign = signs[static_cast<std::size_t>(b)](static_cast<Eigen::Index>(ti), static_cast<Eigen::Index>(si));
            if (sign == 0.0) continue;
            const double inv = 1.0 / (std::sqrt(2.0) * grid.step(b));
            const int nodes = grid.node_count(b);
            for (std::size_t k = 0; k < tc.size; ++k) {
                const auto idx = tc.unflat(k);
                const int link = idx[static_cast<std::size_t>(b)];
                const double w_tgt = w_half[half_flat_of(grid, hg, tc, idx)];
                const int hi = periodic ? (link + 1) % nodes : link;
                const int lo = periodic ? link : link - 1;
                const auto row = static_cast<int>(tc.offset + k);
                auto src = idx;
                for (const auto& [node, s] : {std::pair{hi, 1.0}, std::pair{lo, -1.0}}) {
                    if (node < 0 || node >= nodes) continue;
                    src[static_cast<std::size_t>(b)] = node;
                    const double w_src = w_half[half_flat_of(grid, hg, sc, src)];
                    const auto col = static_cast<int>(sc.offset + sc.flat(src));
                    t.emplace_back(row, col, s * sign * std::exp(w_src - w_tgt) * inv);
                }
            }
        }
    }
    op.matrix = from_triplets(static_cast<Eigen::Index>(op.target_layout.size), static_cast<Eigen::Index>(op.source_layout.size), t);
    return op;
}

DiscreteOperator discretize_supercharge(const SuperchargeSpec& spec, const GridSpec& grid, bool parallel) {
    const auto w_half = sample_w_half_grid(spec.superpotential, grid, parallel);
    if (spec.direction == Direction::Plus) return discretize_plus(spec.superpotential, grid, spec.source, w_half);
    DiscreteOperator plus = discretize_plus(spec.superpotential, grid, spec.target, w_half);
    DiscreteOperator op;
    op.kind = "supercharge-";
    op.source_sector = spec.source;
    op.target_sector = spec.target;
    op.source_layout = plus.target_layout;
    op.target_layout = plus.source_layout;
    op.matrix = CsrMatrix(plus.matrix.transpose());
    op.matrix.makeCompressed();
    return op;
}

DiscreteOperator discretize_block(const BlockOperatorSpec& spec, const GridSpec& grid, bool parallel) {
    require_relative_grid(spec.n, grid);
    const int d = grid.dims();
    DiscreteOperator op;
    op.kind = "block";
    op.source_sector = op.target_sector = spec.sector;
    op.source_layout = op.target_layout = sector_layout(grid, spec.sector, false);
    const auto& layout = op.source_layout;
    const auto& nodes = layout.components.front();
    const auto comps = static_cast<std::size_t>(spec.block_dim);
    if (layout.components.size() != comps) throw Error(ErrorCode::DimensionMismatch, "block dimension does not match the grid sector");

    const auto jac = build_R(spec.n);
    const auto potentials = sample_matrices(
        nodes.size,
        [&](std::size_t k) {
            const auto idx = nodes.unflat(k);
            Eigen::VectorXd full = Eigen::VectorXd::Zero(spec.n);
            for (int a = 0; a < d; ++a) full(a) = grid.coordinate(a, idx[static_cast<std::size_t>(a)], false);
            const Eigen::MatrixXd v = spec.potential(jac.from_jacobi(full));
            if (!v.allFinite()) throw Error(ErrorCode::SingularArgument, "block potential is not finite on the grid");
            return v;
        },
        parallel);

    std::vector<Triplet> t;
    const bool periodic = grid.boundary == Boundary::Periodic;
    for (std::size_t k = 0; k < nodes.size; ++k) {
        const auto idx = nodes.unflat(k);
        const auto& v = potentials[k];
        for (std::size_t c = 0; c < comps; ++c) {
            const auto row = static_cast<int>(c * nodes.size + k);
            double diag = 0.0;
            for (int a = 0; a < d; ++a) {
                const double h2 = grid.step(a) * grid.step(a);
                diag += 1.0 / h2;
                for (int s : {-1, 1}) {
                    auto nb = idx;
                    int j = nb[static_cast<std::size_t>(a)] + s;
                    const int n_a = grid.node_count(a);
                    if (periodic) {
                        j = (j + n_a) % n_a;
                    } else if (j < 0 || j >= n_a) {
                        continue;
                    }
                    nb[static_cast<std::size_t>(a)] = j;
                    t.emplace_back(row, static_cast<int>(c * nodes.size + nodes.flat(nb)), -0.5 / h2);
                }
            }
            t.emplace_back(row, row, diag);
            for (std::size_t c2 = 0; c2 < comps; ++c2) {
                const double value = v(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c2));
                if (value != 0.0) t.emplace_back(row, static_cast<int>(c2 * nodes.size + k), value);
            }
        }
    }
    const auto size = static_cast<Eigen::Index>(layout.size);
    op.matrix = symmetrized(from_triplets(size, size, t));
    return op;
}

DiscreteOperator discretize_cmm(const Superpotential& sp, Branch branch, const GridAxis& axis) {
    GridSpec g;
    g.axes = {axis};
    validate(g);
    const double h = g.step(0);
    const double sign = branch == Branch::Lower ? -1.0 : 1.0;
    std::vector<Triplet> t;
    for (int i = 0; i < axis.points; ++i) {
        const double y = g.coordinate(0, i, false);
        const double d1 = sp.wc_d1(y);
        t.emplace_back(i, i, 1.0 / (h * h) + 0.5 * (d1 * d1 + sign * sp.wc_d2(y)));
        if (i > 0) t.emplace_back(i, i - 1, -0.5 / (h * h));
        if (i + 1 < axis.points) t.emplace_back(i, i + 1, -0.5 / (h * h));
    }
    DiscreteOperator op;
    op.kind = "cmm";
    op.matrix = from_triplets(axis.points, axis.points, t);
    op.source_layout = op.target_layout = sector_layout(g, 0, false);
    return op;
}

DiscreteOperator susy_composed_hamiltonian(const DiscreteOperator* incoming, const DiscreteOperator* outgoing) {
    if (incoming == nullptr && outgoing == nullptr) throw Error(ErrorCode::InvalidArgument, "composed Hamiltonian needs a supercharge");
    if (incoming != nullptr && outgoing != nullptr && incoming->rows() != outgoing->cols()) {
        throw Error(ErrorCode::DimensionMismatch, "supercharges do not share a sector");
    }
    DiscreteOperator op;
    op.kind = "composed";
    const Eigen::Index size = outgoing != nullptr ? outgoing->cols() : incoming->rows();
    op.source_sector = op.target_sector = outgoing != nullptr ? outgoing->source_sector : incoming->target_sector;
    op.source_layout = op.target_layout = outgoing != nullptr ? outgoing->source_layout : incoming->target_layout;
    CsrMatrix h(size, size);
    if (outgoing != nullptr) h = CsrMatrix(outgoing->matrix.transpose() * outgoing->matrix);
    if (incoming != nullptr) h = CsrMatrix(h + CsrMatrix(incoming->matrix * incoming->matrix.transpose()));
    op.matrix = symmetrized(h);
    return op;
}

DiscreteOperator DiscreteComplex::minus(int sector) const {
    if (sector < 1 || sector > top_sector()) throw Error(ErrorCode::BoundarySector, "no minus supercharge out of sector 0");
    const auto& p = plus[static_cast<std::size_t>(sector - 1)];
    DiscreteOperator op;
    op.kind = "supercharge-";
    op.source_sector = sector;
    op.target_sector = sector - 1;
    op.source_layout = p.target_layout;
    op.target_layout = p.source_layout;
    op.matrix = CsrMatrix(p.matrix.transpose());
    op.matrix.makeCompressed();
    return op;
}

DiscreteOperator DiscreteComplex::hamiltonian(int sector) const {
    if (sector < 0 || sector > top_sector()) throw Error(ErrorCode::InvalidSector, "relative sector out of range");
    const DiscreteOperator* in = sector > 0 ? &plus[static_cast<std::size_t>(sector - 1)] : nullptr;
    const DiscreteOperator* out = sector < top_sector() ? &plus[static_cast<std::size_t>(sector)] : nullptr;
    return susy_composed_hamiltonian(in, out);
}

Eigen::Index DiscreteComplex::sector_size(int sector) const {
    if (sector < top_sector()) return plus[static_cast<std::size_t>(sector)].cols();
    return plus.back().rows();
}

DiscreteComplex build_discrete_complex(const Superpotential& sp, const GridSpec& grid, bool parallel) {
    if (sp.n < 2) throw Error(ErrorCode::InvalidArgument, "a relative supercharge needs at least two particles");
    DiscreteComplex c;
    c.n = sp.n;
    c.grid = grid;
    const auto w_half = sample_w_half_grid(sp, grid, parallel);
    for (int m = 0; m + 1 < sp.n; ++m) c.plus.push_back(discretize_plus(sp, grid, m, w_half));
    return c;
}

MappedVector map_eigenfunction(const DiscreteComplex& complex, const Eigen::VectorXd& v, int sector, Direction direction) {
    const CsrMatrix& m = direction == Direction::Plus ? complex.plus.at(static_cast<std::size_t>(sector)).matrix
                                                      : complex.minus(sector).matrix;
    if (v.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "vector does not match the source sector");
    MappedVector out;
    out.vector = Eigen::VectorXd(m.rows());
    csr_matvec_parallel(m, v, out.vector);
    out.norm = out.vector.norm();
    out.kernel = out.norm < kKernelThreshold * std::max(1.0, v.norm());
    if (!out.kernel) out.vector /= out.norm;
    return out;
}

double boundary_weight(const Eigen::VectorXd& v, const SectorLayout& layout, const GridSpec& grid) {
    if (static_cast<std::size_t>(v.size()) != layout.size) throw Error(ErrorCode::DimensionMismatch, "vector does not match layout");
    double outer = 0.0;
    for (const auto& c : layout.components) {
        for (std::size_t k = 0; k < c.size; ++k) {
            const auto idx = c.unflat(k);
            bool edge = false;
            for (int a = 0; a < grid.dims() && !edge; ++a) {
                const int margin = std::max(1, c.extent[static_cast<std::size_t>(a)] / 10);
                const int i = idx[static_cast<std::size_t>(a)];
                edge = i < margin || i >= c.extent[static_cast<std::size_t>(a)] - margin;
            }
            const double x = v(static_cast<Eigen::Index>(c.offset + k));
            if (edge) outer += x * x;
        }
    }
    const double total = v.squaredNorm();
    return total > 0.0 ? outer / total : 0.0;
}

SpectrumReport verify_pairing(const Superpotential& sp, const GridSpec& grid, int sector, int k, double tol,
                              const PairingOptions& options) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "pairing tolerance must be positive");
    require_relative_grid(sp.n, grid);
    if (sector < 0 || sector + 1 > sp.n - 1) throw Error(ErrorCode::InvalidSector, "pairing needs sectors M and M+1 inside the relative range");

    const DiscreteComplex complex = build_discrete_complex(sp, grid, options.parallel);
    const DiscreteComplex partner_complex =
        options.partner ? build_discrete_complex(*options.partner, grid, options.parallel) : complex;

    SpectrumReport r;
    r.n = sp.n;
    r.sector = sector;
    r.partner_sector = sector + 1;
    r.model = sp.name;
    r.params = sp.params;
    r.grid = grid;
    r.tolerance = tol;
    r.residual_tolerance = options.residual_tolerance;

    const CsrMatrix h0 = complex.hamiltonian(sector).matrix;
    const CsrMatrix h1 = partner_complex.hamiltonian(sector + 1).matrix;
    const auto low = eigen_lowest(h0, std::min<int>(k, static_cast<int>(h0.rows()) - 1), options.eigen);

    std::vector<double> targets;
    std::vector<Eigen::VectorXd> images;
    for (Eigen::Index i = 0; i < low.values.size(); ++i) {
        r.eigenvalues.push_back(low.values(i));
        const auto mapped = map_eigenfunction(complex, low.vectors.col(i), sector, Direction::Plus);
        if (mapped.kernel) {
            // Annihilated by q+ as well as q- is a zero mode; otherwise the state pairs with sector M-1.
            const double down = sector > 0 ? map_eigenfunction(complex, low.vectors.col(i), sector, Direction::Minus).norm : 0.0;
            if (down < kKernelThreshold) {
                r.kernel_candidates.push_back({sector, low.values(i), std::max(mapped.norm, down),
                                               boundary_weight(low.vectors.col(i), complex.plus[static_cast<std::size_t>(sector)].source_layout, grid)});
            } else {
                r.lower_partnered.push_back(low.values(i));
            }
        } else {
            targets.push_back(low.values(i));
            images.push_back(mapped.vector);
        }
    }

    const double max_target = targets.empty() ? 0.0 : *std::max_element(targets.begin(), targets.end());
    const int dim1 = static_cast<int>(h1.rows()) - 1;
    int k1 = std::min(k + 4, dim1);
    if (!targets.empty()) {
        const int below = count_below(h1, max_target + tol);
        if (below >= 0) k1 = std::min(std::max(k1, below + 2), dim1);
    }
    EigenResult high;
    for (;;) {
        high = eigen_lowest(h1, k1, options.eigen);
        if (k1 >= dim1 || high.values(high.values.size() - 1) > max_target + tol) break;
        k1 = std::min(2 * k1, dim1);
    }
    const SectorLayout& partner_layout = complex.plus[static_cast<std::size_t>(sector)].target_layout;
    for (Eigen::Index i = 0; i < high.values.size(); ++i) {
        r.partner_eigenvalues.push_back(high.values(i));
        const Eigen::VectorXd u = high.vectors.col(i);
        double image = map_eigenfunction(partner_complex, u, sector + 1, Direction::Minus).norm;
        if (sector + 1 < partner_complex.top_sector()) {
            image = std::max(image, map_eigenfunction(partner_complex, u, sector + 1, Direction::Plus).norm);
        }
        if (image < kKernelThreshold) {
            r.kernel_candidates.push_back({sector + 1, high.values(i), image, boundary_weight(u, partner_layout, grid)});
        }
    }

    std::vector<bool> used(static_cast<std::size_t>(high.values.size()), false);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const double e = targets[t];
        Eigen::Index best = -1;
        double best_gap = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < high.values.size(); ++j) {
            const double gap = std::abs(high.values(j) - e);
            if (!used[static_cast<std::size_t>(j)] && gap <= tol && gap < best_gap) {
                best = j;
                best_gap = gap;
            }
        }
        Eigen::VectorXd hu(h1.rows());
        csr_matvec_parallel(h1, images[t], hu);
        const double residual = (hu - e * images[t]).norm();
        r.max_residual = std::max(r.max_residual, residual);
        if (best < 0) {
            r.unpaired.push_back(e);
            continue;
        }
        used[static_cast<std::size_t>(best)] = true;
        r.pairs.push_back({e, high.values(best), residual});
    }
    r.pass = r.unpaired.empty() && r.max_residual < options.residual_tolerance;
    return r;
}

std::vector<LevelCluster> cluster_levels(const std::vector<double>& values, double tol) {
    std::vector<double> v = values;
    std::sort(v.begin(), v.end());
    std::vector<LevelCluster> out;
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0 && v[i] - v[i - 1] >= tol) {
            out.back().mean = sum / out.back().size;
            sum = 0.0;
        }
        if (i == 0 || v[i] - v[i - 1] >= tol) out.push_back({0.0, 0});
        sum += v[i];
        ++out.back().size;
    }
    if (!out.empty()) out.back().mean = sum / out.back().size;
    return out;
}

OscillatorReport example3_oscillator_check(double a, const GridSpec& grid, int k, const EigenOptions& eigen) {
    const Superpotential sp = example3(a);
    require_relative_grid(sp.n, grid);
    OscillatorReport r;
    r.a = a;
    r.grid = grid;

    const DiscreteComplex complex = build_discrete_complex(sp, grid);
    const auto low = eigen_lowest(complex.hamiltonian(0).matrix, k, eigen);
    r.eigenvalues.assign(low.values.data(), low.values.data() + low.values.size());

    BlockOptions opts;
    opts.include_cmm = false;
    const auto direct = eigen_lowest(discretize_block(build_block(sp, 0, opts), grid).matrix, k, eigen);
    r.direct_eigenvalues.assign(direct.values.data(), direct.values.data() + direct.values.size());

    r.clusters = cluster_levels(r.eigenvalues, 0.25 * a);
    for (std::size_t i = 1; i < r.clusters.size(); ++i) {
        const double gap = r.clusters[i].mean - r.clusters[i - 1].mean;
        r.gaps.push_back(gap);
        r.max_gap_error = std::max(r.max_gap_error, std::abs(gap / a - 1.0));
    }
    r.degeneracy_ok = r.clusters.size() >= 4;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, r.clusters.size()); ++i) {
        r.degeneracy_ok = r.degeneracy_ok && r.clusters[i].size == static_cast<int>(i + 1);
    }

    const CsrMatrix h1 = complex.hamiltonian(1).matrix;
    for (Eigen::Index i = 0; i < low.values.size(); ++i) {
        const auto mapped = map_eigenfunction(complex, low.vectors.col(i), 0, Direction::Plus);
        if (mapped.kernel) continue;
        Eigen::VectorXd hu(h1.rows());
        csr_matvec_parallel(h1, mapped.vector, hu);
        r.partial_solvability_residual = std::max(r.partial_solvability_residual, (hu - low.values(i) * mapped.vector).norm());
    }

    for (Branch b : {Branch::Lower, Branch::Upper}) {
        const auto ev = eigen_lowest(discretize_cmm(sp, b, grid.axes.front()).matrix, 4, eigen);
        auto& dst = b == Branch::Lower ? r.cmm_lower : r.cmm_upper;
        dst.assign(ev.values.data(), ev.values.data() + ev.values.size());
    }

    r.pass = r.max_gap_error <= 0.02 && r.gaps.size() >= 3 && r.degeneracy_ok && r.partial_solvability_residual < 5e-3;
    return r;
}

} // namespace susyqm
