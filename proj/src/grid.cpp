#include "susyqm/grid.hpp"

#include "susyqm/combinatorics.hpp"
#include "susyqm/errors.hpp"

#include <cmath>

namespace susyqm {

std::string to_string(Boundary b) { return b == Boundary::Dirichlet ? "dirichlet" : "periodic"; }

Boundary parse_boundary(const std::string& s) {
    if (s == "dirichlet") return Boundary::Dirichlet;
    if (s == "periodic") return Boundary::Periodic;
    throw Error(ErrorCode::InvalidArgument, "boundary must be 'dirichlet' or 'periodic'");
}

double GridSpec::step(int axis) const {
    const auto& a = axes[static_cast<std::size_t>(axis)];
    return boundary == Boundary::Dirichlet ? (a.hi - a.lo) / (a.points + 1) : (a.hi - a.lo) / a.points;
}

double GridSpec::coordinate(int axis, int index, bool is_link) const {
    const auto& a = axes[static_cast<std::size_t>(axis)];
    const double h = step(axis);
    if (boundary == Boundary::Dirichlet) return a.lo + (index + (is_link ? 0.5 : 1.0)) * h;
    return a.lo + (index + a.offset + (is_link ? 0.5 : 0.0)) * h;
}

int GridSpec::link_count(int axis) const {
    const int n = node_count(axis);
    return boundary == Boundary::Dirichlet ? n + 1 : n;
}

void validate(const GridSpec& grid) {
    if (grid.axes.empty()) throw Error(ErrorCode::InvalidArgument, "grid needs at least one axis");
    for (const auto& a : grid.axes) {
        if (a.points < 16) throw Error(ErrorCode::InvalidArgument, "grid needs at least 16 points per axis");
        if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || !(a.hi > a.lo)) {
            throw Error(ErrorCode::InvalidArgument, "grid extent must be finite with lo < hi");
        }
        if (!(a.offset >= 0.0 && a.offset < 1.0)) throw Error(ErrorCode::InvalidArgument, "periodic node offset must lie in [0, 1)");
    }
}

GridSpec uniform_grid(int dims, double lo, double hi, int points, Boundary boundary) {
    GridSpec g;
    g.boundary = boundary;
    g.axes.assign(static_cast<std::size_t>(dims), GridAxis{lo, hi, points, 0.5});
    validate(g);
    return g;
}

std::size_t ComponentGrid::flat(const std::vector<int>& idx) const {
    std::size_t k = 0;
    for (std::size_t a = 0; a < extent.size(); ++a) k = k * static_cast<std::size_t>(extent[a]) + static_cast<std::size_t>(idx[a]);
    return k;
}

std::vector<int> ComponentGrid::unflat(std::size_t k) const {
    std::vector<int> idx(extent.size());
    for (std::size_t a = extent.size(); a-- > 0;) {
        idx[a] = static_cast<int>(k % static_cast<std::size_t>(extent[a]));
        k /= static_cast<std::size_t>(extent[a]);
    }
    return idx;
}

SectorLayout sector_layout(const GridSpec& grid, int sector, bool staggered) {
    validate(grid);
    const int d = grid.dims();
    if (sector < 0 || sector > d) throw Error(ErrorCode::InvalidSector, "sector exceeds the number of grid axes");
    SectorLayout layout;
    layout.sector = sector;
    layout.staggered = staggered;
    for (const auto& subset : lexicographic_subsets(d, sector)) {
        ComponentGrid c;
        c.link_axes = subset;
        c.is_link.assign(static_cast<std::size_t>(d), false);
        if (staggered) {
            for (int a : subset) c.is_link[static_cast<std::size_t>(a)] = true;
        }
        c.size = 1;
        for (int a = 0; a < d; ++a) {
            const int e = c.is_link[static_cast<std::size_t>(a)] ? grid.link_count(a) : grid.node_count(a);
            c.extent.push_back(e);
            c.size *= static_cast<std::size_t>(e);
        }
        c.offset = layout.size;
        layout.size += c.size;
        layout.components.push_back(std::move(c));
    }
    return layout;
}

std::size_t HalfGrid::size() const {
    std::size_t s = 1;
    for (int e : extent) s *= static_cast<std::size_t>(e);
    return s;
}

std::size_t HalfGrid::flat(const std::vector<int>& idx) const {
    std::size_t k = 0;
    for (std::size_t a = 0; a < extent.size(); ++a) k = k * static_cast<std::size_t>(extent[a]) + static_cast<std::size_t>(idx[a]);
    return k;
}

HalfGrid half_grid(const GridSpec& grid) {
    HalfGrid hg;
    for (int a = 0; a < grid.dims(); ++a) {
        const int n = grid.node_count(a);
        hg.extent.push_back(grid.boundary == Boundary::Dirichlet ? 2 * n + 1 : 2 * n);
    }
    return hg;
}

int half_index(const GridSpec& grid, int index, bool is_link) {
    if (grid.boundary == Boundary::Dirichlet) return is_link ? 2 * index : 2 * index + 1;
    return is_link ? 2 * index + 1 : 2 * index;
}

Eigen::VectorXd half_coordinates(const GridSpec& grid, const std::vector<int>& half_idx) {
    Eigen::VectorXd y(grid.dims());
    for (int a = 0; a < grid.dims(); ++a) {
        const int j = half_idx[static_cast<std::size_t>(a)];
        const bool link = grid.boundary == Boundary::Dirichlet ? (j % 2 == 0) : (j % 2 == 1);
        y(a) = grid.coordinate(a, j / 2, link);
    }
    return y;
}

} // namespace susyqm
