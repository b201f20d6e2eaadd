#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace susyqm {

enum class Boundary { Dirichlet, Periodic };

std::string to_string(Boundary b);
Boundary parse_boundary(const std::string& s);

/**
 * One grid axis. Dirichlet axes have `points` interior nodes at lo + (i+1) h with
 * h = (hi - lo)/(points + 1). Periodic axes have nodes at lo + (i + offset) h with
 * h = (hi - lo)/points. Links sit halfway between neighboring nodes.
 */
struct GridAxis {
    double lo = -8.0;
    double hi = 8.0;
    int points = 64;
    double offset = 0.5;
};

struct GridSpec {
    std::vector<GridAxis> axes;
    Boundary boundary = Boundary::Dirichlet;

    [[nodiscard]] int dims() const { return static_cast<int>(axes.size()); }
    [[nodiscard]] double step(int axis) const;
    /// Position of node i (is_link false) or link i (is_link true).
    [[nodiscard]] double coordinate(int axis, int index, bool is_link) const;
    [[nodiscard]] int node_count(int axis) const { return axes[static_cast<std::size_t>(axis)].points; }
    [[nodiscard]] int link_count(int axis) const;
};

void validate(const GridSpec& grid);

/// Square grid with the same axis on every dimension.
GridSpec uniform_grid(int dims, double lo, double hi, int points, Boundary boundary = Boundary::Dirichlet);

/// One vector component: a tensor grid that uses links along the axes in `link_axes`.
struct ComponentGrid {
    std::vector<int> link_axes;  // 0-based, ascending
    std::vector<int> extent;     // points per axis
    std::vector<bool> is_link;   // per axis
    std::size_t offset = 0;      // first index in the sector vector
    std::size_t size = 0;

    [[nodiscard]] std::size_t flat(const std::vector<int>& idx) const;
    [[nodiscard]] std::vector<int> unflat(std::size_t k) const;
};

/// Ordered components of one sector vector.
struct SectorLayout {
    int sector = 0;
    bool staggered = true;
    std::vector<ComponentGrid> components;
    std::size_t size = 0;
};

/// Components labelled by the lexicographic sector-M subsets of the axes. Staggered layouts
/// shift each component onto links along its own subset; collocated layouts keep every component on nodes.
SectorLayout sector_layout(const GridSpec& grid, int sector, bool staggered);

/// Points of the half-step lattice shared by nodes and links, used for sampling fields once.
struct HalfGrid {
    std::vector<int> extent;  // per axis
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] std::size_t flat(const std::vector<int>& idx) const;
};

HalfGrid half_grid(const GridSpec& grid);
/// Half-lattice index of node or link `index` along any axis.
int half_index(const GridSpec& grid, int index, bool is_link);
/// Coordinates of a half-lattice point.
Eigen::VectorXd half_coordinates(const GridSpec& grid, const std::vector<int>& half_idx);

} // namespace susyqm
