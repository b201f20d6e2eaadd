#include "susyqm/cli/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace susyqm::cli {

namespace {

void dump(const Json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(it.key()).dump() + ": ";
                dump(it.value(), out, depth + 1);
            }
            out += "\n" + close + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line so matrices read row by row.
            bool scalars = true;
            for (const auto& e : j) scalars = scalars && !e.is_structured();
            if (scalars) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i > 0) out += ", ";
                    dump(j[i], out, depth + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) out += ",\n";
                out += pad;
                dump(j[i], out, depth + 1);
            }
            out += "\n" + close + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

} // namespace

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // no negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    return buf;
}

std::string canonical_json(const Json& j) {
    std::string out;
    dump(j, out, 0);
    out += "\n";
    return out;
}

Json to_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

Json to_json(const GridSpec& grid) {
    Json axes = Json::array();
    for (int a = 0; a < grid.dims(); ++a) {
        const auto& ax = grid.axes[static_cast<std::size_t>(a)];
        Json j = {{"lo", ax.lo}, {"hi", ax.hi}, {"points", ax.points}, {"step", grid.step(a)}};
        if (grid.boundary == Boundary::Periodic) j["offset"] = ax.offset;
        axes.push_back(std::move(j));
    }
    return {{"boundary", to_string(grid.boundary)}, {"axes", axes}};
}

Json to_json(const Partition& p) { return p.rows; }

Json to_json(const CycleType& c) { return c.lengths; }

Json to_json(const SpectrumReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) pairs.push_back({{"e_low", p.e_low}, {"e_high", p.e_high}, {"residual", p.residual}});
    Json kernels = Json::array();
    for (const auto& k : r.kernel_candidates) {
        kernels.push_back({{"sector", k.sector},
                           {"eigenvalue", k.eigenvalue},
                           {"image_norm", k.image_norm},
                           {"boundary_weight", k.boundary_weight}});
    }
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return {{"n", r.n},
            {"sector", r.sector},
            {"partner_sector", r.partner_sector},
            {"branch", to_string(r.branch)},
            {"model", r.model},
            {"params", params},
            {"grid", to_json(r.grid)},
            {"tolerance", r.tolerance},
            {"residual_tolerance", r.residual_tolerance},
            {"eigenvalues", to_json(r.eigenvalues)},
            {"partner_eigenvalues", to_json(r.partner_eigenvalues)},
            {"pairs", pairs},
            {"kernel_candidates", kernels},
            {"unpaired", to_json(r.unpaired)},
            {"lower_partnered", to_json(r.lower_partnered)},
            {"max_residual", r.max_residual},
            {"pass", r.pass}};
}

std::string triplet_text(const CsrMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " + std::to_string(m.nonZeros()) + "\n";
    for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
        for (CsrMatrix::InnerIterator it(m, r); it; ++it) {
            out += std::to_string(it.row() + 1) + " " + std::to_string(it.col() + 1) + " " + format_double(it.value()) + "\n";
        }
    }
    return out;
}

std::string eigenvalue_csv(const std::vector<double>& values) {
    std::string out = "index,eigenvalue\n";
    for (std::size_t i = 0; i < values.size(); ++i) out += std::to_string(i + 1) + "," + format_double(values[i]) + "\n";
    return out;
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ",";
            out += format_double(m(i, j));
        }
        out += "\n";
    }
    return out;
}

} // namespace susyqm::cli
