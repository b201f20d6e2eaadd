#pragma once

#include "susyqm/grid.hpp"
#include "susyqm/kernels.hpp"
#include "susyqm/spectral.hpp"
#include "susyqm/symrep.hpp"

#include <json.hpp>

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace susyqm::cli {

using Json = nlohmann::json;

/// Sorted keys, two-space indent, doubles as %.12e, trailing newline.
std::string canonical_json(const Json& j);

/// %.12e, the only float format the CLI emits.
std::string format_double(double x);

Json to_json(const Eigen::MatrixXd& m);
Json to_json(const std::vector<double>& v);
Json to_json(const GridSpec& grid);
Json to_json(const Partition& p);
Json to_json(const CycleType& c);
Json to_json(const SpectrumReport& r);

/// One "row col value" line per nonzero with 1-based indices, after a "rows cols nnz" header.
std::string triplet_text(const CsrMatrix& m);

/// "index,value" rows with a header, 1-based index.
std::string eigenvalue_csv(const std::vector<double>& values);

/// Matrix rows as comma-separated values.
std::string matrix_csv(const Eigen::MatrixXd& m);

} // namespace susyqm::cli
