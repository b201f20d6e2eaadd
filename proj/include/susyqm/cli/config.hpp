#pragma once

#include "susyqm/grid.hpp"
#include "susyqm/hamiltonian.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace susyqm::cli {

enum class Format { Json, Csv, Text };

std::string to_string(Format f);
Format parse_format(const std::string& s);

/// Fully validated parameters of one invocation. Keys in config files match the long flag names.
struct RunConfig {
    std::string command;  // "rep", "rep verify", "model check", "susy verify", "spectrum", "operator", "block"
    int n = 3;
    std::optional<int> sector;
    std::optional<std::pair<int, int>> pair;
    std::string model;
    std::map<std::string, double> params;
    std::optional<int> grid_points;
    std::optional<double> lo;
    std::optional<double> hi;
    Boundary boundary = Boundary::Dirichlet;
    int k = 6;
    double tol = 5e-3;
    double residual_tol = 5e-3;
    std::uint64_t seed = 20240917;
    int count = 1000;
    std::string kind = "hamiltonian";
    std::string method = "composed";
    Branch branch = Branch::Lower;
    std::vector<double> at;
    std::optional<std::string> out;
    std::optional<Format> format;  // each command has its own default
};

using RawConfig = std::map<std::string, std::string>;

/// Reads `key = value` lines; blank lines and lines starting with '#' are skipped.
RawConfig read_config_file(const std::string& path);

/// Typed parse and validation; throws Error(InvalidArgument / InvalidSector) on bad input.
RunConfig make_config(const std::string& command, const RawConfig& raw);

/// Known keys of the raw configuration.
const std::vector<std::string>& config_keys();

} // namespace susyqm::cli
