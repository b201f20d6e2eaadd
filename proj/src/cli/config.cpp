#include "susyqm/cli/config.hpp"

#include "susyqm/errors.hpp"
#include "susyqm/eigensolver.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <type_traits>

namespace susyqm::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& key, const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, "--" + key + ": " + what);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const std::string s = trim(text);
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || s.empty()) bad(key, "cannot parse '" + text + "' as a number");
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(value)) bad(key, "value must be finite");
    }
    return value;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

const std::vector<std::string> kCommands = {"rep", "rep verify", "model check", "susy verify", "spectrum", "operator", "block"};

} // namespace

std::string to_string(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "json";
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw Error(ErrorCode::InvalidArgument, "--format: expected json, csv or text");
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {"n",    "m",      "sector", "pair",  "model", "name",  "a",      "b",
                                                  "grid", "lo",     "hi",     "boundary", "k",  "tol",   "residual-tol",
                                                  "seed", "count",  "kind",   "method", "branch", "at",  "out",    "format"};
    return keys;
}

RawConfig read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open config file '" + path + "'");
    RawConfig raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::InvalidArgument, path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(t.substr(0, eq));
        if (std::find(config_keys().begin(), config_keys().end(), key) == config_keys().end()) {
            throw Error(ErrorCode::InvalidArgument, path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        raw[key] = trim(t.substr(eq + 1));
    }
    return raw;
}

RunConfig make_config(const std::string& command, const RawConfig& raw) {
    if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
        throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
    }
    RunConfig c;
    c.command = command;
    c.seed = kDefaultSeed;
    const auto get = [&](const std::string& key) -> std::optional<std::string> {
        auto it = raw.find(key);
        if (it == raw.end()) return std::nullopt;
        return it->second;
    };

    if (auto v = get("n")) c.n = parse_number<int>("n", *v);
    if (auto v = get("m")) c.sector = parse_number<int>("m", *v);
    if (auto v = get("sector")) c.sector = parse_number<int>("sector", *v);
    if (auto v = get("pair")) {
        const auto parts = split_list(*v);
        if (parts.size() != 2) bad("pair", "expected two particle indices");
        c.pair = std::pair{parse_number<int>("pair", parts[0]), parse_number<int>("pair", parts[1])};
    }
    if (auto v = get("model")) c.model = *v;
    if (auto v = get("name")) c.model = *v;
    for (const char* p : {"a", "b"}) {
        if (auto v = get(p)) c.params[p] = parse_number<double>(p, *v);
    }
    if (auto v = get("grid")) c.grid_points = parse_number<int>("grid", *v);
    if (auto v = get("lo")) c.lo = parse_number<double>("lo", *v);
    if (auto v = get("hi")) c.hi = parse_number<double>("hi", *v);
    if (auto v = get("boundary")) c.boundary = parse_boundary(*v);
    if (auto v = get("k")) c.k = parse_number<int>("k", *v);
    if (auto v = get("tol")) c.tol = parse_number<double>("tol", *v);
    if (auto v = get("residual-tol")) c.residual_tol = parse_number<double>("residual-tol", *v);
    if (auto v = get("seed")) c.seed = parse_number<std::uint64_t>("seed", *v);
    if (auto v = get("count")) c.count = parse_number<int>("count", *v);
    if (auto v = get("kind")) c.kind = *v;
    if (auto v = get("method")) c.method = *v;
    if (auto v = get("branch")) c.branch = parse_branch(*v);
    if (auto v = get("at")) {
        for (const auto& part : split_list(*v)) c.at.push_back(parse_number<double>("at", part));
    }
    if (auto v = get("out")) c.out = *v;
    if (auto v = get("format")) c.format = parse_format(*v);

    if (c.n < 2) bad("n", "at least two particles are required");
    if (c.k < 1) bad("k", "must be positive");
    if (!(c.tol > 0.0)) bad("tol", "must be positive");
    if (!(c.residual_tol > 0.0)) bad("residual-tol", "must be positive");
    if (c.count < 1) bad("count", "must be positive");
    if (c.grid_points && *c.grid_points < 16) bad("grid", "at least 16 points per axis");
    if (c.lo.has_value() != c.hi.has_value()) bad(c.lo ? "hi" : "lo", "lo and hi must be given together");
    if (c.lo && !(*c.hi > *c.lo)) bad("hi", "must exceed lo");

    const bool rep = command == "rep" || command == "rep verify";
    if (rep && c.n > 12) bad("n", "representation matrices are limited to n <= 12");
    if (c.sector && (*c.sector < 0 || *c.sector > c.n - 1)) {
        throw Error(ErrorCode::InvalidSector, "sector must lie in 0.." + std::to_string(c.n - 1));
    }
    if (c.pair) {
        const auto [i, j] = *c.pair;
        if (i < 1 || j < 1 || i > c.n || j > c.n || i == j) {
            throw Error(ErrorCode::InvalidIndices, "pair needs two distinct particle indices in 1..n");
        }
    }
    if (command == "rep" && c.pair && !c.sector) bad("m", "a sector is required with --pair");
    if (command == "model check" && c.model.empty()) bad("name", "a model name is required");
    if (command == "susy verify" && !c.grid_points) bad("grid", "grid size is required");
    if (command == "susy verify" || command == "spectrum" || command == "operator" || command == "block") {
        if (c.model.empty()) bad("model", "a model name is required");
    }
    if (command == "spectrum" || command == "operator") {
        if (!c.grid_points) c.grid_points = command == "spectrum" ? 64 : 32;
        if (c.method != "composed" && c.method != "direct") bad("method", "expected composed or direct");
    }
    if (command == "operator" && c.kind != "plus" && c.kind != "minus" && c.kind != "hamiltonian" && c.kind != "block") {
        bad("kind", "expected plus, minus, hamiltonian or block");
    }
    if (command == "block" && static_cast<int>(c.at.size()) != c.n) bad("at", "expected n comma-separated coordinates");
    if (c.boundary == Boundary::Periodic && command == "susy verify" && c.model == "example3") {
        bad("boundary", "example3 is not periodic");
    }
    return c;
}

} // namespace susyqm::cli
