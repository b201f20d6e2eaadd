#include "susyqm/cli/commands.hpp"

#include "susyqm/cli/serialize.hpp"
#include "susyqm/combinatorics.hpp"
#include "susyqm/eigensolver.hpp"
#include "susyqm/errors.hpp"
#include "susyqm/spectral.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace susyqm::cli {

namespace {

Format format_or(const RunConfig& c, Format fallback, std::initializer_list<Format> allowed) {
    const Format f = c.format.value_or(fallback);
    for (Format a : allowed) {
        if (a == f) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "--format " + to_string(f) + " is not available for '" + c.command + "'");
}

Json params_json(const std::map<std::string, double>& params) {
    Json j = Json::object();
    for (const auto& [k, v] : params) j[k] = v;
    return j;
}

std::string base_name(const RunConfig& c) {
    std::string s = c.command;
    for (auto& ch : s) {
        if (ch == ' ') ch = '_';
    }
    return s;
}

std::string extension(Format f) { return f == Format::Json ? ".json" : f == Format::Csv ? ".csv" : ".txt"; }

Json axioms_json(const RepAxiomReport& a) {
    return {{"orthogonality", a.orthogonality}, {"involution", a.involution}, {"braid", a.braid}, {"conjugation", a.conjugation}};
}

Json characters_json(const IrreducibilityReport& r) {
    Json a = Json::array();
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        a.push_back({{"cycle_type", to_json(r.classes[i])}, {"value", r.characters[i]}, {"class_size", class_size(r.classes[i])}});
    }
    return a;
}

Partition hook(int n, int sector) {
    Partition p;
    p.rows.push_back(n - sector);
    for (int i = 0; i < sector; ++i) p.rows.push_back(1);
    return p;
}

constexpr double kAxiomTol = 1e-12;
constexpr double kIntertwiningTol = 1e-6;

struct SectorCheck {
    Json json;
    bool pass = false;
};

SectorCheck check_sector(int n, int sector) {
    const auto reps = build_rep_matrices(n, sector);
    const auto axioms = check_rep_axioms(reps);
    const auto irr = verify_irreducible(reps);
    const Partition expected = hook(n, sector);
    SectorCheck s;
    Json tableau = nullptr;
    bool tableau_ok = false;
    try {
        const Partition found = identify_tableau(irr);
        tableau = to_json(found);
        tableau_ok = found.rows == expected.rows;
    } catch (const Error& e) {
        tableau = std::string(to_string(e.code()));
    }
    const auto expected_dim = static_cast<Eigen::Index>(binomial(n - 1, sector));
    s.pass = axioms.max() < kAxiomTol && irr.pass && tableau_ok && reps.dim() == expected_dim &&
             hook_dimension(expected) == expected_dim;
    s.json = {{"sector", sector},
              {"dim", reps.dim()},
              {"expected_dim", expected_dim},
              {"axioms", axioms_json(axioms)},
              {"characters", characters_json(irr)},
              {"inner_product", irr.inner_product},
              {"tableau", tableau},
              {"expected_tableau", to_json(expected)},
              {"pass", s.pass}};
    return s;
}

Eigen::VectorXd probe_base(int n) {
    Eigen::VectorXd base(n);
    for (int i = 0; i < n; ++i) base(i) = 0.6 * (i - 0.5 * (n - 1));
    return base;
}

} // namespace

Superpotential make_superpotential(const std::string& model, int n, const std::map<std::string, double>& params) {
    if (model == "example3") {
        if (n != 3) throw Error(ErrorCode::InvalidArgument, "example3 is a three-particle model");
        for (const auto& [k, v] : params) {
            if (k != "a") throw Error(ErrorCode::InvalidArgument, "example3 takes only the parameter a");
        }
        return example3(params.count("a") ? params.at("a") : 1.0);
    }
    if (model == "free") return free_superpotential(n);
    return pairwise_superpotential(pair_model(model, params), n);
}

GridSpec make_grid(const RunConfig& c, int dims) {
    if (!c.grid_points) throw Error(ErrorCode::InvalidArgument, "--grid: grid size is required");
    GridSpec g;
    g.boundary = c.boundary;
    if (c.lo) {
        g = uniform_grid(dims, *c.lo, *c.hi, *c.grid_points, c.boundary);
        return g;
    }
    if (c.boundary == Boundary::Periodic) {
        if (c.model != "sutherland") throw Error(ErrorCode::InvalidArgument, "periodic grids need --lo and --hi for this model");
        // One period of every Jacobi axis; staggered offsets keep nodes and links off the coincidence planes.
        for (int b = 1; b <= dims; ++b) {
            const double len = std::sqrt(static_cast<double>(b * (b + 1))) * M_PI;
            g.axes.push_back(GridAxis{0.0, len, *c.grid_points, std::ldexp(1.0, -(b + 1))});
        }
        validate(g);
        return g;
    }
    return uniform_grid(dims, -8.0, 8.0, *c.grid_points, c.boundary);
}

CommandResult cmd_rep(const RunConfig& c) {
    CommandResult r;
    r.default_name = base_name(c);
    if (c.pair) {
        const Format f = format_or(c, Format::Json, {Format::Json, Format::Csv});
        auto [i, j] = *c.pair;
        const Eigen::MatrixXd b = b_matrix(c.n, *c.sector, std::min(i, j), std::max(i, j));
        r.default_name += extension(f);
        if (f == Format::Csv) {
            r.body = matrix_csv(b);
        } else {
            r.body = canonical_json({{"n", c.n}, {"sector", *c.sector}, {"pair", {i, j}}, {"matrix", to_json(b)}});
        }
        return r;
    }
    format_or(c, Format::Json, {Format::Json});
    r.default_name += ".json";
    Json sectors = Json::array();
    bool pass = true;
    for (int m = 0; m < c.n; ++m) {
        if (c.sector && m != *c.sector) continue;
        auto s = check_sector(c.n, m);
        const auto reps = build_rep_matrices(c.n, m);
        Json mats = Json::array();
        for (const auto& [key, mat] : reps.matrices) mats.push_back({{"pair", {key.first, key.second}}, {"matrix", to_json(mat)}});
        s.json["matrices"] = mats;
        pass = pass && s.pass;
        sectors.push_back(s.json);
    }
    r.body = canonical_json({{"n", c.n}, {"sectors", sectors}, {"pass", pass}});
    r.exit_code = pass ? kExitOk : kExitVerification;
    return r;
}

CommandResult cmd_rep_verify(const RunConfig& c) {
    const Format f = format_or(c, Format::Json, {Format::Json, Format::Text});
    CommandResult r;
    r.default_name = base_name(c) + extension(f);
    Json sectors = Json::array();
    std::string text;
    bool pass = true;
    for (int m = 0; m < c.n; ++m) {
        if (c.sector && m != *c.sector) continue;
        const auto s = check_sector(c.n, m);
        pass = pass && s.pass;
        text += "sector " + std::to_string(m) + " dim " + std::to_string(s.json["dim"].get<long>()) + " tableau " +
                s.json["tableau"].dump() + (s.pass ? " PASS" : " FAIL") + "\n";
        sectors.push_back(s.json);
    }
    r.body = f == Format::Text ? text : canonical_json({{"n", c.n}, {"sectors", sectors}, {"pass", pass}});
    r.exit_code = pass ? kExitOk : kExitVerification;
    return r;
}

CommandResult cmd_model(const RunConfig& c) {
    format_or(c, Format::Json, {Format::Json});
    const PairModel pm = pair_model(c.model, c.params);
    const auto samples = sample_functional_eq(pm, c.count, c.seed);
    double worst = 0.0;
    Json worst_sample = nullptr;
    for (const auto& s : samples) {
        if (s.residual >= worst) {
            worst = s.residual;
            worst_sample = {{"A", s.A}, {"B", s.B}, {"C", -s.A - s.B}, {"residual", s.residual}};
        }
    }
    constexpr double kThreshold = 1e-12;
    const std::vector<double> xs = {0.3, 0.7, 1.1, 1.9, 2.6};
    const auto tv = model_table_diagnostic(pm, xs);
    Json rows = Json::array();
    for (const auto& row : tv.rows) {
        rows.push_back({{"x", row.x},
                        {"printed", row.printed},
                        {"u1_squared_plus_v0", row.derived},
                        {"pair_potential", row.pairwise},
                        {"v0", pm.v0(row.x)}});
    }
    const bool pass = worst < kThreshold;
    CommandResult r;
    r.default_name = base_name(c) + ".json";
    r.body = canonical_json({{"model", pm.name},
                             {"params", params_json(c.params)},
                             {"seed", c.seed},
                             {"samples", c.count},
                             {"max_residual", worst},
                             {"worst_sample", worst_sample},
                             {"threshold", kThreshold},
                             {"model_table",
                              {{"rows", rows},
                               {"max_difference", tv.max_difference},
                               {"max_pair_potential_difference", tv.max_pairwise_difference},
                               {"printed_functional_eq_residual", tv.printed_eq_residual}}},
                             {"pass", pass}});
    r.exit_code = pass ? kExitOk : kExitVerification;
    return r;
}

CommandResult cmd_susy(const RunConfig& c) {
    format_or(c, Format::Json, {Format::Json});
    const Superpotential sp = make_superpotential(c.model, c.n, c.params);
    const GridSpec grid = make_grid(c, c.n - 1);
    const Eigen::VectorXd base = probe_base(c.n);
    const auto points = sample_points(sp, 8, c.seed, base, 0.2);

    Json inter = Json::array();
    bool pass = true;
    double worst_inter = 0.0;
    for (int m = 0; m + 1 < c.n; ++m) {
        const auto tests = test_function_suite(c.n, static_cast<Eigen::Index>(binomial(c.n - 1, m)), 4, c.seed + static_cast<std::uint64_t>(m), base, 0.5);
        const double res = intertwining_residual(sp, m, tests, points);
        const double nil = nilpotency_residual(sp, m, tests, points);
        worst_inter = std::max(worst_inter, res);
        inter.push_back({{"sector", m}, {"intertwining", res}, {"nilpotency", nil}});
    }
    pass = worst_inter < kIntertwiningTol;

    PairingOptions opts;
    opts.residual_tolerance = c.residual_tol;
    opts.eigen.seed = c.seed;
    Json pairing = Json::array();
    for (int m = 0; m + 1 < c.n; ++m) {
        const auto rep = verify_pairing(sp, grid, m, c.k, c.tol, opts);
        pass = pass && rep.pass;
        pairing.push_back(to_json(rep));
    }

    CommandResult r;
    r.default_name = base_name(c) + ".json";
    r.body = canonical_json({{"model", sp.name},
                             {"n", c.n},
                             {"params", params_json(sp.params)},
                             {"seed", c.seed},
                             {"k", c.k},
                             {"grid", to_json(grid)},
                             {"intertwining", {{"sectors", inter}, {"max", worst_inter}, {"threshold", kIntertwiningTol}}},
                             {"pairing", pairing},
                             {"pass", pass}});
    r.exit_code = pass ? kExitOk : kExitVerification;
    return r;
}

CommandResult cmd_spectrum(const RunConfig& c) {
    const Format f = format_or(c, Format::Csv, {Format::Csv, Format::Json});
    const Superpotential sp = make_superpotential(c.model, c.n, c.params);
    const GridSpec grid = make_grid(c, c.n - 1);
    const int sector = c.sector.value_or(0);
    CsrMatrix h;
    if (c.method == "direct") {
        BlockOptions opts;
        opts.include_cmm = false;
        h = discretize_block(build_block(sp, sector, opts), grid).matrix;
    } else {
        h = build_discrete_complex(sp, grid).hamiltonian(sector).matrix;
    }
    EigenOptions eo;
    eo.seed = c.seed;
    const auto ev = eigen_lowest(h, std::min<int>(c.k, static_cast<int>(h.rows()) - 1), eo);
    const std::vector<double> values(ev.values.data(), ev.values.data() + ev.values.size());
    CommandResult r;
    r.default_name = base_name(c) + extension(f);
    if (f == Format::Csv) {
        r.body = eigenvalue_csv(values);
    } else {
        r.body = canonical_json({{"model", sp.name},
                                 {"n", c.n},
                                 {"params", params_json(sp.params)},
                                 {"sector", sector},
                                 {"method", c.method},
                                 {"grid", to_json(grid)},
                                 {"seed", c.seed},
                                 {"eigenvalues", to_json(values)},
                                 {"max_residual", ev.max_residual}});
    }
    return r;
}

CommandResult cmd_operator(const RunConfig& c) {
    format_or(c, Format::Text, {Format::Text});
    const Superpotential sp = make_superpotential(c.model, c.n, c.params);
    const GridSpec grid = make_grid(c, c.n - 1);
    const int sector = c.sector.value_or(0);
    CsrMatrix m;
    if (c.kind == "block") {
        BlockOptions opts;
        opts.include_cmm = false;
        m = discretize_block(build_block(sp, sector, opts), grid).matrix;
    } else {
        const auto complex = build_discrete_complex(sp, grid);
        if (c.kind == "plus") {
            if (sector >= complex.top_sector()) throw Error(ErrorCode::BoundarySector, "no plus supercharge out of the top sector");
            m = complex.plus[static_cast<std::size_t>(sector)].matrix;
        } else if (c.kind == "minus") {
            m = complex.minus(sector).matrix;
        } else {
            m = complex.hamiltonian(sector).matrix;
        }
    }
    CommandResult r;
    r.default_name = base_name(c) + "_" + c.kind + ".txt";
    r.body = triplet_text(m);
    return r;
}

CommandResult cmd_block(const RunConfig& c) {
    format_or(c, Format::Json, {Format::Json});
    const Superpotential sp = make_superpotential(c.model, c.n, c.params);
    BlockOptions opts;
    opts.branch = c.branch;
    const int sector = c.sector.value_or(0);
    if (sector > c.n - 1) throw Error(ErrorCode::InvalidSector, "sector out of range");
    const auto spec = build_block(sp, sector, opts);
    const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(c.at.data(), static_cast<Eigen::Index>(c.at.size()));
    CommandResult r;
    r.default_name = base_name(c) + ".json";
    r.body = canonical_json({{"model", sp.name},
                             {"n", c.n},
                             {"params", params_json(sp.params)},
                             {"sector", sector},
                             {"branch", to_string(c.branch)},
                             {"block_dim", spec.block_dim},
                             {"at", to_json(c.at)},
                             {"potential", to_json(spec.potential(x))}});
    return r;
}

std::string error_json(const std::string& code, const std::string& message) {
    return Json{{"error", {{"code", code}, {"message", message}}}}.dump() + "\n";
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    CommandResult r;
    if (c.command == "rep") r = cmd_rep(c);
    else if (c.command == "rep verify") r = cmd_rep_verify(c);
    else if (c.command == "model check") r = cmd_model(c);
    else if (c.command == "susy verify") r = cmd_susy(c);
    else if (c.command == "spectrum") r = cmd_spectrum(c);
    else if (c.command == "operator") r = cmd_operator(c);
    else if (c.command == "block") r = cmd_block(c);
    else throw Error(ErrorCode::InvalidArgument, "unknown command '" + c.command + "'");

    const char* dir = std::getenv(kOutDirEnv);
    std::optional<std::filesystem::path> path;
    if (c.out) {
        path = std::filesystem::path(*c.out);
        if (path->is_relative() && dir != nullptr && *dir != '\0') path = std::filesystem::path(dir) / *path;
    } else if (dir != nullptr && *dir != '\0') {
        path = std::filesystem::path(dir) / r.default_name;
    }
    if (path) {
        if (path->has_parent_path()) std::filesystem::create_directories(path->parent_path());
        std::ofstream f(*path, std::ios::binary);
        f << r.body;
        if (!f) {
            err << error_json("io-error", "cannot write '" + path->string() + "'");
            return kExitInternal;
        }
    } else {
        out << r.body;
    }
    if (r.exit_code == kExitVerification) err << error_json("verification-failed", c.command + " found a failing invariant");
    return r.exit_code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Supersymmetric N-particle quantum mechanics toolkit"};
    app.require_subcommand(1);
    RawConfig flags;
    std::vector<std::string> pair_values;
    std::map<CLI::App*, std::vector<std::pair<std::string, CLI::Option*>>> bound;
    std::map<CLI::App*, std::string> names;
    std::string config_path;

    const auto add = [&](CLI::App* sub, const std::string& key, const std::string& help) {
        bound[sub].emplace_back(key, sub->add_option("--" + key, flags[key], help));
    };
    const auto leaf = [&](CLI::App* sub, const std::string& name, const std::vector<std::string>& keys) {
        names[sub] = name;
        bound[sub].emplace_back("config", sub->add_option("--config", config_path, "key = value file; flags take precedence"));
        add(sub, "out", "output file (relative paths resolve against $SUSYQM_OUT_DIR)");
        add(sub, "format", "json, csv or text");
        add(sub, "seed", "random seed");
        for (const auto& k : keys) {
            if (k == "pair") {
                bound[sub].emplace_back("pair", sub->add_option("--pair", pair_values, "particle indices i j")->expected(2));
            } else {
                add(sub, k, k);
            }
        }
    };

    auto* rep = app.add_subcommand("rep", "permutation representation matrices B_ij of a fermion sector");
    rep->require_subcommand(0, 1);
    leaf(rep, "rep", {"n", "m", "pair"});
    auto* rep_verify = rep->add_subcommand("verify", "check every sector against the hook representation");
    leaf(rep_verify, "rep verify", {"n", "m"});
    auto* model = app.add_subcommand("model", "pair-interaction models");
    model->require_subcommand(1);
    auto* model_check = model->add_subcommand("check", "functional-equation residual and table diagnostic");
    leaf(model_check, "model check", {"name", "a", "b", "count"});
    auto* susy = app.add_subcommand("susy", "supersymmetry checks");
    susy->require_subcommand(1);
    auto* susy_verify = susy->add_subcommand("verify", "intertwining residuals and spectrum pairing");
    leaf(susy_verify, "susy verify", {"model", "n", "a", "b", "grid", "lo", "hi", "boundary", "k", "tol", "residual-tol"});
    auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues of one relative sector");
    leaf(spectrum, "spectrum", {"model", "n", "a", "b", "sector", "grid", "lo", "hi", "boundary", "k", "method"});
    auto* op = app.add_subcommand("operator", "dump a discrete operator as 1-based triplets");
    leaf(op, "operator", {"model", "n", "a", "b", "sector", "grid", "lo", "hi", "boundary", "kind"});
    auto* block = app.add_subcommand("block", "matrix potential of one block at a point");
    leaf(block, "block", {"model", "n", "a", "b", "sector", "branch", "at"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << error_json("invalid-argument", e.what());
        return kExitValidation;
    }

    CLI::App* chosen = nullptr;
    for (const auto& [sub, name] : names) {
        if (sub->parsed() && (chosen == nullptr || names[chosen].size() < name.size())) chosen = sub;
    }
    if (chosen == nullptr) {
        err << error_json("invalid-argument", "a command is required");
        return kExitValidation;
    }

    try {
        RawConfig raw;
        const auto& opts = bound[chosen];
        for (const auto& [key, o] : opts) {
            if (key == "config" && o->count() > 0) raw = read_config_file(config_path);
        }
        for (const auto& [key, o] : opts) {
            if (o->count() == 0 || key == "config") continue;
            raw[key] = key == "pair" ? pair_values.at(0) + "," + pair_values.at(1) : flags[key];
        }
        const RunConfig config = make_config(names[chosen], raw);
        return dispatch(config, out, err);
    } catch (const Error& e) {
        err << error_json(std::string(to_string(e.code())), e.what());
        return e.code() == ErrorCode::NonConvergence ? kExitVerification : kExitValidation;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what());
        return kExitInternal;
    }
}

} // namespace susyqm::cli
