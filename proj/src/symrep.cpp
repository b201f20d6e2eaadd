#include "susyqm/symrep.hpp"

#include "susyqm/combinatorics.hpp"
#include "susyqm/errors.hpp"
#include "susyqm/fock.hpp"
#include "susyqm/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace susyqm {

int Partition::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }
int CycleType::size() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

namespace {

void validate_rows(const std::vector<int>& rows, const char* what) {
    if (rows.empty()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be non-empty");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " entries must be positive");
        if (i > 0 && rows[i] > rows[i - 1]) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be weakly decreasing");
    }
}

void check_pair(int n, int i, int j) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw Error(ErrorCode::InvalidIndices, "transposition indices must be distinct and in [1, n]");
}

void check_rep_sector(int n, int sector) {
    if (n < 2 || n > kMaxFullSpaceModes) throw Error(ErrorCode::InvalidArgument, "representation matrices require 2 <= n <= " + std::to_string(kMaxFullSpaceModes));
    if (sector < 0 || sector > n - 1) throw Error(ErrorCode::InvalidSector, "sector must lie in [0, n-1]");
}

} // namespace

void validate(const Partition& p) { validate_rows(p.rows, "partition"); }
void validate(const CycleType& c) { validate_rows(c.lengths, "cycle type"); }

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "partitions need n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back({cur});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<CycleType> cycle_types_of(int n) {
    std::vector<CycleType> out;
    for (auto& p : partitions_of(n)) out.push_back({p.rows});
    return out;
}

Eigen::MatrixXd t_matrix(int n, int i, int j) {
    check_pair(n, i, j);
    Eigen::MatrixXd t = Eigen::MatrixXd::Identity(n, n);
    t(i - 1, i - 1) = 0.0;
    t(j - 1, j - 1) = 0.0;
    t(i - 1, j - 1) = 1.0;
    t(j - 1, i - 1) = 1.0;
    return t;
}

Eigen::MatrixXd t_tilde(int n, int i, int j) {
    check_pair(n, i, j);
    const JacobiMatrix jm = build_R(n);
    return jm.R * t_matrix(n, i, j) * jm.R.transpose();
}

Eigen::MatrixXd compound_matrix(const Eigen::MatrixXd& a, int k) {
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    const auto rs = lexicographic_subsets(rows, k);
    const auto cs = lexicographic_subsets(cols, k);
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rs.size()), static_cast<Eigen::Index>(cs.size()));
    Eigen::MatrixXd minor(k, k);
    for (std::size_t r = 0; r < rs.size(); ++r) {
        for (std::size_t c = 0; c < cs.size(); ++c) {
            if (k == 0) {
                out(0, 0) = 1.0;
                continue;
            }
            for (int p = 0; p < k; ++p) {
                for (int q = 0; q < k; ++q) minor(p, q) = a(rs[r][static_cast<std::size_t>(p)], cs[c][static_cast<std::size_t>(q)]);
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = minor.determinant();
        }
    }
    return out;
}

Eigen::MatrixXd b_matrix(int n, int sector, int i, int j) {
    check_rep_sector(n, sector);
    check_pair(n, i, j);
    const PhiBasis pb = build_phi_basis(n, sector);
    const IntOperator k = permutation_operator(n, sector, i, j);
    return pb.vectors.transpose() * multiply(k, pb.vectors);
}

Eigen::MatrixXd b_matrix_exterior(int n, int sector, int i, int j) {
    check_rep_sector(n, sector);
    const Eigen::MatrixXd rel = t_tilde(n, i, j).topLeftCorner(n - 1, n - 1);
    return compound_matrix(rel, sector);
}

const Eigen::MatrixXd& RepMatrixSet::at(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = matrices.find({i, j});
    if (it == matrices.end()) throw Error(ErrorCode::InvalidIndices, "no representation matrix for this pair");
    return it->second;
}

Eigen::Index RepMatrixSet::dim() const {
    return static_cast<Eigen::Index>(binomial(n - 1, sector));
}

RepMatrixSet build_rep_matrices(int n, int sector, bool parallel) {
    check_rep_sector(n, sector);
    const PhiBasis pb = build_phi_basis(n, sector);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<Eigen::MatrixXd> slots(pairs.size());
    const auto count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (long p = 0; p < count; ++p) {
        const auto [i, j] = pairs[static_cast<std::size_t>(p)];
        const IntOperator k = permutation_operator(n, sector, i, j);
        slots[static_cast<std::size_t>(p)] = pb.vectors.transpose() * multiply(k, pb.vectors);
    }
    RepMatrixSet set{n, sector, {}};
    for (std::size_t p = 0; p < pairs.size(); ++p) set.matrices.emplace(pairs[p], std::move(slots[p]));
    return set;
}

double RepAxiomReport::max() const { return std::max({orthogonality, involution, braid, conjugation}); }

RepAxiomReport check_rep_axioms(const RepMatrixSet& reps) {
    RepAxiomReport r;
    const int n = reps.n;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(reps.dim(), reps.dim());
    const auto dev = [](const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); };
    const auto b = [&](int i, int j) -> const Eigen::MatrixXd& { return i < j ? reps.at(i, j) : reps.at(j, i); };
    for (const auto& [key, m] : reps.matrices) {
        r.orthogonality = std::max(r.orthogonality, dev(m.transpose() * m - id));
        r.involution = std::max(r.involution, dev(m * m - id));
    }
    for (int i = 1; i + 1 < n; ++i) {
        const Eigen::MatrixXd st = b(i, i + 1) * b(i + 1, i + 2);
        r.braid = std::max(r.braid, dev(st * st * st - id));
    }
    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            r.braid = std::max(r.braid, dev(b(i, i + 1) * b(j, j + 1) - b(j, j + 1) * b(i, i + 1)));
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                r.conjugation = std::max(r.conjugation, dev(b(i, k) - b(i, j) * b(j, k) * b(i, j)));
            }
        }
    }
    return r;
}

void validate_permutation(int n, const Permutation& perm) {
    if (static_cast<int>(perm.size()) != n) throw Error(ErrorCode::InvalidPermutation, "permutation length differs from n");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw Error(ErrorCode::InvalidPermutation, "one-line notation is not a bijection of 1..n");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

std::vector<Transposition> transposition_decomposition(const Permutation& perm) {
    const int n = static_cast<int>(perm.size());
    validate_permutation(n, perm);
    std::vector<Transposition> out;
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<int> cycle;
        for (int k = start; !visited[static_cast<std::size_t>(k - 1)]; k = perm[static_cast<std::size_t>(k - 1)]) {
            visited[static_cast<std::size_t>(k - 1)] = true;
            cycle.push_back(k);
        }
        // (c1 c2 ... cm) = (c1 cm)(c1 c_{m-1}) ... (c1 c2).
        for (std::size_t q = cycle.size(); q-- > 1;) out.emplace_back(cycle[0], cycle[q]);
    }
    return out;
}

Eigen::MatrixXd b_permutation(const RepMatrixSet& reps, const std::vector<Transposition>& factors) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(reps.dim(), reps.dim());
    for (const auto& [i, j] : factors) {
        check_pair(reps.n, i, j);
        m = m * reps.at(i, j);
    }
    return m;
}

Eigen::MatrixXd b_permutation(const RepMatrixSet& reps, const Permutation& perm) {
    validate_permutation(reps.n, perm);
    return b_permutation(reps, transposition_decomposition(perm));
}

Eigen::MatrixXd b_permutation(int n, int sector, const Permutation& perm) {
    return b_permutation(build_rep_matrices(n, sector, false), perm);
}

Permutation class_representative(const CycleType& c) {
    validate(c);
    Permutation perm;
    int base = 1;
    for (int len : c.lengths) {
        for (int q = 0; q < len; ++q) perm.push_back(base + (q + 1) % len);
        base += len;
    }
    return perm;
}

CycleType cycle_type_of(const Permutation& perm) {
    const int n = static_cast<int>(perm.size());
    validate_permutation(n, perm);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    CycleType c;
    for (int start = 1; start <= n; ++start) {
        int len = 0;
        for (int k = start; !visited[static_cast<std::size_t>(k - 1)]; k = perm[static_cast<std::size_t>(k - 1)]) {
            visited[static_cast<std::size_t>(k - 1)] = true;
            ++len;
        }
        if (len > 0) c.lengths.push_back(len);
    }
    std::sort(c.lengths.rbegin(), c.lengths.rend());
    return c;
}

double character(const RepMatrixSet& reps, const CycleType& c) {
    if (c.size() != reps.n) throw Error(ErrorCode::SizeMismatch, "cycle type does not partition n");
    return b_permutation(reps, class_representative(c)).trace();
}

double character(int n, int sector, const CycleType& c) {
    validate(c);
    return character(build_rep_matrices(n, sector, false), c);
}

namespace {

// Beta-set form of the Murnaghan-Nakayama recursion. Removing a border strip of
// length r replaces some b by b - r; its height parity is the count of beta
// numbers strictly between.
std::int64_t mn_beta(std::vector<int>& beta, const std::vector<int>& cycles, std::size_t next) {
    if (next == cycles.size()) return 1;
    const int r = cycles[next];
    std::int64_t total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
        const int b = beta[idx];
        const int target = b - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int other : beta) {
            if (other > target && other < b) ++between;
        }
        beta[idx] = target;
        const std::int64_t sub = mn_beta(beta, cycles, next + 1);
        beta[idx] = b;
        total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
}

} // namespace

std::int64_t mn_character(const Partition& lambda, const CycleType& c) {
    validate(lambda);
    validate(c);
    if (lambda.size() != c.size()) throw Error(ErrorCode::SizeMismatch, "partition and cycle type have different sizes");
    const int len = static_cast<int>(lambda.rows.size());
    std::vector<int> beta;
    for (int i = 0; i < len; ++i) beta.push_back(lambda.rows[static_cast<std::size_t>(i)] + len - 1 - i);
    return mn_beta(beta, c.lengths, 0);
}

std::int64_t class_size(const CycleType& c) {
    validate(c);
    std::map<int, int> mult;
    for (int len : c.lengths) ++mult[len];
    std::int64_t denom = 1;
    for (const auto& [j, m] : mult) {
        for (int q = 0; q < m; ++q) denom *= j;
        denom *= factorial(m);
    }
    return factorial(c.size()) / denom;
}

IrreducibilityReport verify_irreducible(const RepMatrixSet& reps) {
    IrreducibilityReport rep{reps.n, reps.sector, cycle_types_of(reps.n), {}, 0.0, false};
    double acc = 0.0;
    for (const auto& c : rep.classes) {
        const double chi = character(reps, c);
        rep.characters.push_back(chi);
        acc += static_cast<double>(class_size(c)) * chi * chi;
    }
    rep.inner_product = acc / static_cast<double>(factorial(reps.n));
    rep.pass = std::abs(rep.inner_product - 1.0) < 1e-9;
    return rep;
}

IrreducibilityReport verify_irreducible(int n, int sector) {
    return verify_irreducible(build_rep_matrices(n, sector, false));
}

Partition identify_tableau(const IrreducibilityReport& report) {
    std::vector<Partition> matches;
    for (const auto& lambda : partitions_of(report.n)) {
        bool ok = true;
        for (std::size_t c = 0; c < report.classes.size() && ok; ++c) {
            ok = std::abs(static_cast<double>(mn_character(lambda, report.classes[c])) - report.characters[c]) < 1e-9;
        }
        if (ok) matches.push_back(lambda);
    }
    if (matches.empty()) throw Error(ErrorCode::NoMatch, "no irreducible character matches the sector");
    if (matches.size() > 1) throw Error(ErrorCode::MultipleMatch, "several irreducible characters match the sector");
    return matches.front();
}

Partition identify_tableau(int n, int sector) { return identify_tableau(verify_irreducible(n, sector)); }

std::int64_t hook_dimension(const Partition& p) {
    validate(p);
    std::vector<int> cols(static_cast<std::size_t>(p.rows.front()), 0);
    for (int r : p.rows) {
        for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
    }
    std::int64_t num = factorial(p.size());
    std::int64_t hooks = 1;
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        for (int c = 0; c < p.rows[r]; ++c) {
            hooks *= (p.rows[r] - c - 1) + (cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
        }
    }
    return num / hooks;
}

} // namespace susyqm
