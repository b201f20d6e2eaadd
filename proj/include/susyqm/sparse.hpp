#pragma once

#include "susyqm/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

namespace susyqm {

/**
 * Coordinate-format sparse matrix.
 *
 * Entries are kept sorted row-major with no duplicate (row, col) pairs and no
 * explicit zeros. The value type is an integer for exact fermionic algebra and
 * double once irrational Jacobi coefficients enter.
 */
template <typename T>
class SparseOperator {
public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        T value;
    };

    SparseOperator() = default;
    SparseOperator(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    /// Builds an operator from unordered triplets; duplicates are summed and zeros dropped.
    static SparseOperator from_triplets(std::size_t rows, std::size_t cols, std::vector<Entry> triplets) {
        SparseOperator op(rows, cols);
        for (const auto& e : triplets) {
            if (e.row >= rows || e.col >= cols) {
                throw Error(ErrorCode::DimensionMismatch, "triplet index outside operator shape");
            }
            if constexpr (std::is_floating_point_v<T>) {
                if (!std::isfinite(e.value)) {
                    throw Error(ErrorCode::InvalidArgument, "non-finite operator entry");
                }
            }
        }
        std::sort(triplets.begin(), triplets.end(), [](const Entry& a, const Entry& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (const auto& e : triplets) {
            if (!op.entries_.empty() && op.entries_.back().row == e.row && op.entries_.back().col == e.col) {
                op.entries_.back().value += e.value;
            } else {
                op.entries_.push_back(e);
            }
        }
        std::erase_if(op.entries_, [](const Entry& e) { return e.value == T{0}; });
        return op;
    }

    static SparseOperator identity(std::size_t n) {
        std::vector<Entry> t;
        t.reserve(n);
        for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, T{1}});
        return from_triplets(n, n, std::move(t));
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t nnz() const noexcept { return entries_.size(); }
    [[nodiscard]] std::span<const Entry> entries() const noexcept { return entries_; }
    [[nodiscard]] bool is_zero() const noexcept { return entries_.empty(); }

    [[nodiscard]] T at(std::size_t r, std::size_t c) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{r, c, T{}}, [](const Entry& a, const Entry& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        if (it != entries_.end() && it->row == r && it->col == c) return it->value;
        return T{0};
    }

    [[nodiscard]] SparseOperator transpose() const {
        std::vector<Entry> t;
        t.reserve(entries_.size());
        for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
        return from_triplets(cols_, rows_, std::move(t));
    }

    [[nodiscard]] SparseOperator scaled(T factor) const {
        std::vector<Entry> t(entries_.begin(), entries_.end());
        for (auto& e : t) e.value *= factor;
        return from_triplets(rows_, cols_, std::move(t));
    }

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
        a.require_same_shape(b);
        std::vector<Entry> t(a.entries_.begin(), a.entries_.end());
        t.insert(t.end(), b.entries_.begin(), b.entries_.end());
        return from_triplets(a.rows_, a.cols_, std::move(t));
    }

    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) { return a + b.scaled(T{-1}); }

    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "operator product shape mismatch");
        std::vector<std::size_t> row_start(b.rows_ + 1, 0);
        for (const auto& e : b.entries_) ++row_start[e.row + 1];
        for (std::size_t r = 0; r < b.rows_; ++r) row_start[r + 1] += row_start[r];
        std::vector<Entry> t;
        for (const auto& ea : a.entries_) {
            for (std::size_t k = row_start[ea.col]; k < row_start[ea.col + 1]; ++k) {
                const auto& eb = b.entries_[k];
                t.push_back({ea.row, eb.col, ea.value * eb.value});
            }
        }
        return from_triplets(a.rows_, b.cols_, std::move(t));
    }

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t k = 0; k < a.entries_.size(); ++k) {
            const auto& x = a.entries_[k];
            const auto& y = b.entries_[k];
            if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
        }
        return true;
    }

    template <typename U>
    [[nodiscard]] SparseOperator<U> cast() const {
        std::vector<typename SparseOperator<U>::Entry> t;
        t.reserve(entries_.size());
        for (const auto& e : entries_) t.push_back({e.row, e.col, static_cast<U>(e.value)});
        return SparseOperator<U>::from_triplets(rows_, cols_, std::move(t));
    }

    [[nodiscard]] Eigen::MatrixXd to_dense() const {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
        for (const auto& e : entries_) {
            m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = static_cast<double>(e.value);
        }
        return m;
    }

private:
    void require_same_shape(const SparseOperator& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw Error(ErrorCode::DimensionMismatch, "operator sum shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> entries_;
};

/// Dense product op * X.
template <typename T>
Eigen::MatrixXd multiply(const SparseOperator<T>& op, const Eigen::MatrixXd& x) {
    if (static_cast<std::size_t>(x.rows()) != op.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "operator/vector shape mismatch");
    }
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(op.rows()), x.cols());
    for (const auto& e : op.entries()) {
        y.row(static_cast<Eigen::Index>(e.row)) += static_cast<double>(e.value) * x.row(static_cast<Eigen::Index>(e.col));
    }
    return y;
}

using IntOperator = SparseOperator<std::int64_t>;
using RealOperator = SparseOperator<double>;

} // namespace susyqm
