#include "susyqm/kernels.hpp"

#include "susyqm/errors.hpp"

#include <exception>

namespace susyqm {

namespace {

void check_shapes(const CsrMatrix& a, Eigen::Index x_rows) {
    if (a.cols() != x_rows) throw Error(ErrorCode::DimensionMismatch, "sparse product shape mismatch");
}

inline double row_dot(const CsrMatrix& a, Eigen::Index r, const double* x) {
    const int* outer = a.outerIndexPtr();
    const int* inner = a.innerIndexPtr();
    const double* val = a.valuePtr();
    double s = 0.0;
    for (int p = outer[r]; p < outer[r + 1]; ++p) s += val[p] * x[inner[p]];
    return s;
}

} // namespace

void csr_matvec_serial(const CsrMatrix& a, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    check_shapes(a, x.size());
    if (!a.isCompressed()) throw Error(ErrorCode::InvalidArgument, "sparse matrix must be compressed");
    y.resize(a.rows());
    for (Eigen::Index r = 0; r < a.rows(); ++r) y(r) = row_dot(a, r, x.data());
}

void csr_matvec_parallel(const CsrMatrix& a, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    check_shapes(a, x.size());
    if (!a.isCompressed()) throw Error(ErrorCode::InvalidArgument, "sparse matrix must be compressed");
    y.resize(a.rows());
    const Eigen::Index rows = a.rows();
#pragma omp parallel for schedule(static)
    for (Eigen::Index r = 0; r < rows; ++r) y(r) = row_dot(a, r, x.data());
}

void csr_matmat_serial(const CsrMatrix& a, const Eigen::MatrixXd& x, Eigen::MatrixXd& y) {
    check_shapes(a, x.rows());
    y.resize(a.rows(), x.cols());
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        for (Eigen::Index r = 0; r < a.rows(); ++r) y(r, c) = row_dot(a, r, x.col(c).data());
    }
}

void csr_matmat_parallel(const CsrMatrix& a, const Eigen::MatrixXd& x, Eigen::MatrixXd& y) {
    check_shapes(a, x.rows());
    y.resize(a.rows(), x.cols());
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = x.cols();
#pragma omp parallel for schedule(static)
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) y(r, c) = row_dot(a, r, x.col(c).data());
    }
}

std::vector<double> sample_serial(std::size_t count, const std::function<double(std::size_t)>& f) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
}

std::vector<double> sample_parallel(std::size_t count, const std::function<double(std::size_t)>& f) {
    std::vector<double> out(count);
    std::exception_ptr failure;
    long long failed_at = -1;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(susyqm_sample_failure)
            if (failed_at < 0 || i < failed_at) {
                failed_at = i;
                failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace susyqm
