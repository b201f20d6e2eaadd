#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <functional>
#include <vector>

namespace susyqm {

using CsrMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor, int>;

// Each parallel kernel has a serial twin that performs the same floating-point
// operations in the same order per output entry, so results match bit for bit.

void csr_matvec_serial(const CsrMatrix& a, const Eigen::VectorXd& x, Eigen::VectorXd& y);
void csr_matvec_parallel(const CsrMatrix& a, const Eigen::VectorXd& x, Eigen::VectorXd& y);

/// Y = A X for a block of column vectors.
void csr_matmat_serial(const CsrMatrix& a, const Eigen::MatrixXd& x, Eigen::MatrixXd& y);
void csr_matmat_parallel(const CsrMatrix& a, const Eigen::MatrixXd& x, Eigen::MatrixXd& y);

/// out[i] = f(i) for i < count. The exception from the lowest failing index is rethrown after the loop.
std::vector<double> sample_serial(std::size_t count, const std::function<double(std::size_t)>& f);
std::vector<double> sample_parallel(std::size_t count, const std::function<double(std::size_t)>& f);

} // namespace susyqm
