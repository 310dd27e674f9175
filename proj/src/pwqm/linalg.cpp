#include "pwqm/linalg.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace pwqm {

namespace {
[[noreturn]] void fail(const char* routine, lapack_int info) {
  throw std::runtime_error(std::string("eigensolver failure: ") + routine +
                           " returned info=" + std::to_string(info));
}
}  // namespace

EigenPairs eigh_lowest(const Eigen::MatrixXcd& matrix, int count) {
  const lapack_int n = static_cast<lapack_int>(matrix.rows());
  if (matrix.cols() != n) throw std::invalid_argument("eigh: matrix not square");
  const bool full = count <= 0 || count >= n;
  const lapack_int iu = full ? n : count;

  Eigen::MatrixXcd work = matrix;
  EigenPairs out;
  out.values.resize(n);
  out.vectors.resize(n, iu);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(iu));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, 'V', full ? 'A' : 'I', 'L', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n, 0.0, 0.0, 1, iu,
      0.0, &found, out.values.data(),
      reinterpret_cast<lapack_complex_double*>(out.vectors.data()), n,
      isuppz.data());
  if (info != 0) fail("zheevr", info);
  out.values.conservativeResize(found);
  out.vectors.conservativeResize(n, found);
  return out;
}

Eigen::VectorXd eigh_values(const Eigen::MatrixXcd& matrix) {
  const lapack_int n = static_cast<lapack_int>(matrix.rows());
  Eigen::MatrixXcd work = matrix;
  Eigen::VectorXd w(n);
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'N', 'L', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n, w.data());
  if (info != 0) fail("zheevd", info);
  return w;
}

RealEigenPairs eigh_lowest(const Eigen::MatrixXd& matrix, int count) {
  const lapack_int n = static_cast<lapack_int>(matrix.rows());
  if (matrix.cols() != n) throw std::invalid_argument("eigh: matrix not square");
  const bool full = count <= 0 || count >= n;
  const lapack_int iu = full ? n : count;

  Eigen::MatrixXd work = matrix;
  RealEigenPairs out;
  out.values.resize(n);
  out.vectors.resize(n, iu);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(iu));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, 'V', full ? 'A' : 'I', 'L', n, work.data(), n, 0.0, 0.0,
      1, iu, 0.0, &found, out.values.data(), out.vectors.data(), n,
      isuppz.data());
  if (info != 0) fail("dsyevr", info);
  out.values.conservativeResize(found);
  out.vectors.conservativeResize(n, found);
  return out;
}

}  // namespace pwqm
