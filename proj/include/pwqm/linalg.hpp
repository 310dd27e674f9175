#ifndef PWQM_LINALG_HPP
#define PWQM_LINALG_HPP

#include <Eigen/Core>

namespace pwqm {

struct EigenPairs {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // one column per eigenvalue
};

struct RealEigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Lowest `count` eigenpairs of a Hermitian matrix (LAPACK zheevr).
/// count <= 0 or count >= n computes the full spectrum.
EigenPairs eigh_lowest(const Eigen::MatrixXcd& matrix, int count);

/// Full spectrum, eigenvalues only (zheevd without vectors).
Eigen::VectorXd eigh_values(const Eigen::MatrixXcd& matrix);

/// Real symmetric counterpart (dsyevr).
RealEigenPairs eigh_lowest(const Eigen::MatrixXd& matrix, int count);

}  // namespace pwqm

#endif
