#pragma once

#include <Eigen/Dense>

namespace csm {

// Validated density matrix: hermitian, unit trace, positive semidefinite
// up to small tolerances. The stored matrix is exactly hermitian.
class DensityMatrix {
public:
    // Checks the invariants and symmetrizes. Throws std::invalid_argument
    // if the input is farther from a density matrix than the tolerances.
    static DensityMatrix validated(const Eigen::MatrixXcd& m,
                                   double herm_tol = 1e-10,
                                   double trace_tol = 1e-10,
                                   double eig_floor = -1e-9);

    Eigen::Index dim() const { return m_.rows(); }
    const Eigen::MatrixXcd& mat() const { return m_; }
    std::complex<double> operator()(Eigen::Index i, Eigen::Index j) const {
        return m_(i, j);
    }

private:
    explicit DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}
    Eigen::MatrixXcd m_;
};

}  // namespace csm
