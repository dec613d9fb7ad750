#include "csm/density_matrix.hpp"

#include <stdexcept>

namespace csm {

DensityMatrix DensityMatrix::validated(const Eigen::MatrixXcd& m, double herm_tol,
                                       double trace_tol, double eig_floor) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    const double herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > herm_tol)
        throw std::invalid_argument("DensityMatrix: not hermitian within tolerance");
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    if (std::abs(h.trace().real() - 1.0) > trace_tol ||
        std::abs(h.trace().imag()) > trace_tol)
        throw std::invalid_argument("DensityMatrix: trace must be 1 within tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < eig_floor)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
    return DensityMatrix(std::move(h));
}

}  // namespace csm
