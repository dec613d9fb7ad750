#include "csm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/SVD>

namespace csm {

namespace {

double entropy_of_probs(const Eigen::VectorXd& p) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) < -1e-6)
            throw std::invalid_argument("entropy: eigenvalue below -1e-6");
        if (p(i) > 0.0) s -= p(i) * std::log(p(i));
    }
    return std::max(0.0, s);
}

}  // namespace

double concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw std::invalid_argument("concurrence: density matrix must be 4x4");
    const Eigen::MatrixXcd& r = rho.mat();

    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0; yy(1, 2) = 1.0; yy(2, 1) = 1.0; yy(3, 0) = -1.0;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r);
    // Eigenvalues at the rounding floor are genuine zeros of the state;
    // rooting their ~1e-17 noise would cost eight digits in the lambdas.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max(es.eigenvalues().maxCoeff(), 0.0);
    const Eigen::Vector4d root = es.eigenvalues().unaryExpr(
        [floor](double v) { return v > floor ? std::sqrt(v) : 0.0; });
    const Eigen::Matrix4cd sqrt_r =
        es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();

    // The Wootters lambdas are the singular values of sqrt(rho) YY conj(sqrt(rho)),
    // which an SVD resolves linearly instead of through their squares.
    const Eigen::Matrix4cd b = sqrt_r * yy * sqrt_r.conjugate();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(b);
    const Eigen::Vector4d l = svd.singularValues();
    return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat(), Eigen::EigenvaluesOnly);
    return entropy_of_probs(es.eigenvalues());
}

double relative_entropy_of_coherence(const DensityMatrix& rho) {
    const Eigen::VectorXd diag = rho.mat().diagonal().real();
    return std::max(0.0, entropy_of_probs(diag) - von_neumann_entropy(rho));
}

double purity(const DensityMatrix& rho) { return rho.mat().squaredNorm(); }

}  // namespace csm
