#include "csm/intrabath.hpp"

#include <stdexcept>

#include "csm/dicke.hpp"

namespace csm {

PairDensity pair_density(const DensityMatrix& rho_bath) {
    const int N = static_cast<int>(rho_bath.dim()) - 1;
    if (N < 2)
        throw std::invalid_argument("pair_density: need at least 2 bath spins");
    const PairElementTable el(N);

    double p1 = 0.0, p2 = 0.0;
    std::complex<double> p3 = 0.0, p4 = 0.0, p5 = 0.0;
    for (int m = 0; m <= N; ++m) {
        const double pop = rho_bath(m, m).real();
        p1 += pop * el.diag_uu(m);
        p2 += pop * el.diag_ud(m);
        if (m + 1 <= N) {
            p3 += rho_bath(m, m + 1) * el.step_up(m);
            p5 += rho_bath(m, m + 1) * el.step_dn(m);
        }
        if (m + 2 <= N) p4 += rho_bath(m, m + 2) * el.double_up(m);
    }

    Eigen::Matrix4cd chi;
    chi << p1, p3, p3, p4,
           std::conj(p3), p2, p2, p5,
           std::conj(p3), p2, p2, p5,
           std::conj(p4), std::conj(p5), std::conj(p5), 1.0 - p1 - 2.0 * p2;

    PairDensity out{DensityMatrix::validated(chi, 1e-9, 1e-9, -1e-9), p1, p2, p3, p4, p5};
    return out;
}

double reduced_concurrence(const PairDensity& chi_t, const PairDensity& chi_0) {
    const double c0 = concurrence(chi_0.chi);
    if (c0 <= 0.0)
        throw std::domain_error("reduced_concurrence: initial pair concurrence is zero");
    return concurrence(chi_t.chi) / c0;
}

}  // namespace csm
