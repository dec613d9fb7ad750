#include "csm/individual_baths.hpp"

#include <stdexcept>

namespace csm {

JointInitialState JointInitialState::make(const DensityMatrix& rho0,
                                          const SingleQubitParams& params1,
                                          const BathState& bath1,
                                          const SingleQubitParams& params2,
                                          const BathState& bath2) {
    if (rho0.dim() != 4)
        throw std::invalid_argument("JointInitialState: rho0 must be 4x4");
    if (params1.n_spins != bath1.n_spins() || params2.n_spins != bath2.n_spins())
        throw std::invalid_argument("JointInitialState: bath sizes do not match params");
    return {rho0, params1, params2, bath1, bath2};
}

DensityMatrix compose(const JointInitialState& state, double t) {
    const Channel y1 = channel(state.params1, state.bath1, t);
    const Channel y2 = channel(state.params2, state.bath2, t);
    Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap)
            for (int b = 0; b < 2; ++b)
                for (int bp = 0; bp < 2; ++bp) {
                    std::complex<double> acc = 0.0;
                    for (int c = 0; c < 2; ++c)
                        for (int cp = 0; cp < 2; ++cp)
                            for (int d = 0; d < 2; ++d)
                                for (int dp = 0; dp < 2; ++dp)
                                    acc += y1.Y[a][b][c][d] * y2.Y[ap][bp][cp][dp] *
                                           state.rho0(2 * c + cp, 2 * d + dp);
                    r(2 * a + ap, 2 * b + bp) = acc;
                }
    return DensityMatrix::validated(r, 1e-9, 1e-9, -1e-9);
}

}  // namespace csm
