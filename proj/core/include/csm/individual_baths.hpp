#pragma once

#include "csm/density_matrix.hpp"
#include "csm/single_qubit.hpp"

namespace csm {

// Two noninteracting qubits, each coupled to its own bath. The joint
// reduced dynamics factorizes into the two single-qubit channels.
struct JointInitialState {
    DensityMatrix rho0;  // 4x4, basis {uu, ud, du, dd}
    SingleQubitParams params1, params2;
    BathState bath1, bath2;

    static JointInitialState make(const DensityMatrix& rho0,
                                  const SingleQubitParams& params1,
                                  const BathState& bath1,
                                  const SingleQubitParams& params2,
                                  const BathState& bath2);
};

// rho(t)_{a a', b b'} = sum Y1_{a b c d} Y2_{a' b' c' d'} rho0_{c c', d d'}.
DensityMatrix compose(const JointInitialState& state, double t);

}  // namespace csm
