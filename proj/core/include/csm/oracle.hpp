#pragma once

#include "csm/single_qubit.hpp"
#include "csm/two_qubit.hpp"

// Brute-force reference implementations for validation. Deliberately
// simple and slow: dense matrices, literal operator products, no reuse
// of the closed forms they are meant to check.
namespace csm::oracle {

// Hamiltonian restricted to the symmetric bath subspace.
// Basis index 2n + s with s in {0 up, 1 down}, n = up bath spins.
Eigen::MatrixXcd build_sector(const SingleQubitParams& p);
// Basis index 4n + c with c in {uu, ud, du, dd}.
Eigen::MatrixXcd build_sector(const TwoQubitParams& p);

// Full product-space Hamiltonians built from literal spin-1/2 operators.
// Bath spins are bits 0..N-1 (set bit = up); the central qubits sit above
// them, first qubit highest. Capacity cap: qubits + bath spins <= 14.
Eigen::MatrixXcd build_full(const SingleQubitParams& p);
Eigen::MatrixXcd build_full(const TwoQubitParams& p);
// Two decoupled copies: qubit 1 with bath bits [N2, N2+N1), qubit 2 with
// bath bits [0, N2); qubit 1 is the top bit, qubit 2 the one below it.
Eigen::MatrixXcd build_full_individual(const SingleQubitParams& p1,
                                       const SingleQubitParams& p2);

// exp(-iHt) psi0 through a dense eigendecomposition of hermitian H.
Eigen::VectorXcd propagate(const Eigen::MatrixXcd& H, const Eigen::VectorXcd& psi0,
                           double t);

// Product-space embeddings of symmetric-bath initial states.
Eigen::VectorXcd embed(const QubitState& q0, const BathState& bath0);
Eigen::VectorXcd embed(const TwoQubitState& q0, const BathState& bath0);
Eigen::VectorXcd embed_individual(const TwoQubitState& q0, const BathState& bath1,
                                  const BathState& bath2);

// Sector-basis initial vectors matching build_sector index order.
Eigen::VectorXcd sector_initial(const QubitState& q0, const BathState& bath0);
Eigen::VectorXcd sector_initial(const TwoQubitState& q0, const BathState& bath0);

// Projections of a product-space state onto the symmetric sector,
// indexed by up-spin count. Leakage out of the sector is the norm the
// projection loses.
SingleAmplitudeTable extract(const Eigen::VectorXcd& psi, int n_spins, double t);
std::array<Eigen::VectorXcd, 4> extract_two(const Eigen::VectorXcd& psi, int n_spins);

// Reduced central state from a product-space pure state whose bath
// occupies the lowest bath_bits bits: 2x2 for one qubit, 4x4 for two.
Eigen::Matrix2cd reduce_central_one(const Eigen::VectorXcd& psi, int bath_bits);
Eigen::Matrix4cd reduce_central_two(const Eigen::VectorXcd& psi, int bath_bits);

// Reduced pair state of bath spins (bits j1, j2) from a product-space
// pure state; central degrees of freedom are traced out with the rest.
// Basis {++, +-, -+, --} with + meaning up.
Eigen::Matrix4cd reduce_bath_pair(const Eigen::VectorXcd& psi, int j1, int j2);

}  // namespace csm::oracle
