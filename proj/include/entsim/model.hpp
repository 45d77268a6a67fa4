#ifndef ENTSIM_MODEL_HPP
#define ENTSIM_MODEL_HPP

#include "entsim/liouville.hpp"
#include "entsim/params.hpp"
#include "entsim/xstate.hpp"

namespace entsim {

/// Reduced 6x6 generator of the engine dynamics on the X-form subspace.
LiouvilleOperator reduced_liouvillian(const EngineParams& p);

/// Full 16x16 generator -i[H_S, .] + sum_j (gamma_j^+ D[sigma_+^j] +
/// gamma_j^- D[sigma_-^j]) in the canonical product basis. Its
/// restriction to the X subspace equals reduced_liouvillian(p).
LiouvilleOperator full_liouvillian(const EngineParams& p);

/// Completely positive jump parts L_j^+ = gamma_j^+ sigma_+^j . sigma_-^j
/// and L_j^- = gamma_j^- sigma_-^j . sigma_+^j. The generator decomposes
/// as L = L_0 + sum of all four.
struct JumpSuperoperators {
  LiouvilleOperator left_plus;
  LiouvilleOperator left_minus;
  LiouvilleOperator right_plus;
  LiouvilleOperator right_minus;
};

JumpSuperoperators jump_superoperators(const EngineParams& p,
                                       BasisTag tag = BasisTag::reduced_x_basis);

enum class InitialStateKind { ground, thermal, singlet };

/// The three canonical initial states: both qubits in the ground state;
/// a product of single-qubit states populated by the bath occupations
/// f_j(eps_s, T_j, mu_j); or the maximally entangled state
/// (|01>+|10>)/sqrt(2), for which c = -i/2.
XState initial_state(InitialStateKind kind, const EngineParams& p);

} // namespace entsim

#endif
