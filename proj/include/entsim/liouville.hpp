#ifndef ENTSIM_LIOUVILLE_HPP
#define ENTSIM_LIOUVILLE_HPP

#include <Eigen/Dense>
#include <complex>

#include "entsim/xstate.hpp"

namespace entsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;

/// Basis of the vectorized representation. The reduced basis orders the
/// X-form components as (|00><00|, |01><01|, |10><10|, |11><11|,
/// |01><10|, |10><01|); the full basis is row-major over the 4x4
/// canonical matrix.
enum class BasisTag { reduced_x_basis, full_canonical };

constexpr int dim_of(BasisTag tag) {
  return tag == BasisTag::reduced_x_basis ? 6 : 16;
}

/// Dense superoperator acting on vectorized states.
struct LiouvilleOperator {
  BasisTag basis_tag = BasisTag::reduced_x_basis;
  Matrix entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Vectorized density matrix.
struct VectorizedState {
  BasisTag basis_tag = BasisTag::reduced_x_basis;
  Vector entries;

  int dim() const { return static_cast<int>(entries.size()); }
};

/// Row vector representing the trace functional in the given basis.
RowVector trace_row(BasisTag tag);

/// Map an X state to its vectorized form. The coherence slots store the
/// full off-diagonal matrix elements i*c and -i*conj(c).
VectorizedState vectorize(const XState& s, BasisTag tag);

/// Inverse of vectorize for the reduced basis. Throws NonPhysicalState
/// when a population is below -1e-9 or the trace deviates from 1 by
/// more than 1e-8; throws DimensionMismatch on a full-basis input.
XState devectorize(const VectorizedState& v);

/// Project a full-basis vector onto the reduced X basis (drops the ten
/// components that vanish identically under the engine dynamics).
VectorizedState restrict_to_x(const VectorizedState& full);

/// exp(M) for a dense generator. Eigendecomposition when the
/// eigenvector condition number stays below 1e8, otherwise
/// scaling-and-squaring; the generator may be defective at eta = 0.
Matrix generator_exp(const Matrix& m);

/// exp(L t) v0 for t >= 0. Throws DimensionMismatch on basis mismatch.
VectorizedState propagate(const LiouvilleOperator& op, const VectorizedState& v0, double t);

/// Right null vector of L normalized to unit trace, via SVD. Throws
/// DegenerateSteadyState unless the kernel is one-dimensional
/// (second-smallest singular value > 1e-10 * largest).
VectorizedState steady_state(const LiouvilleOperator& op);

/// Drazin-style pseudoinverse R on the trace-zero subspace:
/// R L = L R = I - |ss>(trace row), and the lag integral of
/// exp(L tau) - |ss>(trace row) over tau in [0, inf) equals -R.
LiouvilleOperator traceless_pseudoinverse(const LiouvilleOperator& op, const VectorizedState& ss);

} // namespace entsim

#endif
