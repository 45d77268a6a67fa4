#ifndef ENTSIM_XSTATE_HPP
#define ENTSIM_XSTATE_HPP

#include <complex>

namespace entsim {

/// Two-qubit density matrix of the invariant X form: diagonal
/// populations r1..r4 in the basis {|00>,|01>,|10>,|11>} and a single
/// inner coherence. The |01><10| matrix element equals i*c; we store c
/// itself.
struct XState {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double r4 = 0.0;
  std::complex<double> c{0.0, 0.0};

  double trace() const { return r1 + r2 + r3 + r4; }

  /// Throws NonPhysicalState unless trace == 1 (tol 1e-10), every
  /// population lies in [-1e-9, 1+1e-9] and r2*r3 >= |c|^2 - 1e-9.
  void check() const;
};

} // namespace entsim

#endif
