#include "entsim/liouville.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

#include "entsim/errors.hpp"

namespace entsim {

namespace {

constexpr Complex kI{0.0, 1.0};

// Indices of the X-form components inside the row-major 16-vector:
// diagonal |a><a| at 5a, |01><10| at 6, |10><01| at 9.
constexpr int kXIndices[6] = {0, 5, 10, 15, 6, 9};

void require_match(const LiouvilleOperator& op, const VectorizedState& v) {
  if (op.basis_tag != v.basis_tag || op.dim() != v.dim()) {
    std::ostringstream os;
    os << "operator dim " << op.dim() << " does not match state dim " << v.dim();
    throw DimensionMismatch(os.str());
  }
}

} // namespace

RowVector trace_row(BasisTag tag) {
  RowVector t = RowVector::Zero(dim_of(tag));
  if (tag == BasisTag::reduced_x_basis) {
    t.head(4).setOnes();
  } else {
    for (int a = 0; a < 4; ++a) t(5 * a) = 1.0;
  }
  return t;
}

VectorizedState vectorize(const XState& s, BasisTag tag) {
  s.check();
  VectorizedState v;
  v.basis_tag = tag;
  v.entries = Vector::Zero(dim_of(tag));
  const Complex off = kI * s.c;  // |01><10| element
  if (tag == BasisTag::reduced_x_basis) {
    v.entries(0) = s.r1;
    v.entries(1) = s.r2;
    v.entries(2) = s.r3;
    v.entries(3) = s.r4;
    v.entries(4) = off;
    v.entries(5) = std::conj(off);  // |10><01| element, -i conj(c)
  } else {
    v.entries(kXIndices[0]) = s.r1;
    v.entries(kXIndices[1]) = s.r2;
    v.entries(kXIndices[2]) = s.r3;
    v.entries(kXIndices[3]) = s.r4;
    v.entries(kXIndices[4]) = off;
    v.entries(kXIndices[5]) = std::conj(off);
  }
  return v;
}

XState devectorize(const VectorizedState& v) {
  if (v.basis_tag != BasisTag::reduced_x_basis) {
    throw DimensionMismatch("devectorize expects the reduced X basis");
  }
  XState s;
  s.r1 = v.entries(0).real();
  s.r2 = v.entries(1).real();
  s.r3 = v.entries(2).real();
  s.r4 = v.entries(3).real();
  s.c = -kI * v.entries(4);  // stored element is i c
  const double pops[4] = {s.r1, s.r2, s.r3, s.r4};
  for (int i = 0; i < 4; ++i) {
    if (pops[i] < -1e-9) {
      std::ostringstream os;
      os << "devectorize: population r" << i + 1 << " = " << pops[i] << " is negative";
      throw NonPhysicalState(os.str());
    }
  }
  if (std::abs(s.trace() - 1.0) > 1e-8) {
    std::ostringstream os;
    os << "devectorize: trace = " << s.trace() << " deviates from 1";
    throw NonPhysicalState(os.str());
  }
  return s;
}

VectorizedState restrict_to_x(const VectorizedState& full) {
  if (full.basis_tag != BasisTag::full_canonical) {
    throw DimensionMismatch("restrict_to_x expects a full-basis state");
  }
  VectorizedState v;
  v.basis_tag = BasisTag::reduced_x_basis;
  v.entries = Vector::Zero(6);
  for (int i = 0; i < 6; ++i) v.entries(i) = full.entries(kXIndices[i]);
  return v;
}

Matrix generator_exp(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> es(m);
  if (es.info() == Eigen::Success) {
    const Matrix& vecs = es.eigenvectors();
    Eigen::JacobiSVD<Matrix> svd(vecs);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin > 0.0 && sv(0) / smin < 1e8) {
      Matrix scaled = vecs * es.eigenvalues().array().exp().matrix().asDiagonal();
      return scaled * vecs.inverse();
    }
  }
  // Near-defective generator (eta ~ 0): scaling-and-squaring.
  return m.exp();
}

VectorizedState propagate(const LiouvilleOperator& op, const VectorizedState& v0, double t) {
  require_match(op, v0);
  if (!(t >= 0.0)) throw std::invalid_argument("propagate: t must be >= 0");
  VectorizedState out;
  out.basis_tag = v0.basis_tag;
  if (t == 0.0) {
    out.entries = v0.entries;
    return out;
  }
  out.entries = generator_exp((op.entries * t).eval()) * v0.entries;
  return out;
}

VectorizedState steady_state(const LiouvilleOperator& op) {
  const int n = op.dim();
  Eigen::JacobiSVD<Matrix> svd(op.entries, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(n - 2) <= 1e-10 * sv(0)) {
    throw DegenerateSteadyState("steady_state: kernel of the generator is not one-dimensional");
  }
  Vector null = svd.matrixV().col(n - 1);
  const Complex tr = trace_row(op.basis_tag) * null;
  if (std::abs(tr) < 1e-14) {
    throw DegenerateSteadyState("steady_state: null vector is traceless");
  }
  VectorizedState ss;
  ss.basis_tag = op.basis_tag;
  ss.entries = null / tr;
  return ss;
}

LiouvilleOperator traceless_pseudoinverse(const LiouvilleOperator& op, const VectorizedState& ss) {
  require_match(op, ss);
  const int n = op.dim();
  const Matrix q = ss.entries * trace_row(op.basis_tag);  // |ss>(trace row)
  const Matrix proj = Matrix::Identity(n, n) - q;
  Eigen::PartialPivLU<Matrix> lu(op.entries - q);
  LiouvilleOperator r;
  r.basis_tag = op.basis_tag;
  r.entries = proj * lu.solve(proj);
  return r;
}

} // namespace entsim
