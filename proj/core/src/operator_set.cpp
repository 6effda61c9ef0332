#include "duet/operator_set.hpp"

namespace duet {

namespace {

// |a><b| in the 4-dimensional product space, zero-based indices.
Matrix4 ketbra(int a, int b) {
  Matrix4 m = Matrix4::Zero();
  m(a, b) = 1.0;
  return m;
}

}  // namespace

OperatorSet OperatorSet::bare() {
  OperatorSet ops;
  ops.id = Matrix4::Identity();

  // Basis order {|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>}: atom 1 flips move
  // between the upper and lower pairs, atom 2 flips move within each pair.
  ops.s1p = ketbra(0, 2) + ketbra(1, 3);
  ops.s1m = ops.s1p.adjoint();
  ops.s2p = ketbra(0, 1) + ketbra(2, 3);
  ops.s2m = ops.s2p.adjoint();
  ops.s1z = 0.5 * (ketbra(0, 0) + ketbra(1, 1) - ketbra(2, 2) - ketbra(3, 3));
  ops.s2z = 0.5 * (ketbra(0, 0) - ketbra(1, 1) + ketbra(2, 2) - ketbra(3, 3));

  ops.rp = Matrix4::Zero();
  ops.rm = Matrix4::Zero();
  ops.rz = Matrix4::Zero();
  return ops;
}

OperatorSet OperatorSet::dressed() {
  OperatorSet ops;
  ops.id = Matrix4::Identity();

  // Basis order {|e1 +>, |e1 ->, |g1 +>, |g1 ->}; atom-1 operators act
  // exactly as in the bare set, the dressed pair plays the role of a
  // two-level system with R+ = |+><-|.
  ops.s1p = ketbra(0, 2) + ketbra(1, 3);
  ops.s1m = ops.s1p.adjoint();
  ops.s1z = 0.5 * (ketbra(0, 0) + ketbra(1, 1) - ketbra(2, 2) - ketbra(3, 3));

  ops.rp = ketbra(0, 1) + ketbra(2, 3);
  ops.rm = ops.rp.adjoint();
  ops.rz = 0.5 * (ketbra(0, 0) - ketbra(1, 1) + ketbra(2, 2) - ketbra(3, 3));

  ops.s2p = Matrix4::Zero();
  ops.s2m = Matrix4::Zero();
  ops.s2z = Matrix4::Zero();
  return ops;
}

}  // namespace duet
