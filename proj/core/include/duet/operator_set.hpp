#pragma once

#include "duet/types.hpp"

namespace duet {

// Single-atom raising/lowering/inversion operators embedded in the two-atom
// Hilbert space, ordered {|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>} for the bare
// set and {|e1 +>, |e1 ->, |g1 +>, |g1 ->} for the dressed set.
//
// In the dressed set the atom-1 operators keep their product-space form and
// the driven atom is described by R+ = |+><-|, R- = |-><+| and
// Rz = (|+><+| - |-><-|) / 2.  Expressed in their own basis these are plain
// integer matrices; the dressing angle only enters the rates and the change
// of basis (see dressed_basis_rotation).
struct OperatorSet {
  Matrix4 s1p, s1m, s1z;  // atom 1: raising, lowering, inversion/2
  Matrix4 s2p, s2m, s2z;  // atom 2 (bare set only; zero in the dressed set)
  Matrix4 rp, rm, rz;     // dressed atom 2 (dressed set only; zero otherwise)
  Matrix4 id;

  static OperatorSet bare();
  static OperatorSet dressed();
};

}  // namespace duet
