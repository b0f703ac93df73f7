#pragma once

#include "conlat/galois.hpp"

namespace conlat {

/// Commuting square of Galois connections: g1 * b = a * g2 with vertical
/// connections g1 : A1 <-> B1, g2 : A2 <-> B2 and horizontal connections
/// a : A1 <-> A2, b : B1 <-> B2.
struct Quartet {
  GaloisConnection g1;
  GaloisConnection g2;
  GaloisConnection a;
  GaloisConnection b;
};

// Validates boundaries and the commuting condition (pointwise, up to
// equivalence); throws SquareNotCommuting with a witness otherwise.
Quartet check_quartet(const GaloisConnection& g1, const GaloisConnection& g2,
                      const GaloisConnection& a, const GaloisConnection& b);

// For g1 a reflection between posets: the connection c between the kernels of
// the left adjoints splitting the quartet horizontally through
// clo(g1) => clo(g2) and lift(g1) => lift(g2).
GaloisConnection factor_reflection_quartet(const Quartet& q);

// For g2 a coreflection between posets: the connection d between the kernels
// of the right adjoints splitting the quartet through lift(g1) => lift(g2)
// and int(g1) => int(g2).
GaloisConnection factor_coreflection_quartet(const Quartet& q);

}  // namespace conlat
