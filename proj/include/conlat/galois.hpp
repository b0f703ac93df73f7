#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conlat/order.hpp"

namespace conlat {

/// Adjoint pair of monotone functions between finite preorders. The
/// fundamental adjointness property
///     left(a) <= b  iff  a <= right(b)
/// is checked exhaustively at construction.
class GaloisConnection {
public:
  GaloisConnection(Preorder source, Preorder target, IdxVec left, IdxVec right);

  static GaloisConnection identity(const Preorder& p);

  const Preorder& source() const { return src_; }
  const Preorder& target() const { return tgt_; }
  Idx left(Idx a) const { return left_[a]; }
  Idx right(Idx b) const { return right_[b]; }
  const IdxVec& left_table() const { return left_; }
  const IdxVec& right_table() const { return right_; }

  Idx closure(Idx a) const { return right_[left_[a]]; }   // left then right
  Idx interior(Idx b) const { return left_[right_[b]]; }  // right then left

  bool closed(Idx a) const { return src_.equiv(a, closure(a)); }
  bool open(Idx b) const { return tgt_.equiv(b, interior(b)); }

  // Pointwise equality of both adjoints up to equivalence. Boundary carriers
  // must match structurally.
  bool same_up_to_equiv(const GaloisConnection& o) const;

private:
  Preorder src_, tgt_;
  IdxVec left_, right_;
};

struct ConnectionClass {
  bool reflection = false;    // interior ~ id on the target
  bool coreflection = false;  // closure ~ id on the source
};

struct ClosureInterior {
  IdxVec closure;       // on the source
  IdxVec interior;      // on the target
  IdxVec closed_elems;  // fixed points up to equivalence
  IdxVec open_elems;
};

/// Polar factorization: the axis of bipoles through which the connection
/// factors as reflection followed by coreflection.
struct PolarFactorization {
  std::vector<std::pair<Idx, Idx>> bipoles;  // (closed source, open target)
  Preorder axis;
  GaloisConnection refl;    // source <-> axis
  GaloisConnection corefl;  // axis <-> target
};

/// The five connections of the combined (kernel) factorization:
///   clo : A <-> ker(left)          <id, closure>
///   lift0 : ker(left) <-> B        <left, right>
///   lift1 : A <-> ker(right)       <left, right>
///   intr : ker(right) <-> B        <interior, id>
///   lift : ker(left) <-> ker(right)
struct KernelFactorization {
  Preorder ker_left;
  Preorder ker_right;
  GaloisConnection clo;
  GaloisConnection lift0;
  GaloisConnection lift1;
  GaloisConnection intr;
  GaloisConnection lift;
};

struct InducedLatticeReport {
  bool as_reflection = false;
  bool as_coreflection = false;
  long subsets_checked = 0;
};

GaloisConnection make_galois(Preorder source, Preorder target, IdxVec left,
                             IdxVec right);

// Boundary carriers must agree structurally.
GaloisConnection compose_galois(const GaloisConnection& g1,
                                const GaloisConnection& g2);

ClosureInterior closure_interior(const GaloisConnection& g);

ConnectionClass classify_connection(const GaloisConnection& g);

// Verifies the complete-lattice identities induced on the reflected
// (resp. coreflected) side, enumerating all subsets of that side.
InducedLatticeReport check_induced_lattice(const GaloisConnection& g);

PolarFactorization polar_factorize(const GaloisConnection& g);

KernelFactorization kernel_factorize(const GaloisConnection& g);

// Unique diagonal of a commuting square e*s = r*m with reflection e and
// coreflection m, all between posets.
GaloisConnection diagonal_fill(const GaloisConnection& e, const GaloisConnection& m,
                               const GaloisConnection& r, const GaloisConnection& s);

// Derivation connection of a relation R between X and Y:
// powerset(X) <-> powerset(Y) opposite.
GaloisConnection from_relation(const std::vector<std::string>& xs,
                               const std::vector<std::string>& ys,
                               const std::vector<std::pair<Idx, Idx>>& rel);

// Existential direct image / inverse image pair powerset(X1) <-> powerset(X2).
GaloisConnection from_function(const SetFunction& h);

// The same pair on opposite powerset orders, with inverse image as the left
// adjoint: powerset(X2) op <-> powerset(X1) op.
GaloisConnection from_function_op(const SetFunction& h);

// Structurally identical copy of `p` with elements renamed and re-indexed by
// perm (element i becomes perm[i]), together with the connection witnessing
// the isomorphism.
std::pair<Preorder, GaloisConnection> permuted_copy(const Preorder& p,
                                                    const IdxVec& perm,
                                                    const std::string& label_prefix);

// All Galois connections between two small preorders, by exhaustive search
// over monotone function pairs.
std::vector<GaloisConnection> enumerate_connections(const Preorder& a,
                                                    const Preorder& b);

}  // namespace conlat
