#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conlat/galois.hpp"
#include "conlat/order.hpp"

namespace conlat {

enum class Side { Instances, Types };

/// A classification (formal context): instances, types and an incidence
/// relation between them. Incidence rows are bitsets over the types.
class Classification {
public:
  Classification() = default;
  Classification(std::vector<std::string> instances, std::vector<std::string> types,
                 const std::vector<std::pair<Idx, Idx>>& incidence);
  static Classification from_labelled(
      std::vector<std::string> instances, std::vector<std::string> types,
      const std::vector<std::pair<std::string, std::string>>& incidence);

  int instance_count() const { return static_cast<int>(instances_.size()); }
  int type_count() const { return static_cast<int>(types_.size()); }
  const std::vector<std::string>& instances() const { return instances_; }
  const std::vector<std::string>& types() const { return types_; }
  bool incident(Idx x, Idx y) const { return rows_[x].get(y); }
  const Bits& intent_row(Idx x) const { return rows_[x]; }
  const Bits& extent_col(Idx y) const { return cols_[y]; }
  std::vector<std::pair<Idx, Idx>> incidence_pairs() const;

  bool operator==(const Classification& o) const {
    return instances_ == o.instances_ && types_ == o.types_ && rows_ == o.rows_;
  }

private:
  std::vector<std::string> instances_, types_;
  std::vector<Bits> rows_;  // per instance, over types
  std::vector<Bits> cols_;  // per type, over instances
};

// K1, the running example: instances {1,2}, types {a,b},
// incidence {(1,a),(2,a),(2,b)}.
Classification k1_context();

// Common-incidence set on the other side; S and the result are canonical
// sorted index lists.
IdxVec derive(const Classification& a, Side side, const IdxVec& s);

// derive twice: the closure of s on its own side.
IdxVec derive_closure(const Classification& a, Side side, const IdxVec& s);

struct ContextClass {
  bool extensional = false;  // no distinct coextensive types
  bool separated = false;    // no distinct indistinguishable instances
};
ContextClass classify_context(const Classification& a);

// Instance power <X, powerset(X), membership> or its transpose.
Classification power(const std::vector<std::string>& base, Side side);

Classification transpose(const Classification& a);

Classification preorder_as_classification(const Preorder& p);

// The derivation Galois connection powerset(inst) <-> powerset(typ) opposite.
GaloisConnection deriv_connection(const Classification& a);

/// Contravariant map pair between classifications subject to the fundamental
/// condition: inst_map(x2) |=1 y1 iff x2 |=2 typ_map(y1).
class Infomorphism {
public:
  Infomorphism(Classification source, Classification target, IdxVec inst_map,
               IdxVec typ_map);

  static Infomorphism identity(const Classification& a);

  const Classification& source() const { return src_; }
  const Classification& target() const { return tgt_; }
  // instance function, backward: instances of the target to the source
  Idx inst(Idx x2) const { return inst_map_[x2]; }
  // type function, forward
  Idx typ(Idx y1) const { return typ_map_[y1]; }
  const IdxVec& inst_table() const { return inst_map_; }
  const IdxVec& typ_table() const { return typ_map_; }

private:
  Classification src_, tgt_;
  IdxVec inst_map_, typ_map_;
};

Infomorphism compose_infomorphisms(const Infomorphism& f, const Infomorphism& g);

// eta : A <-> instance-power(inst A) = <id, ext>;
// epsilon : type-power(typ A) <-> A = <int, id>.
std::pair<Infomorphism, Infomorphism> unit_counit(const Classification& a);

// Any Galois connection g : A <-> B is an infomorphism between the induced
// classifications, incl(B) <-> incl(A), with inst = left(g), typ = right(g).
Infomorphism infomorphism_from_galois(const GaloisConnection& g);

// The three equivalent validity predicates, usable on unvalidated candidates.
bool fundamental_condition_holds(const Classification& a1, const Classification& a2,
                                 const IdxVec& inst_map, const IdxVec& typ_map);
bool ext_naturality_holds(const Classification& a1, const Classification& a2,
                          const IdxVec& inst_map, const IdxVec& typ_map);
bool int_naturality_holds(const Classification& a1, const Classification& a2,
                          const IdxVec& inst_map, const IdxVec& typ_map);

}  // namespace conlat
