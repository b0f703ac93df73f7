#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conlat/bits.hpp"
#include "conlat/error.hpp"

namespace conlat {

using Idx = int;
using IdxVec = std::vector<Idx>;  // subsets as sorted index lists, maps as tables

// Exhaustive-subset operations refuse carriers above this size.
inline constexpr int kSubsetCap = 20;

enum class Extremum { Meet, Join };
enum class MapKind { Monotone, Isotone };

/// A finite preorder: labelled carrier plus a reflexive-transitive relation
/// stored as a dense boolean matrix. Immutable after construction.
class Preorder {
public:
  Preorder() = default;

  // `close` takes the reflexive-transitive closure of `pairs`; without it the
  // relation is validated as given.
  static Preorder make(std::vector<std::string> labels,
                       const std::vector<std::pair<Idx, Idx>>& pairs,
                       bool close);
  static Preorder make_labelled(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& pairs,
                                bool close);

  static Preorder discrete(std::vector<std::string> labels);
  static Preorder chain(int n);  // labels "0", "1", ... with 0 <= 1 <= ...

  // Powerset of `base` ordered by inclusion; element index == subset bitmask,
  // labels in "{a,b}" notation. Carrier capped at 2^kSubsetCap.
  static Preorder powerset(const std::vector<std::string>& base);

  Preorder opposite() const;

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Idx i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  Idx index_of(const std::string& label) const;  // UnknownLabel if absent

  bool leq(Idx a, Idx b) const { return rows_[a].get(b); }
  bool equiv(Idx a, Idx b) const { return leq(a, b) && leq(b, a); }

  // Least index in the equivalence class of `a`.
  Idx canonical(Idx a) const;

  bool is_poset() const;
  bool same_as(const Preorder& o) const {
    return labels_ == o.labels_ && rows_ == o.rows_;
  }

  std::vector<std::pair<Idx, Idx>> relation_pairs() const;

  // Greatest lower / least upper bound of `subset`, canonical representative.
  // Throws NoBound when none exists.
  Idx extremum(const IdxVec& subset, Extremum kind) const;
  bool has_extremum(const IdxVec& subset, Extremum kind) const;

private:
  std::vector<std::string> labels_;
  std::vector<Bits> rows_;  // rows_[a].get(b) == (a <= b)

  void check_labels() const;
};

/// Total order-preserving function between preorders. Order preservation is
/// checked at construction.
struct MonotoneMap {
  Preorder source;
  Preorder target;
  IdxVec map;

  MonotoneMap(Preorder src, Preorder tgt, IdxVec m);

  Idx operator()(Idx a) const { return map[a]; }
};

MapKind classify_map(const MonotoneMap& f);

// Order pulled back along f: a1 <= a2 iff f(a1) <= f(a2) in the target.
Preorder kernel_preorder(const MonotoneMap& f);

/// Plain function between finite labelled sets.
struct SetFunction {
  std::vector<std::string> source;
  std::vector<std::string> target;
  IdxVec map;

  SetFunction(std::vector<std::string> src, std::vector<std::string> tgt, IdxVec m);

  Idx operator()(Idx a) const { return map[a]; }
};

IdxVec direct_image(const SetFunction& h, const IdxVec& X);
IdxVec inverse_image(const SetFunction& h, const IdxVec& Y);

// Canonical sorted-unique form of an index set.
IdxVec normalize_set(IdxVec v);

std::string subset_label(const std::vector<std::string>& base, std::uint32_t mask);

}  // namespace conlat
