#include "conlat/concept_lattice.hpp"

#include <algorithm>
#include <map>

namespace conlat {

namespace {

Bits to_bits(int n, const IdxVec& v) { return Bits::of(n, v); }

// Exhaustive completeness is cubic; skip it for lattices past this size.
constexpr int kLatticeCheckCap = 512;

}  // namespace

IdxVec ConceptLattice::rel_extent(Idx c) const {
  IdxVec out;
  for (Idx x = 0; x < context.instance_count(); ++x)
    if (order.leq(iota_elem[x], c)) out.push_back(x);
  return out;
}

IdxVec ConceptLattice::rel_intent(Idx c) const {
  IdxVec out;
  for (Idx y = 0; y < context.type_count(); ++y)
    if (order.leq(c, tau_elem[y])) out.push_back(y);
  return out;
}

std::vector<FormalConcept> concepts(const Classification& a) {
  const int ni = a.instance_count();
  const int nt = a.type_count();
  if (std::min(ni, nt) > kSubsetCap)
    fail(Err::CapacityExceeded,
         "smaller side exceeds " + std::to_string(kSubsetCap) + " elements",
         {{"instances", ni}, {"types", nt}});

  // Close every subset of the smaller side, deduplicate by the closed subset.
  const bool by_instances = ni <= nt;
  const int n = by_instances ? ni : nt;
  const Side side = by_instances ? Side::Instances : Side::Types;
  std::map<IdxVec, IdxVec> closed;  // closed subset -> its derivation
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    IdxVec s;
    for (int i = 0; i < n; ++i)
      if (m & (std::uint32_t{1} << i)) s.push_back(i);
    IdxVec der = derive(a, side, s);
    IdxVec clo = derive(a, by_instances ? Side::Types : Side::Instances, der);
    closed.emplace(std::move(clo), std::move(der));
  }

  std::vector<FormalConcept> out;
  out.reserve(closed.size());
  for (auto& [c, d] : closed)
    out.push_back(by_instances ? FormalConcept{c, d} : FormalConcept{d, c});
  std::sort(out.begin(), out.end(), [&](const FormalConcept& l, const FormalConcept& r) {
    return to_bits(ni, l.extent).value_less(to_bits(ni, r.extent));
  });
  return out;
}

ConceptLattice clg(const Classification& a) {
  ConceptLattice l;
  l.context = a;
  l.concepts = concepts(a);
  const int k = l.size();
  const int ni = a.instance_count();

  std::vector<Bits> extents;
  extents.reserve(k);
  for (const auto& c : l.concepts) extents.push_back(to_bits(ni, c.extent));

  std::vector<std::string> labels(k);
  std::vector<std::pair<Idx, Idx>> pairs;
  for (int i = 0; i < k; ++i) {
    labels[i] = "[";
    for (std::size_t j = 0; j < l.concepts[i].extent.size(); ++j) {
      if (j) labels[i] += ",";
      labels[i] += a.instances()[l.concepts[i].extent[j]];
    }
    labels[i] += "]";
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (extents[i].subset_of(extents[j])) {
        pairs.emplace_back(i, j);
        // extent inclusion and reverse intent inclusion must agree
        if (!to_bits(a.type_count(), l.concepts[j].intent)
                 .subset_of(to_bits(a.type_count(), l.concepts[i].intent)))
          fail(Err::LawViolated, "concept order disagrees between extent and intent",
               {{"i", i}, {"j", j}});
      }
  l.order = Preorder::make(labels, pairs, false);

  l.iota_elem.resize(ni);
  for (Idx x = 0; x < ni; ++x) {
    IdxVec der = derive(a, Side::Instances, {x});
    IdxVec clo = derive(a, Side::Types, der);
    FormalConcept target{clo, der};
    auto it = std::find(l.concepts.begin(), l.concepts.end(), target);
    if (it == l.concepts.end())
      fail(Err::LawViolated, "instance closure is not a concept", {{"x", x}});
    l.iota_elem[x] = static_cast<Idx>(it - l.concepts.begin());
  }
  l.tau_elem.resize(a.type_count());
  for (Idx y = 0; y < a.type_count(); ++y) {
    IdxVec der = derive(a, Side::Types, {y});
    IdxVec clo = derive(a, Side::Instances, der);
    FormalConcept target{der, clo};
    auto it = std::find(l.concepts.begin(), l.concepts.end(), target);
    if (it == l.concepts.end())
      fail(Err::LawViolated, "type closure is not a concept", {{"y", y}});
    l.tau_elem[y] = static_cast<Idx>(it - l.concepts.begin());
  }

  if (!l.order.is_poset()) fail(Err::LawViolated, "concept order is not a poset");
  if (k <= kLatticeCheckCap) {
    IdxVec all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    if (!l.order.has_extremum({}, Extremum::Meet) ||
        !l.order.has_extremum({}, Extremum::Join) ||
        !l.order.has_extremum(all, Extremum::Meet) ||
        !l.order.has_extremum(all, Extremum::Join))
      fail(Err::LawViolated, "concept order lacks top or bottom");
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (!l.order.has_extremum({i, j}, Extremum::Meet) ||
            !l.order.has_extremum({i, j}, Extremum::Join))
          fail(Err::LawViolated, "concept order not a lattice", {{"i", i}, {"j", j}});
  }

  // density of the embeddings
  DensityReport dr = density_check(l);
  if (!dr.ok()) fail(Err::LawViolated, "embedding images are not dense");
  return l;
}

FormalConcept lattice_extremum(const ConceptLattice& l, const IdxVec& cs,
                               Extremum kind) {
  const Classification& a = l.context;
  Bits ext = kind == Extremum::Meet ? Bits::full(a.instance_count())
                                    : Bits(a.instance_count());
  Bits intent = kind == Extremum::Meet ? Bits(a.type_count())
                                       : Bits::full(a.type_count());
  for (Idx c : cs) {
    Bits ce = to_bits(a.instance_count(), l.concepts[c].extent);
    Bits ci = to_bits(a.type_count(), l.concepts[c].intent);
    if (kind == Extremum::Meet) {
      ext.and_with(ce);
      intent.or_with(ci);
    } else {
      ext.or_with(ce);
      intent.and_with(ci);
    }
  }
  FormalConcept r;
  if (kind == Extremum::Meet) {
    r.extent = ext.members();
    r.intent = derive_closure(a, Side::Types, intent.members());
  } else {
    r.extent = derive_closure(a, Side::Instances, ext.members());
    r.intent = intent.members();
  }
  // must agree with the extremum taken in the concept order
  const Idx via_order = l.order.extremum(cs, kind);
  if (!(l.concepts[via_order] == r))
    fail(Err::LawViolated, "formula extremum differs from order extremum");
  return r;
}

FormalConcept subset_generators(const ConceptLattice& l, Side side, const IdxVec& s) {
  const Classification& a = l.context;
  FormalConcept r;
  IdxVec embedded;
  if (side == Side::Instances) {
    r.extent = derive_closure(a, Side::Instances, s);
    r.intent = derive(a, Side::Instances, s);
    for (Idx x : s) embedded.push_back(l.iota_elem[x]);
    const Idx join = l.order.extremum(embedded, Extremum::Join);
    if (!(l.concepts[join] == r))
      fail(Err::LawViolated, "iota formula differs from join of instance concepts");
  } else {
    r.extent = derive(a, Side::Types, s);
    r.intent = derive_closure(a, Side::Types, s);
    for (Idx y : s) embedded.push_back(l.tau_elem[y]);
    const Idx meet = l.order.extremum(embedded, Extremum::Meet);
    if (!(l.concepts[meet] == r))
      fail(Err::LawViolated, "tau formula differs from meet of type concepts");
  }
  return r;
}

std::pair<GaloisConnection, GaloisConnection> extent_intent_adjunctions(
    const ConceptLattice& l) {
  const Classification& a = clsn(l);
  if (a.instance_count() > kSubsetCap || a.type_count() > kSubsetCap)
    fail(Err::CapacityExceeded, "context too large for powerset carriers");
  Preorder pinst = Preorder::powerset(a.instances());
  Preorder ptyp_op = Preorder::powerset(a.types()).opposite();

  IdxVec iota_left(pinst.size()), ext_right(l.size());
  for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(pinst.size()); ++m) {
    IdxVec member;
    for (Idx x = 0; x < a.instance_count(); ++x)
      if (m & (std::uint32_t{1} << x)) member.push_back(l.iota_elem[x]);
    iota_left[m] = l.order.extremum(member, Extremum::Join);
  }
  for (Idx c = 0; c < l.size(); ++c) {
    std::uint32_t ext = 0;
    for (Idx x : l.rel_extent(c)) ext |= std::uint32_t{1} << x;
    ext_right[c] = static_cast<Idx>(ext);
  }
  GaloisConnection extent(std::move(pinst), l.order, std::move(iota_left),
                          std::move(ext_right));

  IdxVec int_left(l.size()), tau_right(ptyp_op.size());
  for (Idx c = 0; c < l.size(); ++c) {
    std::uint32_t intent = 0;
    for (Idx y : l.rel_intent(c)) intent |= std::uint32_t{1} << y;
    int_left[c] = static_cast<Idx>(intent);
  }
  for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(ptyp_op.size()); ++m) {
    IdxVec member;
    for (Idx y = 0; y < a.type_count(); ++y)
      if (m & (std::uint32_t{1} << y)) member.push_back(l.tau_elem[y]);
    tau_right[m] = l.order.extremum(member, Extremum::Meet);
  }
  GaloisConnection intent(l.order, std::move(ptyp_op), std::move(int_left),
                          std::move(tau_right));

  if (!classify_connection(extent).reflection)
    fail(Err::LawViolated, "extent adjunction is not a reflection");
  if (!classify_connection(intent).coreflection)
    fail(Err::LawViolated, "intent adjunction is not a coreflection");
  if (!compose_galois(extent, intent).same_up_to_equiv(deriv_connection(a)))
    fail(Err::LawViolated, "extent * intent differs from the derivation connection");
  return {std::move(extent), std::move(intent)};
}

Classification clsn(const ConceptLattice& l) {
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx x = 0; x < static_cast<Idx>(l.iota_elem.size()); ++x)
    for (Idx y = 0; y < static_cast<Idx>(l.tau_elem.size()); ++y)
      if (l.order.leq(l.iota_elem[x], l.tau_elem[y])) pairs.emplace_back(x, y);
  return Classification(l.context.instances(), l.context.types(), pairs);
}

GaloisConnection ConceptMorphism::adjoint() const {
  return GaloisConnection(target.order, source.order, left, right);
}

ConceptMorphism check_concept_morphism(ConceptMorphism h) {
  const ConceptLattice& l1 = h.source;
  const ConceptLattice& l2 = h.target;
  GaloisConnection adj = [&] {
    try {
      return h.adjoint();
    } catch (const Error& e) {
      fail(Err::NotAdjoint, std::string("left/right pair: ") + e.what(), e.witness());
    }
  }();

  for (Idx x2 = 0; x2 < l2.context.instance_count(); ++x2)
    if (h.left[l2.iota_elem[x2]] != l1.iota_elem[h.inst_map[x2]])
      fail(Err::InstanceNotPreserved, "left does not preserve instance concepts",
           {{"x2", l2.context.instances()[x2]}});
  for (Idx y1 = 0; y1 < l1.context.type_count(); ++y1)
    if (h.right[l1.tau_elem[y1]] != l2.tau_elem[h.typ_map[y1]])
      fail(Err::TypeNotPreserved, "right does not preserve type concepts",
           {{"y1", l1.context.types()[y1]}});

  // join-continuity of left and meet-continuity of right; exhaustive on small
  // lattices, spot-checked on pairs otherwise
  auto continuity = [&](const ConceptLattice& from, const ConceptLattice& to,
                        const IdxVec& map, Extremum kind, const char* what) {
    auto check_subset = [&](const IdxVec& cs) {
      IdxVec image;
      for (Idx c : cs) image.push_back(map[c]);
      if (map[from.order.extremum(cs, kind)] != to.order.extremum(image, kind))
        fail(Err::LawViolated, std::string(what) + " not continuous");
    };
    if (from.size() <= 16) {
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << from.size()); ++m) {
        IdxVec cs;
        for (int i = 0; i < from.size(); ++i)
          if (m & (std::uint32_t{1} << i)) cs.push_back(i);
        check_subset(cs);
      }
    } else {
      check_subset({});
      for (Idx i = 0; i < from.size(); ++i)
        for (Idx j = i; j < from.size(); ++j) check_subset({i, j});
    }
  };
  continuity(l2, l1, h.left, Extremum::Join, "left adjoint");
  continuity(l1, l2, h.right, Extremum::Meet, "right adjoint");
  return h;
}

ConceptMorphism clg_morphism(const Infomorphism& f) {
  const Classification& a1 = f.source();
  const Classification& a2 = f.target();
  ConceptMorphism h;
  h.source = clg(a1);
  h.target = clg(a2);
  h.inst_map = f.inst_table();
  h.typ_map = f.typ_table();

  auto concept_index = [](const ConceptLattice& l, const IdxVec& extent) {
    for (Idx i = 0; i < l.size(); ++i)
      if (l.concepts[i].extent == extent) return i;
    fail(Err::LawViolated, "image extent is not a concept extent");
  };

  h.right.resize(h.source.size());
  for (Idx c = 0; c < h.source.size(); ++c) {
    const auto& [x1, y1] = std::pair(h.source.concepts[c].extent,
                                     h.source.concepts[c].intent);
    IdxVec pre;  // inverse image of the extent under the instance function
    for (Idx x2 = 0; x2 < a2.instance_count(); ++x2)
      if (std::binary_search(x1.begin(), x1.end(), f.inst(x2))) pre.push_back(x2);
    IdxVec via_typ;  // derivation of the type-function image of the intent
    for (Idx y : y1) via_typ.push_back(f.typ(y));
    if (pre != derive(a2, Side::Types, normalize_set(via_typ)))
      fail(Err::LawViolated, "inverse instance image differs from type image derivation",
           {{"concept", c}});
    h.right[c] = concept_index(h.target, pre);
  }

  h.left.resize(h.target.size());
  for (Idx c = 0; c < h.target.size(); ++c) {
    const auto& [x2, y2] = std::pair(h.target.concepts[c].extent,
                                     h.target.concepts[c].intent);
    IdxVec pre;  // inverse image of the intent under the type function
    for (Idx y1 = 0; y1 < a1.type_count(); ++y1)
      if (std::binary_search(y2.begin(), y2.end(), f.typ(y1))) pre.push_back(y1);
    IdxVec via_inst;
    for (Idx x : x2) via_inst.push_back(f.inst(x));
    if (pre != derive(a1, Side::Instances, normalize_set(via_inst)))
      fail(Err::LawViolated, "inverse type image differs from instance image derivation",
           {{"concept", c}});
    h.left[c] = concept_index(h.source, derive(a1, Side::Types, pre));
  }
  return check_concept_morphism(std::move(h));
}

RoundTrip roundtrip_iso(const ConceptLattice& l) {
  RoundTrip rt;
  rt.rebuilt = clg(clsn(l));
  rt.forward.resize(rt.rebuilt.size());
  rt.backward.resize(l.size());

  for (Idx i = 0; i < rt.rebuilt.size(); ++i) {
    IdxVec joined;
    for (Idx x : rt.rebuilt.concepts[i].extent) joined.push_back(l.iota_elem[x]);
    const Idx via_join = l.order.extremum(joined, Extremum::Join);
    IdxVec met;
    for (Idx y : rt.rebuilt.concepts[i].intent) met.push_back(l.tau_elem[y]);
    if (!l.order.equiv(via_join, l.order.extremum(met, Extremum::Meet)))
      fail(Err::LawViolated, "join over iota differs from meet over tau",
           {{"concept", i}});
    rt.forward[i] = via_join;
  }
  for (Idx c = 0; c < l.size(); ++c) {
    IdxVec ext = l.rel_extent(c);
    IdxVec intent = l.rel_intent(c);
    Idx found = -1;
    for (Idx i = 0; i < rt.rebuilt.size(); ++i)
      if (rt.rebuilt.concepts[i].extent == ext && rt.rebuilt.concepts[i].intent == intent) {
        found = i;
        break;
      }
    if (found < 0)
      fail(Err::LawViolated, "element extent/intent is not a rebuilt concept",
           {{"element", l.order.label(c)}});
    rt.backward[c] = found;
  }

  // mutually inverse order-isomorphisms
  for (Idx i = 0; i < rt.rebuilt.size(); ++i)
    if (rt.backward[rt.forward[i]] != i)
      fail(Err::LawViolated, "backward(forward) is not the identity", {{"concept", i}});
  for (Idx c = 0; c < l.size(); ++c)
    if (!l.order.equiv(rt.forward[rt.backward[c]], c))
      fail(Err::LawViolated, "forward(backward) is not the identity",
           {{"element", l.order.label(c)}});
  for (Idx i = 0; i < rt.rebuilt.size(); ++i)
    for (Idx j = 0; j < rt.rebuilt.size(); ++j)
      if (rt.rebuilt.order.leq(i, j) != l.order.leq(rt.forward[i], rt.forward[j]))
        fail(Err::LawViolated, "forward map does not preserve and reflect order",
             {{"i", i}, {"j", j}});
  return rt;
}

DensityReport density_check(const ConceptLattice& l) {
  DensityReport rep;
  for (Idx c = 0; c < l.size(); ++c) {
    IdxVec gens;
    for (Idx x : l.concepts[c].extent) gens.push_back(l.iota_elem[x]);
    if (!l.order.has_extremum(gens, Extremum::Join) ||
        !l.order.equiv(l.order.extremum(gens, Extremum::Join), c))
      rep.join_violations.push_back(c);
    IdxVec cogens;
    for (Idx y : l.concepts[c].intent) cogens.push_back(l.tau_elem[y]);
    if (!l.order.has_extremum(cogens, Extremum::Meet) ||
        !l.order.equiv(l.order.extremum(cogens, Extremum::Meet), c))
      rep.meet_violations.push_back(c);
  }
  return rep;
}

TheoryLattice theories(const ConceptLattice& l) {
  const int nt = l.context.type_count();
  if (nt > 12)
    fail(Err::CapacityExceeded, "more than 12 types", {{"types", nt}});
  const std::uint32_t count = std::uint32_t{1} << nt;
  const std::vector<std::string>& types = l.context.types();

  IdxVec tau_of(count);  // meet of the embedded types per subset
  std::vector<std::uint32_t> int_of(l.size());
  for (Idx c = 0; c < l.size(); ++c) {
    std::uint32_t m = 0;
    for (Idx y : l.rel_intent(c)) m |= std::uint32_t{1} << y;
    int_of[c] = m;
  }
  for (std::uint32_t m = 0; m < count; ++m) {
    IdxVec member;
    for (int y = 0; y < nt; ++y)
      if (m & (std::uint32_t{1} << y)) member.push_back(l.tau_elem[y]);
    tau_of[m] = l.order.extremum(member, Extremum::Meet);
  }
  std::vector<std::uint32_t> closure(count);
  for (std::uint32_t m = 0; m < count; ++m) closure[m] = int_of[tau_of[m]];

  std::vector<std::string> labels(count);
  std::vector<std::pair<Idx, Idx>> pairs;
  for (std::uint32_t m = 0; m < count; ++m) labels[m] = subset_label(types, m);
  for (std::uint32_t m1 = 0; m1 < count; ++m1)
    for (std::uint32_t m2 = 0; m2 < count; ++m2)
      if ((closure[m1] & closure[m2]) == closure[m2])
        pairs.emplace_back(static_cast<Idx>(m1), static_cast<Idx>(m2));
  Preorder entailment = Preorder::make(labels, pairs, false);

  // entailment is the kernel of tau on the opposite powerset
  Preorder ptyp_op = Preorder::powerset(types).opposite();
  Preorder ker = kernel_preorder(MonotoneMap(ptyp_op, l.order, tau_of));
  if (!ker.same_as(entailment))
    fail(Err::LawViolated, "entailment differs from the kernel of tau");

  IdxVec int_left(l.size());
  for (Idx c = 0; c < l.size(); ++c) int_left[c] = static_cast<Idx>(int_of[c]);
  IdxVec idm(count);
  for (std::uint32_t m = 0; m < count; ++m) idm[m] = static_cast<Idx>(m);
  IdxVec clo_left(count);
  for (std::uint32_t m = 0; m < count; ++m) clo_left[m] = static_cast<Idx>(closure[m]);

  GaloisConnection lift(l.order, entailment, int_left, tau_of);
  GaloisConnection clsr(entailment, ptyp_op, clo_left, idm);

  // lift * clsr is the intent coreflection
  GaloisConnection intent(l.order, ptyp_op, int_left, tau_of);
  if (!compose_galois(lift, clsr).same_up_to_equiv(intent))
    fail(Err::LawViolated, "lift * clsr differs from the intent coreflection");
  return TheoryLattice{types, std::move(entailment), std::move(closure),
                       std::move(lift), std::move(clsr)};
}

ConceptLattice transpose(const ConceptLattice& l) {
  ConceptLattice t;
  t.context = conlat::transpose(l.context);
  t.concepts.reserve(l.size());
  for (const auto& c : l.concepts) t.concepts.push_back({c.intent, c.extent});
  t.order = l.order.opposite();
  t.iota_elem = l.tau_elem;
  t.tau_elem = l.iota_elem;
  return t;
}

}  // namespace conlat
