#include "conlat/classification.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace conlat {

namespace {

void check_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      fail(Err::DuplicateLabel, std::string("duplicate ") + what + " '" + l + "'",
           {{"label", l}});
}

}  // namespace

Classification::Classification(std::vector<std::string> instances,
                               std::vector<std::string> types,
                               const std::vector<std::pair<Idx, Idx>>& incidence)
    : instances_(std::move(instances)), types_(std::move(types)) {
  check_unique(instances_, "instance");
  check_unique(types_, "type");
  rows_.assign(instances_.size(), Bits(type_count()));
  cols_.assign(types_.size(), Bits(instance_count()));
  for (auto [x, y] : incidence) {
    if (x < 0 || x >= instance_count() || y < 0 || y >= type_count())
      fail(Err::UnknownLabel, "incidence pair out of range", {{"pair", {x, y}}});
    rows_[x].set(y);
    cols_[y].set(x);
  }
}

Classification Classification::from_labelled(
    std::vector<std::string> instances, std::vector<std::string> types,
    const std::vector<std::pair<std::string, std::string>>& incidence) {
  std::unordered_map<std::string, Idx> xi, yi;
  for (Idx i = 0; i < static_cast<Idx>(instances.size()); ++i) xi[instances[i]] = i;
  for (Idx i = 0; i < static_cast<Idx>(types.size()); ++i) yi[types[i]] = i;
  std::vector<std::pair<Idx, Idx>> pairs;
  for (const auto& [x, y] : incidence) {
    auto ix = xi.find(x);
    auto iy = yi.find(y);
    if (ix == xi.end())
      fail(Err::UnknownLabel, "unknown instance '" + x + "'", {{"label", x}});
    if (iy == yi.end())
      fail(Err::UnknownLabel, "unknown type '" + y + "'", {{"label", y}});
    pairs.emplace_back(ix->second, iy->second);
  }
  return Classification(std::move(instances), std::move(types), pairs);
}

std::vector<std::pair<Idx, Idx>> Classification::incidence_pairs() const {
  std::vector<std::pair<Idx, Idx>> out;
  for (Idx x = 0; x < instance_count(); ++x)
    for (Idx y = 0; y < type_count(); ++y)
      if (incident(x, y)) out.emplace_back(x, y);
  return out;
}

Classification k1_context() {
  return Classification::from_labelled({"1", "2"}, {"a", "b"},
                                       {{"1", "a"}, {"2", "a"}, {"2", "b"}});
}

IdxVec derive(const Classification& a, Side side, const IdxVec& s) {
  if (side == Side::Instances) {
    Bits acc = Bits::full(a.type_count());
    for (Idx x : s) acc.and_with(a.intent_row(x));
    return acc.members();
  }
  Bits acc = Bits::full(a.instance_count());
  for (Idx y : s) acc.and_with(a.extent_col(y));
  return acc.members();
}

IdxVec derive_closure(const Classification& a, Side side, const IdxVec& s) {
  return derive(a, side == Side::Instances ? Side::Types : Side::Instances,
                derive(a, side, s));
}

ContextClass classify_context(const Classification& a) {
  ContextClass c{true, true};
  for (Idx y1 = 0; y1 < a.type_count() && c.extensional; ++y1)
    for (Idx y2 = y1 + 1; y2 < a.type_count(); ++y2)
      if (a.extent_col(y1) == a.extent_col(y2)) {
        c.extensional = false;
        break;
      }
  for (Idx x1 = 0; x1 < a.instance_count() && c.separated; ++x1)
    for (Idx x2 = x1 + 1; x2 < a.instance_count(); ++x2)
      if (a.intent_row(x1) == a.intent_row(x2)) {
        c.separated = false;
        break;
      }
  return c;
}

Classification power(const std::vector<std::string>& base, Side side) {
  const int n = static_cast<int>(base.size());
  if (n > kSubsetCap)
    fail(Err::CapacityExceeded, "power base exceeds " + std::to_string(kSubsetCap),
         {{"size", n}});
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<std::string> subsets;
  subsets.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) subsets.push_back(subset_label(base, m));
  std::vector<std::pair<Idx, Idx>> pairs;
  for (int x = 0; x < n; ++x)
    for (std::uint32_t m = 0; m < count; ++m)
      if (m & (std::uint32_t{1} << x)) {
        if (side == Side::Instances)
          pairs.emplace_back(x, static_cast<Idx>(m));
        else
          pairs.emplace_back(static_cast<Idx>(m), x);
      }
  if (side == Side::Instances)
    return Classification(base, std::move(subsets), pairs);
  return Classification(std::move(subsets), base, pairs);
}

Classification transpose(const Classification& a) {
  std::vector<std::pair<Idx, Idx>> flipped;
  for (auto [x, y] : a.incidence_pairs()) flipped.emplace_back(y, x);
  return Classification(a.types(), a.instances(), flipped);
}

Classification preorder_as_classification(const Preorder& p) {
  return Classification(p.labels(), p.labels(), p.relation_pairs());
}

GaloisConnection deriv_connection(const Classification& a) {
  return from_relation(a.instances(), a.types(), a.incidence_pairs());
}

bool fundamental_condition_holds(const Classification& a1, const Classification& a2,
                                 const IdxVec& inst_map, const IdxVec& typ_map) {
  for (Idx x2 = 0; x2 < a2.instance_count(); ++x2)
    for (Idx y1 = 0; y1 < a1.type_count(); ++y1)
      if (a1.incident(inst_map[x2], y1) != a2.incident(x2, typ_map[y1])) return false;
  return true;
}

bool ext_naturality_holds(const Classification& a1, const Classification& a2,
                          const IdxVec& inst_map, const IdxVec& typ_map) {
  // inverse image of ext1(y1) under the instance function == ext2(typ(y1))
  for (Idx y1 = 0; y1 < a1.type_count(); ++y1) {
    Bits pre(a2.instance_count());
    for (Idx x2 = 0; x2 < a2.instance_count(); ++x2)
      if (a1.extent_col(y1).get(inst_map[x2])) pre.set(x2);
    if (pre != a2.extent_col(typ_map[y1])) return false;
  }
  return true;
}

bool int_naturality_holds(const Classification& a1, const Classification& a2,
                          const IdxVec& inst_map, const IdxVec& typ_map) {
  // inverse image of int2(x2) under the type function == int1(inst(x2))
  for (Idx x2 = 0; x2 < a2.instance_count(); ++x2) {
    Bits pre(a1.type_count());
    for (Idx y1 = 0; y1 < a1.type_count(); ++y1)
      if (a2.intent_row(x2).get(typ_map[y1])) pre.set(y1);
    if (pre != a1.intent_row(inst_map[x2])) return false;
  }
  return true;
}

Infomorphism::Infomorphism(Classification source, Classification target,
                           IdxVec inst_map, IdxVec typ_map)
    : src_(std::move(source)),
      tgt_(std::move(target)),
      inst_map_(std::move(inst_map)),
      typ_map_(std::move(typ_map)) {
  if (static_cast<int>(inst_map_.size()) != tgt_.instance_count() ||
      static_cast<int>(typ_map_.size()) != src_.type_count())
    fail(Err::BadInput, "map table sizes do not match the contexts",
         {{"inst_map", inst_map_.size()}, {"typ_map", typ_map_.size()}});
  for (Idx v : inst_map_)
    if (v < 0 || v >= src_.instance_count())
      fail(Err::BadInput, "instance map value out of range", {{"value", v}});
  for (Idx v : typ_map_)
    if (v < 0 || v >= tgt_.type_count())
      fail(Err::BadInput, "type map value out of range", {{"value", v}});
  for (Idx x2 = 0; x2 < tgt_.instance_count(); ++x2)
    for (Idx y1 = 0; y1 < src_.type_count(); ++y1)
      if (src_.incident(inst_map_[x2], y1) != tgt_.incident(x2, typ_map_[y1]))
        fail(Err::FundamentalConditionViolated,
             "inst(x2) |= y1 iff x2 |= typ(y1) fails",
             {{"x2", tgt_.instances()[x2]}, {"y1", src_.types()[y1]}});
  // the two naturality formulations agree with the fundamental condition
  if (!ext_naturality_holds(src_, tgt_, inst_map_, typ_map_) ||
      !int_naturality_holds(src_, tgt_, inst_map_, typ_map_))
    fail(Err::LawViolated, "naturality forms disagree with fundamental condition");
}

Infomorphism Infomorphism::identity(const Classification& a) {
  IdxVec xs(a.instance_count()), ys(a.type_count());
  for (Idx i = 0; i < a.instance_count(); ++i) xs[i] = i;
  for (Idx i = 0; i < a.type_count(); ++i) ys[i] = i;
  return Infomorphism(a, a, std::move(xs), std::move(ys));
}

Infomorphism compose_infomorphisms(const Infomorphism& f, const Infomorphism& g) {
  if (!(f.target() == g.source()))
    fail(Err::BoundaryMismatch, "target of first differs from source of second");
  IdxVec inst(g.target().instance_count()), typ(f.source().type_count());
  for (Idx x3 = 0; x3 < g.target().instance_count(); ++x3) inst[x3] = f.inst(g.inst(x3));
  for (Idx y1 = 0; y1 < f.source().type_count(); ++y1) typ[y1] = g.typ(f.typ(y1));
  return Infomorphism(f.source(), g.target(), std::move(inst), std::move(typ));
}

std::pair<Infomorphism, Infomorphism> unit_counit(const Classification& a) {
  if (a.instance_count() > kSubsetCap || a.type_count() > kSubsetCap)
    fail(Err::CapacityExceeded, "context too large for power comparison",
         {{"instances", a.instance_count()}, {"types", a.type_count()}});
  Classification ipow = power(a.instances(), Side::Instances);
  Classification tpow = power(a.types(), Side::Types);

  IdxVec eta_inst(a.instance_count()), eta_typ(a.type_count());
  for (Idx x = 0; x < a.instance_count(); ++x) eta_inst[x] = x;
  for (Idx y = 0; y < a.type_count(); ++y) {
    std::uint32_t ext = 0;
    for (Idx x = 0; x < a.instance_count(); ++x)
      if (a.incident(x, y)) ext |= std::uint32_t{1} << x;
    eta_typ[y] = static_cast<Idx>(ext);
  }
  Infomorphism eta(a, std::move(ipow), std::move(eta_inst), std::move(eta_typ));

  IdxVec eps_inst(a.instance_count()), eps_typ(a.type_count());
  for (Idx x = 0; x < a.instance_count(); ++x) {
    std::uint32_t intent = 0;
    for (Idx y = 0; y < a.type_count(); ++y)
      if (a.incident(x, y)) intent |= std::uint32_t{1} << y;
    eps_inst[x] = static_cast<Idx>(intent);
  }
  for (Idx y = 0; y < a.type_count(); ++y) eps_typ[y] = y;
  Infomorphism eps(std::move(tpow), a, std::move(eps_inst), std::move(eps_typ));

  return {std::move(eta), std::move(eps)};
}

Infomorphism infomorphism_from_galois(const GaloisConnection& g) {
  Classification src = preorder_as_classification(g.target());
  Classification tgt = preorder_as_classification(g.source());
  return Infomorphism(std::move(src), std::move(tgt), g.left_table(),
                      g.right_table());
}

}  // namespace conlat
