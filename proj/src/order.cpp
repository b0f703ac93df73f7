#include "conlat/order.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace conlat {

const char* err_name(Err e) {
  switch (e) {
    case Err::DuplicateLabel: return "DuplicateLabel";
    case Err::UnknownLabel: return "UnknownLabel";
    case Err::NotReflexive: return "NotReflexive";
    case Err::NotTransitive: return "NotTransitive";
    case Err::NotMonotone: return "NotMonotone";
    case Err::AdjointnessViolated: return "AdjointnessViolated";
    case Err::BoundaryMismatch: return "BoundaryMismatch";
    case Err::NoBound: return "NoBound";
    case Err::CapacityExceeded: return "CapacityExceeded";
    case Err::NotReflection: return "NotReflection";
    case Err::NotCoreflection: return "NotCoreflection";
    case Err::NotPoset: return "NotPoset";
    case Err::NotComplete: return "NotComplete";
    case Err::SquareNotCommuting: return "SquareNotCommuting";
    case Err::FundamentalConditionViolated: return "FundamentalConditionViolated";
    case Err::NotAdjoint: return "NotAdjoint";
    case Err::InstanceNotPreserved: return "InstanceNotPreserved";
    case Err::TypeNotPreserved: return "TypeNotPreserved";
    case Err::BadHeader: return "BadHeader";
    case Err::CountMismatch: return "CountMismatch";
    case Err::BadRowLength: return "BadRowLength";
    case Err::BadChar: return "BadChar";
    case Err::BadInput: return "BadInput";
    case Err::LawViolated: return "LawViolated";
  }
  return "Unknown";
}

nlohmann::json Error::to_json() const {
  return nlohmann::json{
      {"error", err_name(kind_)}, {"message", what()}, {"witness", witness_}};
}

void Preorder::check_labels() const {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      fail(Err::DuplicateLabel, "duplicate label '" + l + "'", {{"label", l}});
}

Preorder Preorder::make(std::vector<std::string> labels,
                        const std::vector<std::pair<Idx, Idx>>& pairs,
                        bool close) {
  Preorder p;
  p.labels_ = std::move(labels);
  p.check_labels();
  const int n = p.size();
  p.rows_.assign(n, Bits(n));
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(Err::UnknownLabel, "pair index out of range",
           {{"pair", {a, b}}, {"size", n}});
    p.rows_[a].set(b);
  }
  if (close) {
    for (int i = 0; i < n; ++i) p.rows_[i].set(i);
    // Warshall
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (p.rows_[i].get(k)) p.rows_[i].or_with(p.rows_[k]);
  } else {
    for (int i = 0; i < n; ++i)
      if (!p.rows_[i].get(i))
        fail(Err::NotReflexive, "missing (" + p.labels_[i] + "," + p.labels_[i] + ")",
             {{"element", p.labels_[i]}});
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (p.rows_[i].get(k) && !p.rows_[k].subset_of(p.rows_[i]))
          for (int j = 0; j < n; ++j)
            if (p.rows_[k].get(j) && !p.rows_[i].get(j))
              fail(Err::NotTransitive,
                   "missing (" + p.labels_[i] + "," + p.labels_[j] + ")",
                   {{"via", p.labels_[k]},
                    {"from", p.labels_[i]},
                    {"to", p.labels_[j]}});
  }
  return p;
}

Preorder Preorder::make_labelled(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& pairs, bool close) {
  std::unordered_map<std::string, Idx> at;
  for (Idx i = 0; i < static_cast<Idx>(labels.size()); ++i) at[labels[i]] = i;
  std::vector<std::pair<Idx, Idx>> ip;
  ip.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = at.find(a), ib = at.find(b);
    if (ia == at.end()) fail(Err::UnknownLabel, "unknown label '" + a + "'", {{"label", a}});
    if (ib == at.end()) fail(Err::UnknownLabel, "unknown label '" + b + "'", {{"label", b}});
    ip.emplace_back(ia->second, ib->second);
  }
  return make(std::move(labels), ip, close);
}

Preorder Preorder::discrete(std::vector<std::string> labels) {
  return make(std::move(labels), {}, true);
}

Preorder Preorder::chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<Idx, Idx>> pairs;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i + 1 < n) pairs.emplace_back(i, i + 1);
  }
  return make(std::move(labels), pairs, true);
}

std::string subset_label(const std::vector<std::string>& base, std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) {
      if (!first) s += ",";
      s += base[i];
      first = false;
    }
  return s + "}";
}

Preorder Preorder::powerset(const std::vector<std::string>& base) {
  const int n = static_cast<int>(base.size());
  if (n > kSubsetCap)
    fail(Err::CapacityExceeded, "powerset base exceeds " + std::to_string(kSubsetCap),
         {{"size", n}});
  const std::uint32_t count = std::uint32_t{1} << n;
  Preorder p;
  p.labels_.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) p.labels_.push_back(subset_label(base, m));
  p.rows_.assign(count, Bits(static_cast<int>(count)));
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b)
      if ((a & ~b) == 0) p.rows_[a].set(static_cast<int>(b));
  return p;
}

Preorder Preorder::opposite() const {
  Preorder p;
  p.labels_ = labels_;
  const int n = size();
  p.rows_.assign(n, Bits(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq(b, a)) p.rows_[a].set(b);
  return p;
}

Idx Preorder::index_of(const std::string& label) const {
  for (Idx i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  fail(Err::UnknownLabel, "unknown label '" + label + "'", {{"label", label}});
}

Idx Preorder::canonical(Idx a) const {
  for (Idx i = 0; i < a; ++i)
    if (equiv(i, a)) return i;
  return a;
}

bool Preorder::is_poset() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (equiv(a, b)) return false;
  return true;
}

std::vector<std::pair<Idx, Idx>> Preorder::relation_pairs() const {
  std::vector<std::pair<Idx, Idx>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (leq(a, b)) out.emplace_back(a, b);
  return out;
}

Idx Preorder::extremum(const IdxVec& subset, Extremum kind) const {
  const int n = size();
  // meet: greatest element of the lower-bound set; join dually.
  IdxVec bounds;
  for (Idx x = 0; x < n; ++x) {
    bool ok = true;
    for (Idx s : subset)
      if (kind == Extremum::Meet ? !leq(x, s) : !leq(s, x)) {
        ok = false;
        break;
      }
    if (ok) bounds.push_back(x);
  }
  for (Idx m : bounds) {
    bool best = true;
    for (Idx x : bounds)
      if (kind == Extremum::Meet ? !leq(x, m) : !leq(m, x)) {
        best = false;
        break;
      }
    if (best) return m;  // bounds scanned in index order, so this is canonical
  }
  nlohmann::json w = nlohmann::json::array();
  for (Idx s : subset) w.push_back(labels_[s]);
  fail(Err::NoBound,
       kind == Extremum::Meet ? "subset has no meet" : "subset has no join",
       {{"subset", w}});
}

bool Preorder::has_extremum(const IdxVec& subset, Extremum kind) const {
  try {
    extremum(subset, kind);
    return true;
  } catch (const Error& e) {
    if (e.kind() == Err::NoBound) return false;
    throw;
  }
}

MonotoneMap::MonotoneMap(Preorder src, Preorder tgt, IdxVec m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
  if (static_cast<int>(map.size()) != source.size())
    fail(Err::BadInput, "map table size does not match carrier",
         {{"expected", source.size()}, {"got", map.size()}});
  for (Idx v : map)
    if (v < 0 || v >= target.size())
      fail(Err::BadInput, "map value out of range", {{"value", v}});
  for (Idx a = 0; a < source.size(); ++a)
    for (Idx b = 0; b < source.size(); ++b)
      if (source.leq(a, b) && !target.leq(map[a], map[b]))
        fail(Err::NotMonotone, "order not preserved",
             {{"a", source.label(a)}, {"b", source.label(b)}});
}

MapKind classify_map(const MonotoneMap& f) {
  for (Idx a = 0; a < f.source.size(); ++a)
    for (Idx b = 0; b < f.source.size(); ++b)
      if (f.target.leq(f(a), f(b)) && !f.source.leq(a, b)) return MapKind::Monotone;
  return MapKind::Isotone;
}

Preorder kernel_preorder(const MonotoneMap& f) {
  const int n = f.source.size();
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      if (f.target.leq(f(a), f(b))) pairs.emplace_back(a, b);
  Preorder ker = Preorder::make(f.source.labels(), pairs, false);
  // source order embeds, f is isotone from the kernel, and the identity is
  // monotone source -> kernel
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      if (f.source.leq(a, b) && !ker.leq(a, b))
        fail(Err::LawViolated, "kernel order does not contain source order",
             {{"a", a}, {"b", b}});
      if (ker.leq(a, b) != f.target.leq(f(a), f(b)))
        fail(Err::LawViolated, "kernel pullback mismatch", {{"a", a}, {"b", b}});
    }
  return ker;
}

SetFunction::SetFunction(std::vector<std::string> src, std::vector<std::string> tgt,
                         IdxVec m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
  if (map.size() != source.size())
    fail(Err::BadInput, "function table size does not match domain",
         {{"expected", source.size()}, {"got", map.size()}});
  for (Idx v : map)
    if (v < 0 || v >= static_cast<Idx>(target.size()))
      fail(Err::BadInput, "function value out of range", {{"value", v}});
}

IdxVec normalize_set(IdxVec v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

IdxVec direct_image(const SetFunction& h, const IdxVec& X) {
  IdxVec out;
  for (Idx a : X) out.push_back(h(a));
  return normalize_set(std::move(out));
}

IdxVec inverse_image(const SetFunction& h, const IdxVec& Y) {
  IdxVec out;
  for (Idx a = 0; a < static_cast<Idx>(h.source.size()); ++a)
    if (std::binary_search(Y.begin(), Y.end(), h(a))) out.push_back(a);
  return out;
}

}  // namespace conlat
