#include "conlat/galois.hpp"

#include <algorithm>

namespace conlat {

namespace {

void check_monotone(const Preorder& src, const Preorder& tgt, const IdxVec& f,
                    const char* side) {
  if (static_cast<int>(f.size()) != src.size())
    fail(Err::BadInput, std::string(side) + " table size does not match carrier",
         {{"side", side}, {"expected", src.size()}, {"got", f.size()}});
  for (Idx v : f)
    if (v < 0 || v >= tgt.size())
      fail(Err::BadInput, std::string(side) + " value out of range",
           {{"side", side}, {"value", v}});
  for (Idx a = 0; a < src.size(); ++a)
    for (Idx b = 0; b < src.size(); ++b)
      if (src.leq(a, b) && !tgt.leq(f[a], f[b]))
        fail(Err::NotMonotone, std::string(side) + " adjoint not monotone",
             {{"side", side}, {"a", src.label(a)}, {"b", src.label(b)}});
}

}  // namespace

GaloisConnection::GaloisConnection(Preorder source, Preorder target, IdxVec left,
                                   IdxVec right)
    : src_(std::move(source)),
      tgt_(std::move(target)),
      left_(std::move(left)),
      right_(std::move(right)) {
  check_monotone(src_, tgt_, left_, "left");
  check_monotone(tgt_, src_, right_, "right");
  for (Idx a = 0; a < src_.size(); ++a)
    for (Idx b = 0; b < tgt_.size(); ++b)
      if (tgt_.leq(left_[a], b) != src_.leq(a, right_[b]))
        fail(Err::AdjointnessViolated, "left(a) <= b iff a <= right(b) fails",
             {{"a", src_.label(a)}, {"b", tgt_.label(b)}});
  // equivalent inequality pair
  for (Idx b = 0; b < tgt_.size(); ++b)
    if (!tgt_.leq(interior(b), b))
      fail(Err::LawViolated, "interior not decreasing", {{"b", tgt_.label(b)}});
  for (Idx a = 0; a < src_.size(); ++a)
    if (!src_.leq(a, closure(a)))
      fail(Err::LawViolated, "closure not increasing", {{"a", src_.label(a)}});
}

GaloisConnection GaloisConnection::identity(const Preorder& p) {
  IdxVec id(p.size());
  for (Idx i = 0; i < p.size(); ++i) id[i] = i;
  return GaloisConnection(p, p, id, id);
}

bool GaloisConnection::same_up_to_equiv(const GaloisConnection& o) const {
  if (!src_.same_as(o.src_) || !tgt_.same_as(o.tgt_)) return false;
  for (Idx a = 0; a < src_.size(); ++a)
    if (!tgt_.equiv(left_[a], o.left_[a])) return false;
  for (Idx b = 0; b < tgt_.size(); ++b)
    if (!src_.equiv(right_[b], o.right_[b])) return false;
  return true;
}

GaloisConnection make_galois(Preorder source, Preorder target, IdxVec left,
                             IdxVec right) {
  return GaloisConnection(std::move(source), std::move(target), std::move(left),
                          std::move(right));
}

GaloisConnection compose_galois(const GaloisConnection& g1,
                                const GaloisConnection& g2) {
  if (!g1.target().same_as(g2.source()))
    fail(Err::BoundaryMismatch, "target of first differs from source of second");
  IdxVec left(g1.source().size()), right(g2.target().size());
  for (Idx a = 0; a < g1.source().size(); ++a) left[a] = g2.left(g1.left(a));
  for (Idx c = 0; c < g2.target().size(); ++c) right[c] = g1.right(g2.right(c));
  return GaloisConnection(g1.source(), g2.target(), std::move(left),
                          std::move(right));
}

ClosureInterior closure_interior(const GaloisConnection& g) {
  ClosureInterior ci;
  ci.closure.resize(g.source().size());
  ci.interior.resize(g.target().size());
  for (Idx a = 0; a < g.source().size(); ++a) {
    ci.closure[a] = g.closure(a);
    if (!g.source().equiv(g.closure(g.closure(a)), g.closure(a)))
      fail(Err::LawViolated, "closure not idempotent", {{"a", g.source().label(a)}});
    if (g.closed(a)) ci.closed_elems.push_back(a);
  }
  for (Idx b = 0; b < g.target().size(); ++b) {
    ci.interior[b] = g.interior(b);
    if (!g.target().equiv(g.interior(g.interior(b)), g.interior(b)))
      fail(Err::LawViolated, "interior not idempotent", {{"b", g.target().label(b)}});
    if (g.open(b)) ci.open_elems.push_back(b);
  }
  return ci;
}

ConnectionClass classify_connection(const GaloisConnection& g) {
  ConnectionClass c;
  c.reflection = true;
  for (Idx b = 0; b < g.target().size(); ++b)
    if (!g.target().equiv(g.interior(b), b)) {
      c.reflection = false;
      break;
    }
  c.coreflection = true;
  for (Idx a = 0; a < g.source().size(); ++a)
    if (!g.source().equiv(g.closure(a), a)) {
      c.coreflection = false;
      break;
    }
  if (c.reflection) {
    // the right adjoint of a reflection respects order
    for (Idx b1 = 0; b1 < g.target().size(); ++b1)
      for (Idx b2 = 0; b2 < g.target().size(); ++b2)
        if (g.source().leq(g.right(b1), g.right(b2)) && !g.target().leq(b1, b2))
          fail(Err::LawViolated, "right adjoint of reflection not isotone",
               {{"b1", g.target().label(b1)}, {"b2", g.target().label(b2)}});
  }
  if (c.coreflection) {
    for (Idx a1 = 0; a1 < g.source().size(); ++a1)
      for (Idx a2 = 0; a2 < g.source().size(); ++a2)
        if (g.target().leq(g.left(a1), g.left(a2)) && !g.source().leq(a1, a2))
          fail(Err::LawViolated, "left adjoint of coreflection not isotone",
               {{"a1", g.source().label(a1)}, {"a2", g.source().label(a2)}});
  }
  return c;
}

InducedLatticeReport check_induced_lattice(const GaloisConnection& g) {
  const ConnectionClass cls = classify_connection(g);
  if (!cls.reflection && !cls.coreflection)
    fail(Err::NotReflection, "connection is neither reflection nor coreflection");

  InducedLatticeReport rep;
  const Preorder& A = g.source();
  const Preorder& B = g.target();

  auto subsets_of = [](int n) {
    if (n > kSubsetCap)
      fail(Err::CapacityExceeded,
           "carrier exceeds " + std::to_string(kSubsetCap) + " elements",
           {{"size", n}});
    return std::uint32_t{1} << n;
  };

  auto not_complete = [](const Preorder& p, const IdxVec& s) {
    nlohmann::json w = nlohmann::json::array();
    for (Idx i : s) w.push_back(p.label(i));
    fail(Err::NotComplete, "subset lacks a bound", {{"subset", w}});
  };

  if (cls.reflection) {
    rep.as_reflection = true;
    if (A.is_poset() && !B.is_poset())
      fail(Err::LawViolated, "reflection of a poset has a non-poset target");
    const std::uint32_t count = subsets_of(B.size());
    for (std::uint32_t m = 0; m < count; ++m) {
      IdxVec S;
      for (int i = 0; i < B.size(); ++i)
        if (m & (std::uint32_t{1} << i)) S.push_back(i);
      IdxVec gS;
      for (Idx b : S) gS.push_back(g.right(b));
      if (!A.has_extremum(gS, Extremum::Join) || !A.has_extremum(gS, Extremum::Meet))
        not_complete(A, gS);
      const Idx joinA = A.extremum(gS, Extremum::Join);
      const Idx meetA = A.extremum(gS, Extremum::Meet);
      if (!B.has_extremum(S, Extremum::Join) || !B.has_extremum(S, Extremum::Meet))
        not_complete(B, S);
      const Idx joinB = B.extremum(S, Extremum::Join);
      const Idx meetB = B.extremum(S, Extremum::Meet);
      if (!B.equiv(joinB, g.left(joinA)))
        fail(Err::LawViolated, "join_B S != left(join_A right[S])", {{"subset", m}});
      if (!B.equiv(meetB, g.left(meetA)))
        fail(Err::LawViolated, "meet_B S != left(meet_A right[S])", {{"subset", m}});
      if (!A.equiv(g.right(joinB), g.closure(joinA)))
        fail(Err::LawViolated, "right(join_B S) != closure(join_A right[S])",
             {{"subset", m}});
      if (!A.equiv(g.right(meetB), meetA))
        fail(Err::LawViolated, "right(meet_B S) != meet_A right[S]", {{"subset", m}});
      ++rep.subsets_checked;
    }
  }
  if (cls.coreflection) {
    rep.as_coreflection = true;
    if (B.is_poset() && !A.is_poset())
      fail(Err::LawViolated, "coreflection of a poset has a non-poset source");
    const std::uint32_t count = subsets_of(A.size());
    for (std::uint32_t m = 0; m < count; ++m) {
      IdxVec S;
      for (int i = 0; i < A.size(); ++i)
        if (m & (std::uint32_t{1} << i)) S.push_back(i);
      IdxVec gS;
      for (Idx a : S) gS.push_back(g.left(a));
      if (!B.has_extremum(gS, Extremum::Join) || !B.has_extremum(gS, Extremum::Meet))
        not_complete(B, gS);
      const Idx joinB = B.extremum(gS, Extremum::Join);
      const Idx meetB = B.extremum(gS, Extremum::Meet);
      if (!A.has_extremum(S, Extremum::Join) || !A.has_extremum(S, Extremum::Meet))
        not_complete(A, S);
      const Idx joinA = A.extremum(S, Extremum::Join);
      const Idx meetA = A.extremum(S, Extremum::Meet);
      if (!A.equiv(meetA, g.right(meetB)))
        fail(Err::LawViolated, "meet_A S != right(meet_B left[S])", {{"subset", m}});
      if (!A.equiv(joinA, g.right(joinB)))
        fail(Err::LawViolated, "join_A S != right(join_B left[S])", {{"subset", m}});
      if (!B.equiv(g.left(meetA), g.interior(meetB)))
        fail(Err::LawViolated, "left(meet_A S) != interior(meet_B left[S])",
             {{"subset", m}});
      if (!B.equiv(g.left(joinA), joinB))
        fail(Err::LawViolated, "left(join_A S) != join_B left[S]", {{"subset", m}});
      ++rep.subsets_checked;
    }
  }
  return rep;
}

PolarFactorization polar_factorize(const GaloisConnection& g) {
  const Preorder& A = g.source();
  const Preorder& B = g.target();
  if (A.size() > (1 << kSubsetCap) || B.size() > (1 << kSubsetCap))
    fail(Err::CapacityExceeded, "carrier too large for factorization");

  // bipoles: one canonical (least-index) closed representative per
  // equivalence class, paired with the least-index open partner
  std::vector<std::pair<Idx, Idx>> bipoles;
  for (Idx a = 0; a < A.size(); ++a) {
    if (!g.closed(a)) continue;
    bool seen = false;
    for (auto& [a0, b0] : bipoles)
      if (A.equiv(a0, a)) {
        seen = true;
        break;
      }
    if (seen) continue;
    Idx partner = -1;
    for (Idx b = 0; b < B.size(); ++b)
      if (g.open(b) && B.equiv(b, g.left(a))) {
        partner = b;
        break;
      }
    if (partner < 0)
      fail(Err::LawViolated, "closed element without open partner",
           {{"a", A.label(a)}});
    bipoles.emplace_back(a, partner);
  }

  const int k = static_cast<int>(bipoles.size());
  std::vector<std::string> labels(k);
  std::vector<std::pair<Idx, Idx>> pairs;
  for (int i = 0; i < k; ++i)
    labels[i] = "(" + A.label(bipoles[i].first) + "|" + B.label(bipoles[i].second) + ")";
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const bool by_a = A.leq(bipoles[i].first, bipoles[j].first);
      const bool by_b = B.leq(bipoles[i].second, bipoles[j].second);
      if (by_a != by_b)
        fail(Err::LawViolated, "bipolar order disagrees between components",
             {{"i", i}, {"j", j}});
      if (by_a) pairs.emplace_back(i, j);
    }
  Preorder axis = Preorder::make(labels, pairs, false);

  auto bipole_for_closed = [&](Idx a) {
    for (int i = 0; i < k; ++i)
      if (A.equiv(bipoles[i].first, a)) return i;
    fail(Err::LawViolated, "no bipole for closed element", {{"a", A.label(a)}});
  };
  auto bipole_for_open = [&](Idx b) {
    for (int i = 0; i < k; ++i)
      if (B.equiv(bipoles[i].second, b)) return i;
    fail(Err::LawViolated, "no bipole for open element", {{"b", B.label(b)}});
  };

  IdxVec embed0(A.size()), proj0(k), proj1(k), embed1(B.size());
  for (Idx a = 0; a < A.size(); ++a) embed0[a] = bipole_for_closed(g.closure(a));
  for (Idx b = 0; b < B.size(); ++b) embed1[b] = bipole_for_open(g.interior(b));
  for (int i = 0; i < k; ++i) {
    proj0[i] = bipoles[i].first;
    proj1[i] = bipoles[i].second;
  }

  GaloisConnection refl(A, axis, embed0, proj0);
  GaloisConnection corefl(axis, B, proj1, embed1);

  const ConnectionClass rc = classify_connection(refl);
  if (!rc.reflection)
    fail(Err::LawViolated, "embedding/projection pair is not a reflection");
  const ConnectionClass cc = classify_connection(corefl);
  if (!cc.coreflection)
    fail(Err::LawViolated, "projection/embedding pair is not a coreflection");
  if (!compose_galois(refl, corefl).same_up_to_equiv(g))
    fail(Err::LawViolated, "polar factorization does not compose to the input");
  if (A.is_poset() && B.is_poset() && !axis.is_poset())
    fail(Err::LawViolated, "axis of a poset connection is not a poset");

  return PolarFactorization{std::move(bipoles), std::move(axis), std::move(refl),
                            std::move(corefl)};
}

KernelFactorization kernel_factorize(const GaloisConnection& g) {
  const Preorder& A = g.source();
  const Preorder& B = g.target();
  Preorder kerL = kernel_preorder(MonotoneMap(A, B, g.left_table()));
  Preorder kerR = kernel_preorder(MonotoneMap(B, A, g.right_table()));

  IdxVec idA(A.size()), cloT(A.size()), intT(B.size()), idB(B.size());
  for (Idx a = 0; a < A.size(); ++a) {
    idA[a] = a;
    cloT[a] = g.closure(a);
  }
  for (Idx b = 0; b < B.size(); ++b) {
    idB[b] = b;
    intT[b] = g.interior(b);
  }

  GaloisConnection clo(A, kerL, idA, cloT);
  GaloisConnection lift0(kerL, B, g.left_table(), g.right_table());
  GaloisConnection lift1(A, kerR, g.left_table(), g.right_table());
  GaloisConnection intr(kerR, B, intT, idB);
  GaloisConnection lift(kerL, kerR, g.left_table(), g.right_table());

  if (!compose_galois(clo, lift0).same_up_to_equiv(g))
    fail(Err::LawViolated, "clo * lift0 != g");
  if (!compose_galois(lift1, intr).same_up_to_equiv(g))
    fail(Err::LawViolated, "lift1 * intr != g");
  if (!compose_galois(clo, lift).same_up_to_equiv(lift1))
    fail(Err::LawViolated, "clo * lift != lift1");
  if (!compose_galois(lift, intr).same_up_to_equiv(lift0))
    fail(Err::LawViolated, "lift * intr != lift0");

  return KernelFactorization{std::move(kerL), std::move(kerR), std::move(clo),
                             std::move(lift0), std::move(lift1), std::move(intr),
                             std::move(lift)};
}

GaloisConnection diagonal_fill(const GaloisConnection& e, const GaloisConnection& m,
                               const GaloisConnection& r, const GaloisConnection& s) {
  const Preorder& A = e.source();
  const Preorder& B = e.target();
  const Preorder& C = m.source();
  const Preorder& D = m.target();
  if (!r.source().same_as(A) || !r.target().same_as(C) || !s.source().same_as(B) ||
      !s.target().same_as(D))
    fail(Err::BoundaryMismatch, "square boundaries do not agree");
  for (const Preorder* p : {&A, &B, &C, &D})
    if (!p->is_poset()) fail(Err::NotPoset, "square carrier is not a poset");
  if (!classify_connection(e).reflection)
    fail(Err::NotReflection, "top connection is not a reflection");
  if (!classify_connection(m).coreflection)
    fail(Err::NotCoreflection, "bottom connection is not a coreflection");
  if (!compose_galois(e, s).same_up_to_equiv(compose_galois(r, m)))
    fail(Err::SquareNotCommuting, "e * s != r * m");

  IdxVec hleft(B.size()), hright(C.size());
  for (Idx b = 0; b < B.size(); ++b) {
    hleft[b] = m.right(s.left(b));
    if (hleft[b] != r.left(e.right(b)))
      fail(Err::LawViolated, "two formulas for the diagonal left adjoint disagree",
           {{"b", B.label(b)}});
  }
  for (Idx c = 0; c < C.size(); ++c) {
    hright[c] = e.left(r.right(c));
    if (hright[c] != s.right(m.left(c)))
      fail(Err::LawViolated, "two formulas for the diagonal right adjoint disagree",
           {{"c", C.label(c)}});
  }
  GaloisConnection h(B, C, std::move(hleft), std::move(hright));
  if (!compose_galois(e, h).same_up_to_equiv(r))
    fail(Err::LawViolated, "e * h != r");
  if (!compose_galois(h, m).same_up_to_equiv(s))
    fail(Err::LawViolated, "h * m != s");
  return h;
}

GaloisConnection from_relation(const std::vector<std::string>& xs,
                               const std::vector<std::string>& ys,
                               const std::vector<std::pair<Idx, Idx>>& rel) {
  const int nx = static_cast<int>(xs.size());
  const int ny = static_cast<int>(ys.size());
  if (nx > kSubsetCap || ny > kSubsetCap)
    fail(Err::CapacityExceeded, "relation carrier exceeds " + std::to_string(kSubsetCap),
         {{"x", nx}, {"y", ny}});
  std::vector<std::uint32_t> row(nx, 0), col(ny, 0);
  for (auto [x, y] : rel) {
    if (x < 0 || x >= nx || y < 0 || y >= ny)
      fail(Err::UnknownLabel, "relation pair out of range", {{"pair", {x, y}}});
    row[x] |= std::uint32_t{1} << y;
    col[y] |= std::uint32_t{1} << x;
  }
  const std::uint32_t fullY = ny == 32 ? ~0u : (std::uint32_t{1} << ny) - 1;
  const std::uint32_t fullX = nx == 32 ? ~0u : (std::uint32_t{1} << nx) - 1;

  Preorder PX = Preorder::powerset(xs);
  Preorder PYop = Preorder::powerset(ys).opposite();

  IdxVec left(PX.size()), right(PYop.size());
  for (std::uint32_t X = 0; X < static_cast<std::uint32_t>(PX.size()); ++X) {
    std::uint32_t acc = fullY;
    for (int x = 0; x < nx; ++x)
      if (X & (std::uint32_t{1} << x)) acc &= row[x];
    left[X] = static_cast<Idx>(acc);
  }
  for (std::uint32_t Y = 0; Y < static_cast<std::uint32_t>(PYop.size()); ++Y) {
    std::uint32_t acc = fullX;
    for (int y = 0; y < ny; ++y)
      if (Y & (std::uint32_t{1} << y)) acc &= col[y];
    right[Y] = static_cast<Idx>(acc);
  }
  return GaloisConnection(std::move(PX), std::move(PYop), std::move(left),
                          std::move(right));
}

GaloisConnection from_function(const SetFunction& h) {
  const int n1 = static_cast<int>(h.source.size());
  const int n2 = static_cast<int>(h.target.size());
  if (n1 > kSubsetCap || n2 > kSubsetCap)
    fail(Err::CapacityExceeded, "function carrier exceeds " + std::to_string(kSubsetCap),
         {{"source", n1}, {"target", n2}});
  Preorder P1 = Preorder::powerset(h.source);
  Preorder P2 = Preorder::powerset(h.target);
  IdxVec left(P1.size()), right(P2.size());
  for (std::uint32_t X = 0; X < static_cast<std::uint32_t>(P1.size()); ++X) {
    std::uint32_t img = 0;
    for (int a = 0; a < n1; ++a)
      if (X & (std::uint32_t{1} << a)) img |= std::uint32_t{1} << h(a);
    left[X] = static_cast<Idx>(img);
  }
  for (std::uint32_t Y = 0; Y < static_cast<std::uint32_t>(P2.size()); ++Y) {
    std::uint32_t pre = 0;
    for (int a = 0; a < n1; ++a)
      if (Y & (std::uint32_t{1} << h(a))) pre |= std::uint32_t{1} << a;
    right[Y] = static_cast<Idx>(pre);
  }
  return GaloisConnection(std::move(P1), std::move(P2), std::move(left),
                          std::move(right));
}

GaloisConnection from_function_op(const SetFunction& h) {
  const int n1 = static_cast<int>(h.source.size());
  const int n2 = static_cast<int>(h.target.size());
  if (n1 > kSubsetCap || n2 > kSubsetCap)
    fail(Err::CapacityExceeded, "function carrier exceeds " + std::to_string(kSubsetCap),
         {{"source", n1}, {"target", n2}});
  Preorder P2op = Preorder::powerset(h.target).opposite();
  Preorder P1op = Preorder::powerset(h.source).opposite();
  IdxVec left(P2op.size()), right(P1op.size());
  for (std::uint32_t Y = 0; Y < static_cast<std::uint32_t>(P2op.size()); ++Y) {
    std::uint32_t pre = 0;
    for (int a = 0; a < n1; ++a)
      if (Y & (std::uint32_t{1} << h(a))) pre |= std::uint32_t{1} << a;
    left[Y] = static_cast<Idx>(pre);
  }
  for (std::uint32_t X = 0; X < static_cast<std::uint32_t>(P1op.size()); ++X) {
    std::uint32_t img = 0;
    for (int a = 0; a < n1; ++a)
      if (X & (std::uint32_t{1} << a)) img |= std::uint32_t{1} << h(a);
    right[X] = static_cast<Idx>(img);
  }
  return GaloisConnection(std::move(P2op), std::move(P1op), std::move(left),
                          std::move(right));
}

std::pair<Preorder, GaloisConnection> permuted_copy(const Preorder& p,
                                                    const IdxVec& perm,
                                                    const std::string& label_prefix) {
  const int n = p.size();
  std::vector<std::string> labels(n);
  std::vector<std::pair<Idx, Idx>> pairs;
  for (int i = 0; i < n; ++i) labels[perm[i]] = label_prefix + std::to_string(perm[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j)) pairs.emplace_back(perm[i], perm[j]);
  Preorder q = Preorder::make(std::move(labels), pairs, false);
  IdxVec inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  GaloisConnection iso(p, q, perm, inv);
  return {std::move(q), std::move(iso)};
}

std::vector<GaloisConnection> enumerate_connections(const Preorder& a,
                                                    const Preorder& b) {
  auto monotone_tables = [](const Preorder& src, const Preorder& tgt) {
    std::vector<IdxVec> out;
    IdxVec f(src.size(), 0);
    if (src.size() == 0) {
      out.push_back(f);
      return out;
    }
    if (tgt.size() == 0) return out;
    while (true) {
      bool mono = true;
      for (Idx x = 0; mono && x < src.size(); ++x)
        for (Idx y = 0; mono && y < src.size(); ++y)
          if (src.leq(x, y) && !tgt.leq(f[x], f[y])) mono = false;
      if (mono) out.push_back(f);
      int i = 0;
      while (i < src.size() && f[i] == tgt.size() - 1) f[i++] = 0;
      if (i == src.size()) break;
      ++f[i];
    }
    return out;
  };
  std::vector<GaloisConnection> out;
  for (const IdxVec& lf : monotone_tables(a, b))
    for (const IdxVec& rg : monotone_tables(b, a)) {
      bool adjoint = true;
      for (Idx x = 0; adjoint && x < a.size(); ++x)
        for (Idx y = 0; adjoint && y < b.size(); ++y)
          if (b.leq(lf[x], y) != a.leq(x, rg[y])) adjoint = false;
      if (adjoint) out.emplace_back(a, b, lf, rg);
    }
  return out;
}

}  // namespace conlat
