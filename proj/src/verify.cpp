#include "conlat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "conlat/concept_lattice.hpp"
#include "conlat/gen.hpp"
#include "conlat/quartet.hpp"

namespace conlat {

namespace {

struct Case {
  Classification a;
  std::uint64_t seed;
};

std::vector<IdxVec> all_subsets(int n) {
  std::vector<IdxVec> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    IdxVec s;
    for (int i = 0; i < n; ++i)
      if (m & (std::uint32_t{1} << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

IdxVec set_intersection(const IdxVec& a, const IdxVec& b) {
  IdxVec r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

IdxVec set_union_of(const IdxVec& a, const IdxVec& b) {
  IdxVec r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool subset_leq(const IdxVec& a, const IdxVec& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<FormalConcept> brute_force_concepts(const Classification& a) {
  std::vector<FormalConcept> out;
  for (const IdxVec& x : all_subsets(a.instance_count()))
    for (const IdxVec& y : all_subsets(a.type_count()))
      if (derive(a, Side::Instances, x) == y && derive(a, Side::Types, y) == x)
        out.push_back({x, y});
  std::sort(out.begin(), out.end(), [&](const FormalConcept& l, const FormalConcept& r) {
    return Bits::of(a.instance_count(), l.extent)
        .value_less(Bits::of(a.instance_count(), r.extent));
  });
  return out;
}

// instance power infomorphism of u : X2 -> X1 (instance power is functorial
// against the direction of u)
Infomorphism instance_power_infomorphism(const SetFunction& u) {
  Classification p1 = power(u.target, Side::Instances);
  Classification p2 = power(u.source, Side::Instances);
  IdxVec typ_map(p1.type_count());
  for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(p1.type_count()); ++m) {
    std::uint32_t pre = 0;
    for (Idx a = 0; a < static_cast<Idx>(u.source.size()); ++a)
      if (m & (std::uint32_t{1} << u(a))) pre |= std::uint32_t{1} << a;
    typ_map[m] = static_cast<Idx>(pre);
  }
  return Infomorphism(std::move(p1), std::move(p2), u.map, std::move(typ_map));
}

// type power infomorphism of k : Y1 -> Y2
Infomorphism type_power_infomorphism(const SetFunction& k) {
  Classification p1 = power(k.source, Side::Types);
  Classification p2 = power(k.target, Side::Types);
  IdxVec inst_map(p2.instance_count());
  for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(p2.instance_count()); ++m) {
    std::uint32_t pre = 0;
    for (Idx a = 0; a < static_cast<Idx>(k.source.size()); ++a)
      if (m & (std::uint32_t{1} << k(a))) pre |= std::uint32_t{1} << a;
    inst_map[m] = static_cast<Idx>(pre);
  }
  return Infomorphism(std::move(p1), std::move(p2), std::move(inst_map), k.map);
}

bool infomorphism_equal(const Infomorphism& f, const Infomorphism& g) {
  return f.source() == g.source() && f.target() == g.target() &&
         f.inst_table() == g.inst_table() && f.typ_table() == g.typ_table();
}

class Battery {
public:
  // A law returns "" when it ran, or a note starting with "skipped" when the
  // case is out of its scope.
  void run(const std::string& id, const std::function<std::string()>& law) {
    auto& slot = results_[id];
    if (std::find(order_.begin(), order_.end(), id) == order_.end())
      order_.push_back(id);
    if (!slot.pass) return;  // keep the first failure
    try {
      const std::string note = law();
      if (note.rfind("skipped", 0) == 0)
        ++slot.skipped;
      else
        ++slot.cases;
    } catch (const Error& e) {
      slot.pass = false;
      slot.note = std::string(err_name(e.kind())) + ": " + e.what();
      if (!e.witness().is_null()) slot.note += " " + e.witness().dump();
    } catch (const std::exception& e) {
      slot.pass = false;
      slot.note = std::string("exception: ") + e.what();
    }
  }

  VerifyReport report() const {
    VerifyReport r;
    for (const auto& id : order_) {
      const auto& slot = results_.at(id);
      std::string detail;
      if (slot.pass) {
        detail = std::to_string(slot.cases) + " case(s)";
        if (slot.skipped) detail += ", " + std::to_string(slot.skipped) + " skipped";
      } else {
        detail = slot.note;
      }
      r.laws.push_back({id, slot.pass, detail});
    }
    return r;
  }

private:
  struct Slot {
    bool pass = true;
    int cases = 0;
    int skipped = 0;
    std::string note;
  };
  std::map<std::string, Slot> results_;
  std::vector<std::string> order_;
};

void run_case(Battery& bat, const Case& cs) {
  const Classification& A = cs.a;
  const GaloisConnection g = deriv_connection(A);
  const ConceptLattice L = clg(A);

  bat.run("galois.triple-composite", [&] {
    for (Idx a = 0; a < g.source().size(); ++a)
      if (!g.target().equiv(g.left(g.closure(a)), g.left(a)))
        fail(Err::LawViolated, "left-right-left differs from left",
             {{"a", g.source().label(a)}});
    for (Idx b = 0; b < g.target().size(); ++b)
      if (!g.source().equiv(g.right(g.interior(b)), g.right(b)))
        fail(Err::LawViolated, "right-left-right differs from right",
             {{"b", g.target().label(b)}});
    return std::string();
  });

  bat.run("galois.closure-interior", [&] {
    const ClosureInterior ci = closure_interior(g);
    for (Idx a = 0; a < g.source().size(); ++a) {
      if (!g.source().leq(a, ci.closure[a]))
        fail(Err::LawViolated, "closure not increasing");
      const bool closed = g.closed(a);
      bool hit = false;
      for (Idx b = 0; b < g.target().size() && !hit; ++b)
        if (g.source().equiv(a, g.right(b))) hit = true;
      if (closed != hit)
        fail(Err::LawViolated,
             "closed differs from being a right-adjoint image up to equivalence",
             {{"a", g.source().label(a)}});
    }
    for (Idx b = 0; b < g.target().size(); ++b) {
      if (!g.target().leq(ci.interior[b], b))
        fail(Err::LawViolated, "interior not decreasing");
      const bool open = g.open(b);
      bool hit = false;
      for (Idx a = 0; a < g.source().size() && !hit; ++a)
        if (g.target().equiv(b, g.left(a))) hit = true;
      if (open != hit)
        fail(Err::LawViolated,
             "open differs from being a left-adjoint image up to equivalence",
             {{"b", g.target().label(b)}});
    }
    return std::string();
  });

  bat.run("galois.polar-factorization", [&] {
    const PolarFactorization pf = polar_factorize(g);
    if (!classify_connection(pf.refl).reflection)
      fail(Err::LawViolated, "refl component is not a reflection");
    if (!classify_connection(pf.corefl).coreflection)
      fail(Err::LawViolated, "corefl component is not a coreflection");
    if (!compose_galois(pf.refl, pf.corefl).same_up_to_equiv(g))
      fail(Err::LawViolated, "factors do not compose to the connection");
    if (!pf.axis.is_poset())
      fail(Err::LawViolated, "axis of a poset connection must be a poset");
    return std::string();
  });

  bat.run("galois.axis-concept-order", [&] {
    const PolarFactorization pf = polar_factorize(g);
    if (pf.axis.size() != L.size())
      fail(Err::LawViolated, "axis and concept order differ in size",
           {{"axis", pf.axis.size()}, {"concepts", L.size()}});
    IdxVec to_concept(pf.axis.size());
    for (int i = 0; i < pf.axis.size(); ++i) {
      const std::uint32_t extent_mask = static_cast<std::uint32_t>(pf.bipoles[i].first);
      Idx found = -1;
      for (Idx c = 0; c < L.size(); ++c)
        if (Bits::of(A.instance_count(), L.concepts[c].extent) ==
            Bits::of(A.instance_count(),
                     [&] {
                       IdxVec v;
                       for (int x = 0; x < A.instance_count(); ++x)
                         if (extent_mask & (std::uint32_t{1} << x)) v.push_back(x);
                       return v;
                     }()))
          found = c;
      if (found < 0) fail(Err::LawViolated, "bipole extent is not a concept extent");
      to_concept[i] = found;
    }
    for (int i = 0; i < pf.axis.size(); ++i)
      for (int j = 0; j < pf.axis.size(); ++j)
        if (pf.axis.leq(i, j) != L.order.leq(to_concept[i], to_concept[j]))
          fail(Err::LawViolated, "axis order differs from concept order");
    return std::string();
  });

  bat.run("galois.kernel-factorization", [&] {
    kernel_factorize(g);  // composition identities asserted inside
    return std::string();
  });

  bat.run("galois.diagonal-fill-unique", [&] {
    const PolarFactorization pf = polar_factorize(g);
    const int k = pf.axis.size();
    if (k > 4) return std::string("skipped, axis too large to enumerate");
    IdxVec perm(k);
    for (int i = 0; i < k; ++i) perm[i] = (i + 1) % k;
    auto [axis2, iso] = permuted_copy(pf.axis, perm, "p");
    const GaloisConnection r = compose_galois(pf.refl, iso);
    IdxVec inv(k);
    for (int i = 0; i < k; ++i) inv[perm[i]] = i;
    GaloisConnection iso_back(axis2, pf.axis, inv, perm);
    const GaloisConnection m = compose_galois(iso_back, pf.corefl);
    const GaloisConnection h = diagonal_fill(pf.refl, m, r, pf.corefl);
    if (h.left_table() != perm || h.right_table() != inv)
      fail(Err::LawViolated, "diagonal differs from the witnessing isomorphism");
    int hits = 0;
    for (const GaloisConnection& cand : enumerate_connections(pf.axis, axis2))
      if (compose_galois(pf.refl, cand).same_up_to_equiv(r) &&
          compose_galois(cand, m).same_up_to_equiv(pf.corefl))
        ++hits;
    if (hits != 1)
      fail(Err::LawViolated, "diagonal is not unique", {{"solutions", hits}});
    return std::string();
  });

  bat.run("galois.factorization-system", [&] {
    // two independently built factorizations of the derivation connection:
    // the polar axis and the extent/intent split through the concept order;
    // the diagonal between them is an isomorphism
    const PolarFactorization pf = polar_factorize(g);
    auto [extent, intent] = extent_intent_adjunctions(L);
    const GaloisConnection h = diagonal_fill(pf.refl, intent, extent, pf.corefl);
    for (Idx i = 0; i < h.source().size(); ++i)
      if (h.right(h.left(i)) != i)
        fail(Err::LawViolated, "diagonal is not a left inverse", {{"axis", i}});
    for (Idx c = 0; c < h.target().size(); ++c)
      if (h.left(h.right(c)) != c)
        fail(Err::LawViolated, "diagonal is not a right inverse", {{"concept", c}});
    for (Idx i = 0; i < h.source().size(); ++i)
      for (Idx j = 0; j < h.source().size(); ++j)
        if (pf.axis.leq(i, j) != L.order.leq(h.left(i), h.left(j)))
          fail(Err::LawViolated, "diagonal does not preserve and reflect order");
    return std::string();
  });

  bat.run("clsn.derivation-laws", [&] {
    const auto xs = all_subsets(A.instance_count());
    const auto ys = all_subsets(A.type_count());
    for (const auto& x1 : xs)
      for (const auto& x2 : xs) {
        if (subset_leq(x1, x2) &&
            !subset_leq(derive(A, Side::Instances, x2), derive(A, Side::Instances, x1)))
          fail(Err::LawViolated, "instance derivation not antitone");
        const IdxVec u = set_union_of(x1, x2);
        if (derive(A, Side::Instances, u) !=
            set_intersection(derive(A, Side::Instances, x1),
                             derive(A, Side::Instances, x2)))
          fail(Err::LawViolated, "derivation of union differs from intersection");
      }
    for (const auto& x : xs) {
      const IdxVec clo = derive_closure(A, Side::Instances, x);
      if (!subset_leq(x, clo)) fail(Err::LawViolated, "closure not extensive");
      if (derive(A, Side::Instances, clo) != derive(A, Side::Instances, x))
        fail(Err::LawViolated, "derivation of closure differs");
      if (derive_closure(A, Side::Types, derive(A, Side::Instances, x)) !=
          derive(A, Side::Instances, x))
        fail(Err::LawViolated, "derivation not closed");
    }
    for (const auto& y1 : ys)
      for (const auto& y2 : ys) {
        if (subset_leq(y1, y2) &&
            !subset_leq(derive(A, Side::Types, y2), derive(A, Side::Types, y1)))
          fail(Err::LawViolated, "type derivation not antitone");
        const IdxVec u = set_union_of(y1, y2);
        if (derive(A, Side::Types, u) !=
            set_intersection(derive(A, Side::Types, y1), derive(A, Side::Types, y2)))
          fail(Err::LawViolated, "derivation of union differs from intersection");
      }
    for (const auto& y : ys) {
      const IdxVec clo = derive_closure(A, Side::Types, y);
      if (!subset_leq(y, clo)) fail(Err::LawViolated, "closure not extensive");
      if (derive(A, Side::Types, clo) != derive(A, Side::Types, y))
        fail(Err::LawViolated, "derivation of closure differs");
    }
    return std::string();
  });

  bat.run("clsn.derive-vs-connection", [&] {
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << A.instance_count()); ++m) {
      IdxVec s;
      for (int i = 0; i < A.instance_count(); ++i)
        if (m & (std::uint32_t{1} << i)) s.push_back(i);
      std::uint32_t expect = 0;
      for (Idx y : derive(A, Side::Instances, s)) expect |= std::uint32_t{1} << y;
      if (static_cast<std::uint32_t>(g.left(static_cast<Idx>(m))) != expect)
        fail(Err::LawViolated, "left adjoint differs from derivation");
    }
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << A.type_count()); ++m) {
      IdxVec s;
      for (int i = 0; i < A.type_count(); ++i)
        if (m & (std::uint32_t{1} << i)) s.push_back(i);
      std::uint32_t expect = 0;
      for (Idx x : derive(A, Side::Types, s)) expect |= std::uint32_t{1} << x;
      if (static_cast<std::uint32_t>(g.right(static_cast<Idx>(m))) != expect)
        fail(Err::LawViolated, "right adjoint differs from derivation");
    }
    return std::string();
  });

  bat.run("clsn.transpose-duality", [&] {
    const Classification At = transpose(A);
    for (const auto& s : all_subsets(A.type_count()))
      if (derive(At, Side::Instances, s) != derive(A, Side::Types, s))
        fail(Err::LawViolated, "transpose duality fails");
    if (!(transpose(At) == A)) fail(Err::LawViolated, "transpose not involutive");
    return std::string();
  });

  bat.run("clsn.fundamental-naturality-equiv", [&] {
    Rng rng(cs.seed ^ 0xa5a5a5a5ull);
    for (int i = 0; i < 20; ++i) {
      const CandidateInfomorphism c = gen_candidate(rng);
      const bool fc = fundamental_condition_holds(c.source, c.target, c.inst_map,
                                                  c.typ_map);
      const bool en = ext_naturality_holds(c.source, c.target, c.inst_map, c.typ_map);
      const bool in = int_naturality_holds(c.source, c.target, c.inst_map, c.typ_map);
      if (fc != en || fc != in)
        fail(Err::LawViolated, "the three validity predicates disagree",
             {{"fundamental", fc}, {"ext", en}, {"int", in}});
      if (c.intended_valid && !fc)
        fail(Err::LawViolated, "constructed infomorphism not valid");
    }
    return std::string();
  });

  bat.run("clg.concepts-oracle", [&] {
    if (concepts(A) != brute_force_concepts(A))
      fail(Err::LawViolated, "enumeration differs from brute-force filter");
    return std::string();
  });

  bat.run("clg.meet-join-formulas", [&] {
    const auto check = [&](const IdxVec& sel) {
      lattice_extremum(L, sel, Extremum::Meet);   // formula vs order asserted inside
      lattice_extremum(L, sel, Extremum::Join);
    };
    if (L.size() <= 12) {
      for (const auto& sel : all_subsets(L.size())) check(sel);
    } else {
      check({});
      for (Idx i = 0; i < L.size(); ++i)
        for (Idx j = i; j < L.size(); ++j) check({i, j});
    }
    return std::string();
  });

  bat.run("clg.embeddings-dense", [&] {
    const DensityReport dr = density_check(L);
    if (!dr.ok()) fail(Err::LawViolated, "embedding images not dense");
    for (Idx x = 0; x < A.instance_count(); ++x) {
      IdxVec holds;
      for (Idx c = 0; c < L.size(); ++c)
        if (std::binary_search(L.concepts[c].extent.begin(),
                               L.concepts[c].extent.end(), x))
          holds.push_back(c);
      if (L.order.extremum(holds, Extremum::Meet) != L.iota_elem[x])
        fail(Err::LawViolated, "iota is not the least concept containing the instance");
    }
    for (Idx y = 0; y < A.type_count(); ++y) {
      IdxVec holds;
      for (Idx c = 0; c < L.size(); ++c)
        if (std::binary_search(L.concepts[c].intent.begin(),
                               L.concepts[c].intent.end(), y))
          holds.push_back(c);
      if (L.order.extremum(holds, Extremum::Join) != L.tau_elem[y])
        fail(Err::LawViolated, "tau is not the greatest concept carrying the type");
    }
    for (Idx x = 0; x < A.instance_count(); ++x)
      subset_generators(L, Side::Instances, {x});
    for (Idx y = 0; y < A.type_count(); ++y) subset_generators(L, Side::Types, {y});
    return std::string();
  });

  bat.run("clg.extent-intent-adjunctions", [&] {
    extent_intent_adjunctions(L);  // reflection/coreflection/composite asserted
    return std::string();
  });

  bat.run("clg.roundtrip", [&] {
    if (!(clsn(L) == A)) fail(Err::LawViolated, "clsn(clg(A)) differs from A");
    roundtrip_iso(L);  // inverse order-isomorphisms asserted
    return std::string();
  });

  bat.run("clg.classification-identities", [&] {
    for (Idx x = 0; x < A.instance_count(); ++x)
      if (L.rel_intent(L.iota_elem[x]) != A.intent_row(x).members())
        fail(Err::LawViolated, "context intent differs from intent of iota");
    for (Idx y = 0; y < A.type_count(); ++y)
      if (L.rel_extent(L.tau_elem[y]) != A.extent_col(y).members())
        fail(Err::LawViolated, "context extent differs from extent of tau");
    return std::string();
  });

  bat.run("clg.theories", [&] {
    if (A.type_count() > 12) return std::string("skipped, types > 12");
    const TheoryLattice th = theories(L);
    const std::uint32_t count = std::uint32_t{1} << A.type_count();
    for (std::uint32_t m = 0; m < count; ++m) {
      if ((m & th.closure[m]) != m) fail(Err::LawViolated, "closure not extensive");
      if (th.closure[th.closure[m]] != th.closure[m])
        fail(Err::LawViolated, "closure not idempotent");
    }
    return std::string();
  });

  // infomorphism-driven laws; eta/epsilon are always available, random valid
  // ones exercise the general case
  bat.run("clsn.unit-counit-naturality", [&] {
    if (A.instance_count() == 0 || A.instance_count() > 10 || A.type_count() > 10)
      return std::string("skipped for this shape");
    auto [eta1, eps1] = unit_counit(A);
    Rng rng(cs.seed ^ 0x5c5c5c5cull);
    const Infomorphism f = gen_infomorphism(rng, A, 2, 2);
    auto [eta2, eps2] = unit_counit(f.target());
    const Infomorphism pow_inst = instance_power_infomorphism(
        SetFunction(f.target().instances(), f.source().instances(), f.inst_table()));
    if (!infomorphism_equal(compose_infomorphisms(eta1, pow_inst),
                            compose_infomorphisms(f, eta2)))
      fail(Err::LawViolated, "eta naturality square does not commute");
    const Infomorphism pow_typ = type_power_infomorphism(
        SetFunction(f.source().types(), f.target().types(), f.typ_table()));
    if (!infomorphism_equal(compose_infomorphisms(eps1, f),
                            compose_infomorphisms(pow_typ, eps2)))
      fail(Err::LawViolated, "epsilon naturality square does not commute");
    return std::string();
  });

  bat.run("clg.morphism-and-quartets", [&] {
    if (A.instance_count() == 0 || A.instance_count() > 6 || A.type_count() > 6)
      return std::string("skipped for this shape");
    Rng rng(cs.seed ^ 0x3c3c3c3cull);
    const Infomorphism f = gen_infomorphism(rng, A, 2, 2);
    const ConceptMorphism h = clg_morphism(f);
    const ConceptLattice& L1 = h.source;
    const ConceptLattice& L2 = h.target;
    const GaloisConnection adj = h.adjoint();

    // quartet between the derivation connections
    const GaloisConnection dir_inst = from_function(
        SetFunction(f.target().instances(), f.source().instances(), f.inst_table()));
    const GaloisConnection inv_typ = from_function_op(
        SetFunction(f.source().types(), f.target().types(), f.typ_table()));
    check_quartet(deriv_connection(f.target()), deriv_connection(f.source()),
                  dir_inst, inv_typ);

    // extent quartet factors through the kernels of the left adjoints
    auto [extent1, intent1] = extent_intent_adjunctions(L1);
    auto [extent2, intent2] = extent_intent_adjunctions(L2);
    const Quartet eq = check_quartet(extent2, extent1, dir_inst, adj);
    factor_reflection_quartet(eq);
    for (Idx b1 = 0; b1 < eq.b.source().size(); ++b1)
      if (eq.b.left(b1) != eq.g2.left(eq.a.left(eq.g1.right(b1))))
        fail(Err::LawViolated, "reflection special condition fails for left leg");
    for (Idx b2 = 0; b2 < eq.b.target().size(); ++b2)
      if (eq.b.right(b2) != eq.g1.left(eq.a.right(eq.g2.right(b2))))
        fail(Err::LawViolated, "reflection special condition fails for right leg");

    // intent quartet factors through the kernels of the right adjoints
    const Quartet iq = check_quartet(intent2, intent1, adj, inv_typ);
    const GaloisConnection d = factor_coreflection_quartet(iq);
    for (Idx a1 = 0; a1 < iq.a.source().size(); ++a1)
      if (iq.a.left(a1) != iq.g2.right(iq.b.left(iq.g1.left(a1))))
        fail(Err::LawViolated, "coreflection special condition fails for left leg");
    for (Idx a2 = 0; a2 < iq.a.target().size(); ++a2)
      if (iq.a.right(a2) != iq.g1.right(iq.b.right(iq.g2.left(a2))))
        fail(Err::LawViolated, "coreflection special condition fails for right leg");

    // theory-level binding: d is clo2 then typ-inverse-image / typ direct image
    if (f.source().type_count() <= 12 && f.target().type_count() <= 12) {
      const TheoryLattice th1 = theories(L1);
      const TheoryLattice th2 = theories(L2);
      if (!d.source().same_as(th2.entailment) || !d.target().same_as(th1.entailment))
        fail(Err::LawViolated, "factor carriers differ from the theory orders");
      for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(d.source().size()); ++m) {
        std::uint32_t pre = 0;
        for (Idx y1 = 0; y1 < f.source().type_count(); ++y1)
          if (th2.closure[m] & (std::uint32_t{1} << f.typ(y1)))
            pre |= std::uint32_t{1} << y1;
        if (static_cast<std::uint32_t>(d.left(static_cast<Idx>(m))) != pre)
          fail(Err::LawViolated, "theory connection left leg differs from binding");
      }
      for (std::uint32_t m = 0; m < static_cast<std::uint32_t>(d.target().size()); ++m) {
        std::uint32_t img = 0;
        for (Idx y1 = 0; y1 < f.source().type_count(); ++y1)
          if (m & (std::uint32_t{1} << y1)) img |= std::uint32_t{1} << f.typ(y1);
        if (static_cast<std::uint32_t>(d.right(static_cast<Idx>(m))) != img)
          fail(Err::LawViolated, "theory connection right leg differs from binding");
      }
    }
    return std::string();
  });
}

}  // namespace

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  int failures = 0;
  for (const auto& l : laws) {
    out << (l.pass ? "PASS " : "FAIL ") << l.id;
    if (!l.detail.empty()) out << " (" << l.detail << ")";
    out << "\n";
    if (!l.pass) ++failures;
  }
  out << laws.size() - failures << "/" << laws.size() << " laws passed\n";
  return out.str();
}

VerifyReport verify_context(const Classification& a) {
  if (a.instance_count() > 10 || a.type_count() > 10)
    fail(Err::CapacityExceeded, "verification needs both sides <= 10",
         {{"instances", a.instance_count()}, {"types", a.type_count()}});
  Battery bat;
  run_case(bat, Case{a, 0x9E3779B97F4A7C15ull});
  return bat.report();
}

VerifyReport verify_seeded(std::uint64_t seed, int cases) {
  Battery bat;
  run_case(bat, Case{Classification({}, {}, {}), seed});
  run_case(bat, Case{k1_context(), seed + 1});
  run_case(bat, Case{power({"x", "y"}, Side::Instances), seed + 2});
  Rng rng(seed);
  for (int i = 0; i < cases; ++i)
    run_case(bat, Case{gen_context(rng, 5, 5), rng.next()});
  return bat.report();
}

}  // namespace conlat
