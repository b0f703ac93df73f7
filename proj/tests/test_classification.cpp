#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "conlat/classification.hpp"
#include "conlat/concept_lattice.hpp"
#include "conlat/gen.hpp"

using namespace conlat;

namespace {

IdxVec labels_to_idx(const std::vector<std::string>& all,
                     const std::vector<std::string>& chosen) {
  IdxVec out;
  for (const auto& l : chosen)
    out.push_back(static_cast<Idx>(std::find(all.begin(), all.end(), l) - all.begin()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("make_classification") {
  CHECK_NOTHROW(Classification({}, {}, {}));
  CHECK_NOTHROW(k1_context());
  CHECK_THROWS_AS(Classification::from_labelled({"1"}, {"a"}, {{"1", "zz"}}), Error);
  CHECK_THROWS_AS(Classification::from_labelled({"1", "1"}, {"a"}, {}), Error);
}

TEST_CASE("derive") {
  const Classification a = k1_context();
  CHECK(derive(a, Side::Instances, {}) == IdxVec{0, 1});        // all types
  CHECK(derive(a, Side::Instances, {0}) == IdxVec{0});          // {1} |- {a}
  CHECK(derive(a, Side::Types, {0, 1}) == IdxVec{1});           // {a,b} |- {2}
  CHECK(derive_closure(a, Side::Instances, {0}) == IdxVec{0, 1});
}

TEST_CASE("classify_context") {
  const ContextClass k1 = classify_context(k1_context());
  CHECK(k1.extensional);
  CHECK(k1.separated);

  const Classification dup = Classification::from_labelled(
      {"1", "2"}, {"a", "b"}, {{"1", "a"}, {"1", "b"}});
  CHECK(!classify_context(dup).extensional);

  const ContextClass pw = classify_context(power({"x", "y", "z"}, Side::Instances));
  CHECK(pw.extensional);
  CHECK(pw.separated);
}

TEST_CASE("power classifications") {
  const Classification px = power({"x"}, Side::Instances);
  CHECK(px.instance_count() == 1);
  CHECK(px.type_count() == 2);
  CHECK(px.types() == std::vector<std::string>{"{}", "{x}"});
  CHECK(!px.incident(0, 0));
  CHECK(px.incident(0, 1));

  const Classification pxy = power({"x", "y"}, Side::Instances);
  CHECK(pxy.instance_count() == 2);
  CHECK(pxy.type_count() == 4);

  CHECK(transpose(pxy) == power({"x", "y"}, Side::Types));
}

TEST_CASE("transpose") {
  const Classification a = k1_context();
  const Classification at = transpose(a);
  CHECK(at.instances() == a.types());
  CHECK(at.incident(0, 0));  // (a,1)
  CHECK(at.incident(0, 1));  // (a,2)
  CHECK(at.incident(1, 1));  // (b,2)
  CHECK(!at.incident(1, 0));
  CHECK(transpose(at) == a);
  CHECK(transpose(Classification({}, {}, {})) == Classification({}, {}, {}));
}

TEST_CASE("preorders are classifications") {
  const Preorder two = Preorder::chain(2);
  const Classification c2 = preorder_as_classification(two);
  CHECK(c2.incident(0, 0));
  CHECK(c2.incident(0, 1));
  CHECK(c2.incident(1, 1));
  CHECK(!c2.incident(1, 0));

  const Classification cd = preorder_as_classification(Preorder::discrete({"a", "b"}));
  CHECK(cd.incident(0, 0));
  CHECK(!cd.incident(0, 1));

  // a Galois connection is an infomorphism between the induced classifications
  const GaloisConnection g = deriv_connection(k1_context());
  const Infomorphism incl = infomorphism_from_galois(g);
  for (Idx a = 0; a < g.source().size(); ++a)
    for (Idx b = 0; b < g.target().size(); ++b)
      CHECK(incl.source().incident(incl.inst(a), b) == incl.target().incident(a, incl.typ(b)));
}

TEST_CASE("make_infomorphism") {
  const Classification a = k1_context();
  CHECK_NOTHROW(Infomorphism::identity(a));

  auto [eta, eps] = unit_counit(a);
  CHECK(eta.source() == a);
  // type map of eta: a -> {1,2}, b -> {2}
  CHECK(eta.target().types()[eta.typ(0)] == "{1,2}");
  CHECK(eta.target().types()[eta.typ(1)] == "{2}");
  // instance map of epsilon: 1 -> {a}, 2 -> {a,b}
  CHECK(eps.source().instances()[eps.inst(0)] == "{a}");
  CHECK(eps.source().instances()[eps.inst(1)] == "{a,b}");

  // wrong constant instance map violates the fundamental condition
  try {
    Infomorphism(a, a, {0, 0}, {0, 1});
    FAIL("expected FundamentalConditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::FundamentalConditionViolated);
    CHECK(!e.witness().is_null());
  }
}

TEST_CASE("compose_infomorphisms") {
  const Classification a = k1_context();
  Rng rng(41);
  const Infomorphism f = gen_infomorphism(rng, a, 2, 2);
  const Infomorphism idl = compose_infomorphisms(Infomorphism::identity(a), f);
  CHECK(idl.inst_table() == f.inst_table());
  CHECK(idl.typ_table() == f.typ_table());

  const Infomorphism g = gen_infomorphism(rng, f.target(), 1, 1);
  const Infomorphism h = gen_infomorphism(rng, g.target(), 1, 1);
  const Infomorphism left = compose_infomorphisms(compose_infomorphisms(f, g), h);
  const Infomorphism right = compose_infomorphisms(f, compose_infomorphisms(g, h));
  CHECK(left.inst_table() == right.inst_table());
  CHECK(left.typ_table() == right.typ_table());

  CHECK_THROWS_AS(compose_infomorphisms(f, f), Error);
}

TEST_CASE("unit_counit edge cases") {
  const Classification empty({}, {}, {});
  auto [eta, eps] = unit_counit(empty);
  CHECK(eta.target().type_count() == 1);   // only the empty subset
  CHECK(eps.source().instance_count() == 1);
}

TEST_CASE("derivation laws on seeded contexts") {
  Rng rng(13);
  for (int round = 0; round < 10; ++round) {
    const Classification a = gen_context(rng, 5, 5);
    const int ni = a.instance_count();
    for (std::uint32_t m1 = 0; m1 < (1u << ni); ++m1)
      for (std::uint32_t m2 = m1; m2 < (1u << ni); ++m2) {
        IdxVec x1, x2;
        for (int i = 0; i < ni; ++i) {
          if (m1 & (1u << i)) x1.push_back(i);
          if (m2 & (1u << i)) x2.push_back(i);
        }
        IdxVec u;
        std::set_union(x1.begin(), x1.end(), x2.begin(), x2.end(),
                       std::back_inserter(u));
        IdxVec lhs = derive(a, Side::Instances, u);
        IdxVec d1 = derive(a, Side::Instances, x1);
        IdxVec d2 = derive(a, Side::Instances, x2);
        IdxVec rhs;
        std::set_intersection(d1.begin(), d1.end(), d2.begin(), d2.end(),
                              std::back_inserter(rhs));
        CHECK(lhs == rhs);
        if ((m1 & m2) == m1)  // x1 subset of x2: antitone
          CHECK(std::includes(d1.begin(), d1.end(), d2.begin(), d2.end()));
      }
    for (std::uint32_t m = 0; m < (1u << ni); ++m) {
      IdxVec x;
      for (int i = 0; i < ni; ++i)
        if (m & (1u << i)) x.push_back(i);
      const IdxVec clo = derive_closure(a, Side::Instances, x);
      CHECK(std::includes(clo.begin(), clo.end(), x.begin(), x.end()));
      CHECK(derive(a, Side::Instances, clo) == derive(a, Side::Instances, x));
    }
  }
}

TEST_CASE("transpose duality of derivation") {
  Rng rng(19);
  for (int round = 0; round < 10; ++round) {
    const Classification a = gen_context(rng, 4, 4);
    const Classification at = transpose(a);
    for (std::uint32_t m = 0; m < (1u << a.type_count()); ++m) {
      IdxVec s;
      for (int i = 0; i < a.type_count(); ++i)
        if (m & (1u << i)) s.push_back(i);
      CHECK(derive(at, Side::Instances, s) == derive(a, Side::Types, s));
    }
  }
}

TEST_CASE("fundamental condition matches both naturality forms") {
  Rng rng(23);
  int valid = 0, invalid = 0;
  for (int round = 0; round < 200; ++round) {
    const CandidateInfomorphism c = gen_candidate(rng);
    const bool fc =
        fundamental_condition_holds(c.source, c.target, c.inst_map, c.typ_map);
    CHECK(fc == ext_naturality_holds(c.source, c.target, c.inst_map, c.typ_map));
    CHECK(fc == int_naturality_holds(c.source, c.target, c.inst_map, c.typ_map));
    if (c.intended_valid) CHECK(fc);
    (fc ? valid : invalid)++;
  }
  CHECK(valid > 0);
  CHECK(invalid > 0);  // mutations must actually produce invalid candidates
}

TEST_CASE("labels_to_idx helper sanity") {
  const Classification a = k1_context();
  CHECK(labels_to_idx(a.types(), {"b", "a"}) == IdxVec{0, 1});
}

TEST_CASE("capacity guards") {
  try {
    power(gen_labels("x", 21), Side::Instances);
    FAIL("expected CapacityExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::CapacityExceeded);
  }

  const Classification wide(gen_labels("x", 21), gen_labels("y", 21), {});
  try {
    concepts(wide);
    FAIL("expected CapacityExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::CapacityExceeded);
  }
  try {
    deriv_connection(wide);
    FAIL("expected CapacityExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::CapacityExceeded);
  }
  CHECK_NOTHROW(derive(wide, Side::Instances, {0, 20}));  // derivation itself is unbounded
}
