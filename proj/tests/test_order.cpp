#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conlat/classification.hpp"
#include "conlat/gen.hpp"
#include "conlat/order.hpp"

using namespace conlat;

TEST_CASE("make_preorder basics") {
  const Preorder one = Preorder::make_labelled({"x"}, {}, true);
  CHECK(one.size() == 1);
  CHECK(one.leq(0, 0));

  const Preorder chain = Preorder::make_labelled({"0", "1"}, {{"0", "1"}}, true);
  CHECK(chain.leq(0, 0));
  CHECK(chain.leq(1, 1));
  CHECK(chain.leq(0, 1));
  CHECK(!chain.leq(1, 0));
  CHECK(chain.is_poset());

  CHECK_THROWS_WITH_AS(
      Preorder::make_labelled({"a", "b", "c"},
                              {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}},
                              false),
      doctest::Contains("missing (a,c)"), Error);
  CHECK_THROWS_AS(Preorder::make_labelled({"a", "a"}, {}, true), Error);
  CHECK_THROWS_AS(Preorder::make_labelled({"a"}, {{"a", "z"}}, true), Error);
  try {
    Preorder::make_labelled({"a", "b"}, {{"a", "b"}}, false);
    FAIL("expected NotReflexive");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::NotReflexive);
  }
}

TEST_CASE("classify_map") {
  const Preorder two = Preorder::chain(2);
  const Preorder three = Preorder::chain(3);
  CHECK(classify_map(MonotoneMap(two, two, {0, 1})) == MapKind::Isotone);

  const Preorder anti = Preorder::discrete({"a", "b"});
  const Preorder pt = Preorder::discrete({"*"});
  CHECK(classify_map(MonotoneMap(anti, pt, {0, 0})) == MapKind::Monotone);

  // inclusion of the 2-chain into the 3-chain preserves and respects order
  const MonotoneMap incl(two, three, {0, 1});
  for (Idx a = 0; a < 2; ++a)
    for (Idx b = 0; b < 2; ++b)
      CHECK(two.leq(a, b) == three.leq(incl(a), incl(b)));
  CHECK(classify_map(incl) == MapKind::Isotone);

  CHECK_THROWS_AS(MonotoneMap(two, two, {1, 0}), Error);
}

TEST_CASE("kernel_preorder") {
  const Preorder two = Preorder::chain(2);
  const Preorder ker_id = kernel_preorder(MonotoneMap(two, two, {0, 1}));
  CHECK(ker_id.same_as(two));

  const Preorder anti = Preorder::discrete({"a", "b"});
  const Preorder pt = Preorder::discrete({"*"});
  const Preorder ker_const = kernel_preorder(MonotoneMap(anti, pt, {0, 0}));
  CHECK(ker_const.leq(0, 1));
  CHECK(ker_const.leq(1, 0));

  // kernel of the derivation right adjoint of K1, against pairwise brute force
  const GaloisConnection g = deriv_connection(k1_context());
  const MonotoneMap right(g.target(), g.source(), g.right_table());
  const Preorder ker = kernel_preorder(right);
  for (Idx a = 0; a < ker.size(); ++a)
    for (Idx b = 0; b < ker.size(); ++b)
      CHECK(ker.leq(a, b) == g.source().leq(g.right(a), g.right(b)));

  // a map is isotone exactly when its kernel is its source
  CHECK((classify_map(right) == MapKind::Isotone) == ker.same_as(g.target()));
}

TEST_CASE("kernel contains source order") {
  Rng rng(11);
  for (int round = 0; round < 20; ++round) {
    const SetFunction h = gen_function(rng, 4, 4);
    const Preorder src = Preorder::discrete(h.source);
    const Preorder tgt = Preorder::powerset(h.target);
    IdxVec table(h.map.size());
    for (std::size_t i = 0; i < h.map.size(); ++i)
      table[i] = 1 << h.map[i];  // singleton subset
    const MonotoneMap f(src, tgt, table);
    const Preorder ker = kernel_preorder(f);
    for (Idx a = 0; a < src.size(); ++a)
      for (Idx b = 0; b < src.size(); ++b)
        if (src.leq(a, b)) CHECK(ker.leq(a, b));
    CHECK((classify_map(f) == MapKind::Isotone) == ker.same_as(src));
  }
}

TEST_CASE("extremum") {
  const Preorder two = Preorder::chain(2);
  CHECK(two.extremum({}, Extremum::Meet) == 1);  // empty meet is the top
  CHECK(two.extremum({}, Extremum::Join) == 0);

  const Preorder anti = Preorder::discrete({"a", "b"});
  CHECK_THROWS_AS(anti.extremum({0, 1}, Extremum::Join), Error);
  CHECK(!anti.has_extremum({0, 1}, Extremum::Join));

  const Preorder pow = Preorder::powerset({"1", "2"});
  const Idx m = pow.extremum({pow.index_of("{1}"), pow.index_of("{2}")}, Extremum::Meet);
  CHECK(pow.label(m) == "{}");
  const Idx j = pow.extremum({pow.index_of("{1}"), pow.index_of("{2}")}, Extremum::Join);
  CHECK(pow.label(j) == "{1,2}");

  // meet of a subset bounds it from below and dominates every lower bound
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    IdxVec s;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) s.push_back(i);
    const Idx meet = pow.extremum(s, Extremum::Meet);
    for (Idx e : s) CHECK(pow.leq(meet, e));
    for (Idx x = 0; x < pow.size(); ++x) {
      bool lower = true;
      for (Idx e : s) lower = lower && pow.leq(x, e);
      if (lower) CHECK(pow.leq(x, meet));
    }
  }
}

TEST_CASE("direct and inverse image") {
  const SetFunction id({"1", "2"}, {"1", "2"}, {0, 1});
  CHECK(direct_image(id, {0}) == IdxVec{0});
  CHECK(inverse_image(id, {1}) == IdxVec{1});
  CHECK(inverse_image(id, {}) == IdxVec{});

  const SetFunction collapse({"1", "2"}, {"a"}, {0, 0});
  CHECK(direct_image(collapse, {0, 1}) == IdxVec{0});

  const SetFunction h({"1", "2"}, {"a", "b"}, {0, 0});
  CHECK(inverse_image(h, {0}) == IdxVec{0, 1});
}

TEST_CASE("direct image is left adjoint to inverse image") {
  Rng rng(7);
  for (int round = 0; round < 25; ++round) {
    const SetFunction h = gen_function(rng, 5, 5);
    const int n1 = static_cast<int>(h.source.size());
    const int n2 = static_cast<int>(h.target.size());
    for (std::uint32_t xm = 0; xm < (1u << n1); ++xm)
      for (std::uint32_t ym = 0; ym < (1u << n2); ++ym) {
        IdxVec X, Y;
        for (int i = 0; i < n1; ++i)
          if (xm & (1u << i)) X.push_back(i);
        for (int i = 0; i < n2; ++i)
          if (ym & (1u << i)) Y.push_back(i);
        const IdxVec dir = direct_image(h, X);
        const IdxVec inv = inverse_image(h, Y);
        const bool lhs = std::includes(Y.begin(), Y.end(), dir.begin(), dir.end());
        const bool rhs = std::includes(inv.begin(), inv.end(), X.begin(), X.end());
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("powerset order and opposite") {
  const Preorder pow = Preorder::powerset({"a", "b"});
  CHECK(pow.size() == 4);
  CHECK(pow.label(0) == "{}");
  CHECK(pow.label(3) == "{a,b}");
  CHECK(pow.leq(0, 3));
  CHECK(!pow.leq(3, 0));
  const Preorder op = pow.opposite();
  CHECK(op.leq(3, 0));
  CHECK(op.opposite().same_as(pow));
}
