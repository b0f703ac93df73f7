#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "conlat/formats.hpp"
#include "conlat/gen.hpp"
#include "conlat/verify.hpp"

using namespace conlat;

namespace {

const char* kK1Text = "B\n\n2\n2\n1\n2\na\nb\nX.\nXX\n";

}  // namespace

TEST_CASE("parse_cxt") {
  const Classification a = io::parse_cxt(kK1Text);
  CHECK(a == k1_context());

  const Classification empty = io::parse_cxt("B\n\n0\n0\n");
  CHECK(empty.instance_count() == 0);
  CHECK(empty.type_count() == 0);

  // CRLF is accepted
  CHECK(io::parse_cxt("B\r\n\r\n2\r\n2\r\n1\r\n2\r\na\r\nb\r\nX.\r\nXX\r\n") ==
        k1_context());

  try {
    io::parse_cxt("C\n\n0\n0\n");
    FAIL("expected BadHeader");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::BadHeader);
  }
  try {
    io::parse_cxt("B\n\n2\nx\n");
    FAIL("expected CountMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::CountMismatch);
  }
  try {
    io::parse_cxt("B\n\n2\n2\n1\n2\na\nb\nX.\nX\n");
    FAIL("expected BadRowLength");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::BadRowLength);
  }
  try {
    io::parse_cxt("B\n\n2\n2\n1\n2\na\nb\nX?\nXX\n");
    FAIL("expected BadChar");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::BadChar);
    CHECK(e.witness().at("col") == 2);
  }
}

TEST_CASE("emit_cxt") {
  CHECK(io::emit_cxt(k1_context()) == kK1Text);
  CHECK(io::emit_cxt(Classification({}, {}, {})) == "B\n\n0\n0\n");
}

TEST_CASE("cxt round trip on seeded contexts") {
  Rng rng(101);
  for (int round = 0; round < 50; ++round) {
    const Classification a = gen_context(rng, 6, 6);
    CHECK(io::parse_cxt(io::emit_cxt(a)) == a);
  }
}

TEST_CASE("cxt round trip on one-sided contexts") {
  const Classification no_types(gen_labels("x", 2), {}, {});
  CHECK(io::parse_cxt(io::emit_cxt(no_types)) == no_types);
  const Classification no_instances({}, gen_labels("y", 3), {});
  CHECK(io::parse_cxt(io::emit_cxt(no_instances)) == no_instances);
  CHECK(concepts(no_types).size() == 1);
  CHECK(concepts(no_instances).size() == 1);
}

TEST_CASE("emit_dot") {
  const std::string dot = io::emit_dot(clg(k1_context()));
  // two nodes, one edge, reduced labels
  CHECK(dot.find("n0 [label=\"2 / b\"]") != std::string::npos);
  CHECK(dot.find("n1 [label=\"1 / a\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n1 -> n0") == std::string::npos);

  const std::string pt = io::emit_dot(
      clg(Classification::from_labelled({"1"}, {"a"}, {{"1", "a"}})));
  CHECK(pt.find("->") == std::string::npos);

  // the diamond has four nodes and four cover edges
  const std::string diamond = io::emit_dot(clg(power({"x", "y"}, Side::Instances)));
  int edges = 0;
  for (std::size_t at = diamond.find("->"); at != std::string::npos;
       at = diamond.find("->", at + 1))
    ++edges;
  CHECK(edges == 4);
}

TEST_CASE("dot covers generate the strict order") {
  Rng rng(103);
  const ConceptLattice l = clg(gen_context(rng, 4, 4));
  const std::string dot = io::emit_dot(l);
  // collect edges and close transitively
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    const auto arrow = line.find(" -> ");
    if (arrow == std::string::npos) continue;
    const int from = std::stoi(line.substr(line.find('n') + 1));
    const int to = std::stoi(line.substr(line.find('n', arrow) + 1));
    edges.emplace_back(from, to);
  }
  std::vector<std::vector<bool>> reach(l.size(), std::vector<bool>(l.size(), false));
  for (auto [i, j] : edges) reach[i][j] = true;
  for (int k = 0; k < l.size(); ++k)
    for (int i = 0; i < l.size(); ++i)
      for (int j = 0; j < l.size(); ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j < l.size(); ++j)
      if (i != j) CHECK(reach[i][j] == l.order.leq(i, j));
}

TEST_CASE("json round trips") {
  Rng rng(107);
  for (int round = 0; round < 10; ++round) {
    const Classification a = gen_context(rng, 4, 4);
    CHECK(io::context_from_json(io::context_to_json(a)) == a);

    const GaloisConnection g = deriv_connection(a);
    const GaloisConnection g2 = io::galois_from_json(io::galois_to_json(g));
    CHECK(g2.same_up_to_equiv(g));

    const MonotoneMap mm(g.source(), g.target(), g.left_table());
    const MonotoneMap mm2 = io::monotone_from_json(io::monotone_to_json(mm));
    CHECK(mm2.map == mm.map);
    CHECK(mm2.source.same_as(mm.source));

    const ConceptLattice l = clg(a);
    const ConceptLattice l2 = io::lattice_from_json(io::lattice_to_json(l));
    CHECK(l2.concepts == l.concepts);
    CHECK(l2.iota_elem == l.iota_elem);
    CHECK(l2.tau_elem == l.tau_elem);

    const Infomorphism f = gen_infomorphism(rng, a, 1, 1);
    const Infomorphism f2 = io::infomorphism_from_json(io::infomorphism_to_json(f));
    CHECK(f2.inst_table() == f.inst_table());
    CHECK(f2.typ_table() == f.typ_table());

    const Quartet q = check_quartet(g, g, GaloisConnection::identity(g.source()),
                                    GaloisConnection::identity(g.target()));
    const Quartet q2 = io::quartet_from_json(io::quartet_to_json(q));
    CHECK(q2.g1.same_up_to_equiv(q.g1));
    CHECK(q2.b.same_up_to_equiv(q.b));
  }
}

TEST_CASE("verify battery") {
  const VerifyReport k1 = verify_context(k1_context());
  CHECK(k1.all_pass());

  const VerifyReport empty = verify_context(Classification({}, {}, {}));
  CHECK(empty.all_pass());

  // deterministic for a fixed seed
  const VerifyReport r1 = verify_seeded(7, 10);
  const VerifyReport r2 = verify_seeded(7, 10);
  CHECK(r1.all_pass());
  CHECK(r1.to_text() == r2.to_text());
}
