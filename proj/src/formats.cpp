#include "conlat/formats.hpp"

#include <algorithm>
#include <sstream>

namespace conlat::io {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(std::move(cur));
  }
  return lines;
}

int parse_count(const std::vector<std::string>& lines, std::size_t at) {
  if (at >= lines.size())
    fail(Err::CountMismatch, "missing count line", {{"line", at + 1}});
  const std::string& s = lines[at];
  if (s.empty() || s.size() > 7 ||
      s.find_first_not_of("0123456789") != std::string::npos)
    fail(Err::CountMismatch, "count is not a reasonable non-negative integer",
         {{"line", at + 1}, {"text", s}});
  return std::stoi(s);
}

std::string quote_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

IdxVec idxvec_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) fail(Err::BadInput, std::string(what) + " must be an array");
  IdxVec v;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      fail(Err::BadInput, std::string(what) + " entries must be integers");
    v.push_back(e.get<Idx>());
  }
  return v;
}

std::vector<std::string> labels_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) fail(Err::BadInput, std::string(what) + " must be an array");
  std::vector<std::string> v;
  for (const auto& e : j) {
    if (!e.is_string())
      fail(Err::BadInput, std::string(what) + " entries must be strings");
    v.push_back(e.get<std::string>());
  }
  return v;
}

std::vector<std::pair<Idx, Idx>> pairs_from_json(const nlohmann::json& j,
                                                 const char* what) {
  if (!j.is_array()) fail(Err::BadInput, std::string(what) + " must be an array");
  std::vector<std::pair<Idx, Idx>> v;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail(Err::BadInput, std::string(what) + " entries must be index pairs");
    v.emplace_back(e[0].get<Idx>(), e[1].get<Idx>());
  }
  return v;
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Err::BadInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Classification parse_cxt(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "B")
    fail(Err::BadHeader, "first line must be 'B'",
         {{"got", lines.empty() ? "" : lines[0]}});
  if (lines.size() < 4) fail(Err::CountMismatch, "missing header lines");
  const int ng = parse_count(lines, 2);
  const int nm = parse_count(lines, 3);
  const std::size_t rows_at = 4 + ng + nm;
  if (lines.size() < rows_at + ng)
    fail(Err::CountMismatch, "file shorter than declared sizes",
         {{"expected_lines", rows_at + ng}, {"got", lines.size()}});

  std::vector<std::string> objects(lines.begin() + 4, lines.begin() + 4 + ng);
  std::vector<std::string> attributes(lines.begin() + 4 + ng,
                                      lines.begin() + 4 + ng + nm);
  std::vector<std::pair<Idx, Idx>> incidence;
  for (int g = 0; g < ng; ++g) {
    const std::string& row = lines[rows_at + g];
    if (static_cast<int>(row.size()) != nm)
      fail(Err::BadRowLength, "row length differs from attribute count",
           {{"line", rows_at + g + 1}, {"expected", nm}, {"got", row.size()}});
    for (int m = 0; m < nm; ++m) {
      if (row[m] == 'X')
        incidence.emplace_back(g, m);
      else if (row[m] != '.')
        fail(Err::BadChar, "row cells must be '.' or 'X'",
             {{"line", rows_at + g + 1}, {"col", m + 1}, {"got", std::string(1, row[m])}});
    }
  }
  return Classification(std::move(objects), std::move(attributes), incidence);
}

std::string emit_cxt(const Classification& a) {
  std::ostringstream out;
  out << "B\n\n" << a.instance_count() << "\n" << a.type_count() << "\n";
  for (const auto& g : a.instances()) out << g << "\n";
  for (const auto& m : a.types()) out << m << "\n";
  for (Idx x = 0; x < a.instance_count(); ++x) {
    for (Idx y = 0; y < a.type_count(); ++y) out << (a.incident(x, y) ? 'X' : '.');
    out << "\n";
  }
  return out.str();
}

std::string emit_dot(const ConceptLattice& l) {
  const int k = l.size();
  std::ostringstream out;
  out << "digraph concept_lattice {\n  rankdir=BT;\n";
  for (Idx c = 0; c < k; ++c) {
    std::string insts, typs;
    for (Idx x = 0; x < l.context.instance_count(); ++x)
      if (l.iota_elem[x] == c) {
        if (!insts.empty()) insts += ",";
        insts += l.context.instances()[x];
      }
    for (Idx y = 0; y < l.context.type_count(); ++y)
      if (l.tau_elem[y] == c) {
        if (!typs.empty()) typs += ",";
        typs += l.context.types()[y];
      }
    out << "  n" << c << " [label=\"" << quote_dot(insts + " / " + typs) << "\"];\n";
  }
  // cover edges only
  for (Idx i = 0; i < k; ++i)
    for (Idx j = 0; j < k; ++j) {
      if (i == j || !l.order.leq(i, j)) continue;
      bool cover = true;
      for (Idx m = 0; m < k && cover; ++m)
        if (m != i && m != j && l.order.leq(i, m) && l.order.leq(m, j)) cover = false;
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

nlohmann::json preorder_to_json(const Preorder& p) {
  nlohmann::json leq = nlohmann::json::array();
  for (auto [a, b] : p.relation_pairs()) leq.push_back({a, b});
  return {{"elements", p.labels()}, {"leq", leq}};
}

Preorder preorder_from_json(const nlohmann::json& j) {
  return Preorder::make(labels_from_json(field(j, "elements"), "elements"),
                        pairs_from_json(field(j, "leq"), "leq"), false);
}

nlohmann::json monotone_to_json(const MonotoneMap& f) {
  return {{"source", preorder_to_json(f.source)},
          {"target", preorder_to_json(f.target)},
          {"map", f.map}};
}

MonotoneMap monotone_from_json(const nlohmann::json& j) {
  return MonotoneMap(preorder_from_json(field(j, "source")),
                     preorder_from_json(field(j, "target")),
                     idxvec_from_json(field(j, "map"), "map"));
}

nlohmann::json galois_to_json(const GaloisConnection& g) {
  return {{"source", preorder_to_json(g.source())},
          {"target", preorder_to_json(g.target())},
          {"left", g.left_table()},
          {"right", g.right_table()}};
}

GaloisConnection galois_from_json(const nlohmann::json& j) {
  return GaloisConnection(preorder_from_json(field(j, "source")),
                          preorder_from_json(field(j, "target")),
                          idxvec_from_json(field(j, "left"), "left"),
                          idxvec_from_json(field(j, "right"), "right"));
}

nlohmann::json context_to_json(const Classification& a) {
  nlohmann::json inc = nlohmann::json::array();
  for (auto [x, y] : a.incidence_pairs()) inc.push_back({x, y});
  return {{"instances", a.instances()}, {"types", a.types()}, {"incidence", inc}};
}

Classification context_from_json(const nlohmann::json& j) {
  return Classification(labels_from_json(field(j, "instances"), "instances"),
                        labels_from_json(field(j, "types"), "types"),
                        pairs_from_json(field(j, "incidence"), "incidence"));
}

nlohmann::json infomorphism_to_json(const Infomorphism& f) {
  return {{"source", context_to_json(f.source())},
          {"target", context_to_json(f.target())},
          {"inst_map", f.inst_table()},
          {"typ_map", f.typ_table()}};
}

Infomorphism infomorphism_from_json(const nlohmann::json& j) {
  return Infomorphism(context_from_json(field(j, "source")),
                      context_from_json(field(j, "target")),
                      idxvec_from_json(field(j, "inst_map"), "inst_map"),
                      idxvec_from_json(field(j, "typ_map"), "typ_map"));
}

nlohmann::json quartet_to_json(const Quartet& q) {
  return {{"g1", galois_to_json(q.g1)},
          {"g2", galois_to_json(q.g2)},
          {"a", galois_to_json(q.a)},
          {"b", galois_to_json(q.b)}};
}

Quartet quartet_from_json(const nlohmann::json& j) {
  return check_quartet(
      galois_from_json(field(j, "g1")), galois_from_json(field(j, "g2")),
      galois_from_json(field(j, "a")), galois_from_json(field(j, "b")));
}

nlohmann::json polar_to_json(const PolarFactorization& p) {
  nlohmann::json bipoles = nlohmann::json::array();
  for (auto [a, b] : p.bipoles) bipoles.push_back({a, b});
  return {{"bipoles", bipoles},
          {"axis", preorder_to_json(p.axis)},
          {"refl", galois_to_json(p.refl)},
          {"corefl", galois_to_json(p.corefl)}};
}

nlohmann::json lattice_to_json(const ConceptLattice& l) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : l.concepts)
    cs.push_back({{"extent", c.extent}, {"intent", c.intent}});
  nlohmann::json order = nlohmann::json::array();
  for (auto [a, b] : l.order.relation_pairs()) order.push_back({a, b});
  return {{"context", context_to_json(l.context)},
          {"concepts", cs},
          {"order", order},
          {"iota", l.iota_elem},
          {"tau", l.tau_elem}};
}

ConceptLattice lattice_from_json(const nlohmann::json& j) {
  ConceptLattice l;
  l.context = context_from_json(field(j, "context"));
  const auto& cs = field(j, "concepts");
  if (!cs.is_array()) fail(Err::BadInput, "concepts must be an array");
  std::vector<std::string> labels;
  for (const auto& c : cs) {
    FormalConcept fc{idxvec_from_json(field(c, "extent"), "extent"),
                     idxvec_from_json(field(c, "intent"), "intent")};
    labels.push_back("c" + std::to_string(l.concepts.size()));
    l.concepts.push_back(std::move(fc));
  }
  l.order = Preorder::make(labels, pairs_from_json(field(j, "order"), "order"), false);
  l.iota_elem = idxvec_from_json(field(j, "iota"), "iota");
  l.tau_elem = idxvec_from_json(field(j, "tau"), "tau");
  if (static_cast<int>(l.iota_elem.size()) != l.context.instance_count() ||
      static_cast<int>(l.tau_elem.size()) != l.context.type_count())
    fail(Err::BadInput, "iota/tau table sizes do not match the context");
  for (Idx c : l.iota_elem)
    if (c < 0 || c >= l.size()) fail(Err::BadInput, "iota entry out of range");
  for (Idx c : l.tau_elem)
    if (c < 0 || c >= l.size()) fail(Err::BadInput, "tau entry out of range");
  return l;
}

nlohmann::json concepts_to_json(const ConceptLattice& l) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : l.concepts) {
    nlohmann::json ext = nlohmann::json::array(), intent = nlohmann::json::array();
    for (Idx x : c.extent) ext.push_back(l.context.instances()[x]);
    for (Idx y : c.intent) intent.push_back(l.context.types()[y]);
    cs.push_back({{"extent", ext}, {"intent", intent}});
  }
  return {{"count", l.size()}, {"concepts", cs}};
}

nlohmann::json theories_to_json(const TheoryLattice& t) {
  return {{"types", t.types}, {"closure", t.closure}};
}

}  // namespace conlat::io
