#pragma once

#include <string>

#include <json.hpp>

#include "conlat/classification.hpp"
#include "conlat/concept_lattice.hpp"
#include "conlat/galois.hpp"
#include "conlat/quartet.hpp"

namespace conlat::io {

// Burmeister CXT: "B", name line, |G|, |M|, object names, attribute names,
// then |G| rows over {'.','X'}. LF or CRLF.
Classification parse_cxt(const std::string& text);

// Canonical form: LF endings, empty name line.
std::string emit_cxt(const Classification& a);

// Hasse diagram of the concept order with reduced labels: an instance appears
// at its iota concept, a type at its tau concept.
std::string emit_dot(const ConceptLattice& l);

nlohmann::json preorder_to_json(const Preorder& p);
Preorder preorder_from_json(const nlohmann::json& j);

nlohmann::json monotone_to_json(const MonotoneMap& f);
MonotoneMap monotone_from_json(const nlohmann::json& j);

nlohmann::json galois_to_json(const GaloisConnection& g);
GaloisConnection galois_from_json(const nlohmann::json& j);

nlohmann::json context_to_json(const Classification& a);
Classification context_from_json(const nlohmann::json& j);

nlohmann::json infomorphism_to_json(const Infomorphism& f);
Infomorphism infomorphism_from_json(const nlohmann::json& j);

nlohmann::json quartet_to_json(const Quartet& q);
Quartet quartet_from_json(const nlohmann::json& j);

nlohmann::json polar_to_json(const PolarFactorization& p);

nlohmann::json lattice_to_json(const ConceptLattice& l);
ConceptLattice lattice_from_json(const nlohmann::json& j);

nlohmann::json concepts_to_json(const ConceptLattice& l);

nlohmann::json theories_to_json(const TheoryLattice& t);

}  // namespace conlat::io
