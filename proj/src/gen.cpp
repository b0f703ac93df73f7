#include "conlat/gen.hpp"

#include <algorithm>

namespace conlat {

std::vector<std::string> gen_labels(const std::string& prefix, int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Classification gen_context(Rng& rng, int max_instances, int max_types) {
  const int ni = rng.range(1, max_instances);
  const int nt = rng.range(1, max_types);
  const int density = rng.range(1, 9);  // out of 10
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx x = 0; x < ni; ++x)
    for (Idx y = 0; y < nt; ++y)
      if (rng.chance(density, 10)) pairs.emplace_back(x, y);
  return Classification(gen_labels("x", ni), gen_labels("y", nt), pairs);
}

SetFunction gen_function(Rng& rng, int max_source, int max_target) {
  const int ns = rng.range(1, max_source);
  const int nt = rng.range(1, max_target);
  IdxVec map(ns);
  for (Idx a = 0; a < ns; ++a) map[a] = static_cast<Idx>(rng.below(nt));
  return SetFunction(gen_labels("s", ns), gen_labels("t", nt), std::move(map));
}

Infomorphism gen_infomorphism(Rng& rng, const Classification& source,
                              int extra_instances, int extra_types) {
  const int ni1 = source.instance_count();
  const int nt1 = source.type_count();
  if (ni1 == 0)
    fail(Err::BadInput, "source needs at least one instance");
  const int ni2 = ni1 + rng.range(0, extra_instances);
  const int nt2 = nt1 + rng.range(0, extra_types);

  // backward instance map is arbitrary; forward type map injective so the
  // induced incidence is well defined
  IdxVec inst_map(ni2), typ_map(nt1);
  for (Idx x2 = 0; x2 < ni2; ++x2)
    inst_map[x2] = static_cast<Idx>(rng.below(ni1));
  IdxVec cols(nt2);
  for (Idx y = 0; y < nt2; ++y) cols[y] = y;
  for (int i = nt2 - 1; i > 0; --i)
    std::swap(cols[i], cols[rng.below(i + 1)]);
  for (Idx y1 = 0; y1 < nt1; ++y1) typ_map[y1] = cols[y1];

  std::vector<std::pair<Idx, Idx>> pairs;
  std::vector<bool> mapped(nt2, false);
  for (Idx y1 = 0; y1 < nt1; ++y1) mapped[typ_map[y1]] = true;
  for (Idx x2 = 0; x2 < ni2; ++x2)
    for (Idx y2 = 0; y2 < nt2; ++y2) {
      bool incident;
      if (mapped[y2]) {
        Idx y1 = 0;
        while (typ_map[y1] != y2) ++y1;
        incident = source.incident(inst_map[x2], y1);
      } else {
        incident = rng.chance(1, 2);
      }
      if (incident) pairs.emplace_back(x2, y2);
    }
  Classification target(gen_labels("u", ni2), gen_labels("v", nt2), pairs);
  return Infomorphism(source, std::move(target), std::move(inst_map),
                      std::move(typ_map));
}

CandidateInfomorphism gen_candidate(Rng& rng) {
  Classification src = gen_context(rng, 4, 4);
  Infomorphism f = gen_infomorphism(rng, src, 2, 2);
  CandidateInfomorphism c{f.source(), f.target(), f.inst_table(), f.typ_table(),
                          true};
  if (rng.chance(1, 2)) {
    // perturb one table entry; may or may not stay valid
    if (rng.chance(1, 2) && !c.inst_map.empty()) {
      Idx& slot = c.inst_map[rng.below(c.inst_map.size())];
      slot = static_cast<Idx>(rng.below(c.source.instance_count()));
    } else if (!c.typ_map.empty()) {
      Idx& slot = c.typ_map[rng.below(c.typ_map.size())];
      slot = static_cast<Idx>(rng.below(c.target.type_count()));
    }
    c.intended_valid = false;
  }
  return c;
}

}  // namespace conlat
