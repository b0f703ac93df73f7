#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conlat/classification.hpp"
#include "conlat/order.hpp"

namespace conlat {

/// splitmix64; deterministic across platforms, which keeps seeded reports
/// byte-identical.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  bool chance(int num, int den) { return below(den) < static_cast<std::uint64_t>(num); }

private:
  std::uint64_t state_;
};

std::vector<std::string> gen_labels(const std::string& prefix, int n);

Classification gen_context(Rng& rng, int max_instances, int max_types);

SetFunction gen_function(Rng& rng, int max_source, int max_target);

// Target context built around random maps so the fundamental condition holds
// by construction.
Infomorphism gen_infomorphism(Rng& rng, const Classification& source,
                              int extra_instances, int extra_types);

struct CandidateInfomorphism {
  Classification source;
  Classification target;
  IdxVec inst_map;
  IdxVec typ_map;
  bool intended_valid;
};

// Valid candidates mixed with single-entry mutations of them.
CandidateInfomorphism gen_candidate(Rng& rng);

}  // namespace conlat
