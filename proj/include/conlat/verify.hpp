#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conlat/classification.hpp"

namespace conlat {

struct LawResult {
  std::string id;
  bool pass = false;
  std::string detail;  // witness or counts; stable text
};

struct VerifyReport {
  std::vector<LawResult> laws;

  bool all_pass() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }
  // one line per law plus a summary; deterministic
  std::string to_text() const;
};

// Runs the whole law battery against one context (its derivation connection,
// concept lattice, unit/counit infomorphisms and derived quartets).
VerifyReport verify_context(const Classification& a);

// Seeded batch: `cases` random contexts plus fixed degenerate ones.
VerifyReport verify_seeded(std::uint64_t seed, int cases);

}  // namespace conlat
