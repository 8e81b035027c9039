#pragma once

#include <string>
#include <vector>

#include "schub/hecke.hpp"
#include "schub/weyl.hpp"

namespace schub {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Golden worked examples (structure constants, restrictions, recursion).
std::vector<CaseResult> verify_examples();

// Squares and braid relations for one operator kind over all generator
// pairs of the group. Sextuple relations run only when stretch_g2 is set;
// term_budget bounds partial-product growth (0 = unlimited).
std::vector<CaseResult> verify_braid(const WeylGroup& g,
                                     const std::string& label, OpKind kind,
                                     bool stretch_g2, size_t term_budget);

// Route equivalence: subword formula vs localization vs recursion in H on
// all triples; K bases vs localization (all triples for groups of order
// <= 8, otherwise `sampled` seeded random triples).
std::vector<CaseResult> verify_oracle(const WeylGroup& g,
                                      const std::string& label, uint64_t seed,
                                      int sampled, int threads);

// Woods-Hole pairings: dual-basis duality for both sheaf families, the
// subset-sum identity, and the sampled d-circle reconstruction, over all
// words up to max_len letters.
std::vector<CaseResult> verify_woodshole(const WeylGroup& g,
                                         const std::string& label,
                                         uint64_t seed, int samples,
                                         int max_len, int threads);

}  // namespace schub
