#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gk1/functionals.hpp"
#include "gk1/report.hpp"

namespace gk1 {

// Identity groups checked on the finite dual. Each group belongs to one family:
//   taft-relations, taft-structure        (Taft)
//   liu-relations, liu-structure          (Liu)
//   dmx-relations, dmx-coproduct-e, dmx-coproduct-group, dmx-antipode   (D)
//   dihedral                              (dihedral alias of D(1,1,-1))
struct DualLemmaBounds {
  int bound = -1;       // basis bound for single-index checks; -1 picks a default
  int pair_bound = -1;  // basis bound for the (b, b') grid of coproduct checks
  // Taft and dihedral: lambda values. D: alpha values. Liu: seeds t giving
  // the pairs (t^n, t^omega gamma^k).
  std::vector<Cyclo> samples;
  // Explicit Liu pairs, used in addition to the seeded ones.
  std::vector<std::pair<Cyclo, Cyclo>> pairs;
};

std::vector<std::string> dual_lemma_ids(const HopfFamily& fam);
bool is_dual_lemma_id(const std::string& id);

// Default samples per family (see DualLemmaBounds::samples).
std::vector<Cyclo> default_dual_samples(const HopfFamily& fam);

// Throws ParamError when the id does not belong to the family.
Report verify_dual_lemma(const FamilyPtr& fam, const std::string& id, const DualLemmaBounds& bounds);

// All identity groups of the family merged into one report.
Report verify_dual_lemmas(const FamilyPtr& fam, const DualLemmaBounds& bounds);

// theta_0 = m (1 - a^d), theta_k = (1 - gamma^k a^d) / (1 - gamma^k) for 1 <= k < m.
std::vector<Cyclo> theta_values(const DParams& p, const Cyclo& alpha);

}  // namespace gk1
