#pragma once

#include <string>
#include <vector>

#include "gk1/dual_lemmas.hpp"
#include "gk1/pairing.hpp"
#include "gk1/presented.hpp"
#include "gk1/report.hpp"

namespace gk1 {

inline constexpr const char* kVersion = "0.1.0";

// Everything needed to configure one family and the suites run on it.
// Unset integer bounds (-1) select per-family defaults.
struct RunConfig {
  std::string family;  // taft | liu | dmx | dihedral
  int n = -1;
  int v = 0;
  int omega = -1;
  int m = -1;
  int d = -1;
  std::string xi;  // "zetaN^t"; empty picks zeta_k^1 for the root order k
  int field = 0;   // order of the working cyclotomic field; 0 uses the root's N

  int l_max = -1;        // Taft basis slice for hopf-axioms
  int j_max = -1;        // Liu / D basis slice for hopf-axioms
  int dual_bound = -1;   // single-index bound for dual-lemmas and theta
  int pair_bound = -1;   // grid bound for coproduct checks
  int word_length = -1;  // theta word length
  int s_max = 1;         // F2-degree for presented axioms and pairing words
  int gram_n = 1;        // Gram truncation N
  int r = -1;            // proof-matrix ideal exponent; -1: 1 (P4.3: 2)
  std::vector<std::string> lambdas;  // exact scalar strings
  std::string alpha;
  std::string beta;
  std::vector<std::string> suites;
  bool timing = true;

  nlohmann::json to_json() const;
};

struct FamilySetup {
  FamilyPtr fam;
  PresentedPtr pres;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> suite_ids();
bool is_suite_id(const std::string& id);

// Parses "zetaN^t" into (N, t). Throws UsageError.
std::pair<int, long> parse_root(const std::string& text);

// Builds and validates the family. Throws ParamError or UsageError.
FamilySetup build_family(const RunConfig& cfg);

// Runs one named suite; a suite may produce several reports.
std::vector<Report> run_suite(const std::string& id, const FamilySetup& setup, const RunConfig& cfg);

// Family-independent suites.
Report matrix_lemma_suite();
Report scalar_suite(const std::vector<DParams>& theta_params);

// Nilpotency of F1 / E1 and the D identities E1^m = (1-gamma)^-m chi_{1,1}
// and zeta_{1,1} + chi_{1,1} = eps, in both the presented algebra and the
// functionals.
Report nilpotency_report(const FamilySetup& setup, int bound);

// The whole JSON document: {config, suites, version, timestamp}.
nlohmann::json make_document(const RunConfig& cfg, const std::vector<Report>& reports);

}  // namespace gk1
