#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gk1/functionals.hpp"
#include "gk1/report.hpp"

namespace gk1 {

// Normal-form word of a presented dual algebra: group part, then F2^s F1^l.
//   Taft:  Psi(a) Omega^j F2^s F1^l      (a = lambda, b unused, 0 <= j < n)
//   Liu:   Psi(a,b) F2^s F1^l            (a^omega = b^n)
//   D:     Z(a,b) or X(a,b) F2^s F1^l    (sector 0 = Z, 1 = X; a^omega = b^m)
// In every family 0 <= l < nilpotency order of F1.
struct NFWord {
  int sector = 0;
  Cyclo a;
  Cyclo b;
  long j = 0;
  int s = 0;
  int l = 0;

  NFWord group_part() const {
    NFWord g = *this;
    g.s = 0;
    g.l = 0;
    return g;
  }
};

bool operator==(const NFWord& x, const NFWord& y);
bool operator<(const NFWord& x, const NFWord& y);

using PElement = LinComb<NFWord>;
using PTensor = LinComb<std::pair<NFWord, NFWord>>;
using PTensor3 = LinComb<std::tuple<NFWord, NFWord, NFWord>>;

// One generator of the presentation; group letters carry their NFWord group part.
struct Letter {
  enum Kind { kGroup = 0, kF2 = 1, kF1 = 2 };
  Kind kind = kGroup;
  NFWord group;
};

bool operator<(const Letter& x, const Letter& y);
bool operator==(const Letter& x, const Letter& y);

enum class RewriteOrder { kLeftmost, kRightmost, kRandom };

class PresentedAlgebra {
 public:
  explicit PresentedAlgebra(FamilyPtr fam);

  const FamilyPtr& family() const { return fam_; }
  // Nilpotency order of F1 (Taft m, Liu n, D m).
  int order() const { return order_; }
  bool has_f1() const;

  PElement unit() const;
  PElement word(const NFWord& w) const { return PElement(w, Cyclo(1L)); }

  // Group words.
  NFWord taft_group(const Cyclo& lambda, long j) const;
  NFWord liu_group(const Cyclo& alpha, const Cyclo& beta) const;
  NFWord d_group(int sector, const Cyclo& alpha, const Cyclo& beta) const;

  // Generator letters; throws ParamError on invalid input.
  Letter psi(const Cyclo& lambda) const;                    // Taft
  Letter omega() const;                                     // Taft
  Letter psi(const Cyclo& alpha, const Cyclo& beta) const;  // Liu
  Letter zeta(const Cyclo& alpha, const Cyclo& beta) const;  // D
  Letter chi(const Cyclo& alpha, const Cyclo& beta) const;   // D
  Letter f1() const;
  Letter f2() const;
  PElement letter_element(const Letter& x) const;

  // Product in normal form by closed formulas.
  PElement mul(const NFWord& x, const NFWord& y) const;
  PElement mul(const PElement& x, const PElement& y) const;
  PElement power(const PElement& x, int k) const;
  PElement product(const std::vector<Letter>& word) const;

  // Normal form by one-step letter rewriting. The seed drives kRandom.
  PElement rewrite(const std::vector<Letter>& word, RewriteOrder order, unsigned seed = 0) const;

  // Named elements.
  PElement f1_divided(int k) const;  // F1^k / k!_q
  PElement grouplike(long e) const;  // D: (Z_{1,gamma} + xi X_{1,gamma})^e
  PElement sigma(int c) const;       // Taft idempotent sigma_c

  PTensor comul(const NFWord& w) const;
  PTensor comul(const PElement& x) const;
  Cyclo counit(const NFWord& w) const;
  Cyclo counit(const PElement& x) const;
  PElement antipode(const NFWord& w) const;
  PElement antipode(const PElement& x) const;

  PTensor tensor(const PElement& x, const PElement& y, const Cyclo& c = Cyclo(1L)) const;
  PTensor tmul(const PTensor& x, const PTensor& y) const;

  // Generator-wise map onto dual functionals.
  DualFunctional theta(const NFWord& w) const;
  DualFunctional theta(const PElement& x) const;
  DualFunctional theta(const Letter& x) const;

  std::string format(const NFWord& w) const;
  std::string format(const PElement& x) const;
  std::string format(const Letter& x) const;
  NFWord parse(const std::string& text) const;

 private:
  FamilyPtr fam_;
  int order_ = 1;
  Cyclo one_;

  Cyclo twist(const NFWord& g) const;  // F1 g = twist(g) g F1
  PElement group_mul(const NFWord& g, const NFWord& h) const;
  PTensor group_comul(const NFWord& g) const;
  PElement group_antipode(const NFWord& g) const;
  PTensor f1_comul() const;
  PTensor f2_comul() const;
  PElement f1_antipode() const;
  PElement f2_antipode() const;
  NFWord canon(NFWord w) const;

  struct Caches;
  std::shared_ptr<Caches> caches_;
};

using PresentedPtr = std::shared_ptr<const PresentedAlgebra>;

// Default generator alphabet used by the theta suite.
std::vector<Letter> default_alphabet(const PresentedAlgebra& p);

struct ThetaBounds {
  int word_length = -1;  // -1: 3 for Taft and Liu, 2 for D
  int bound = -1;        // single-index basis bound
  int pair_bound = -1;   // grid bound for coproduct checks
  std::vector<Letter> alphabet;  // empty: default_alphabet
};

// Theta respects products, coproducts, counit and antipode on all words up to
// the length bound; rewriting is confluent under three reduction orders.
Report verify_theta(const PresentedPtr& p, const ThetaBounds& bounds);

// Hopf axioms of the presented algebra on normal-form words, the
// commutation F1^l F2 rule, and the sigma / theta constant identities.
Report verify_presented_axioms(const PresentedPtr& p, int s_max = 1);

}  // namespace gk1
