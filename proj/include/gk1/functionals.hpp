#pragma once

#include <functional>
#include <memory>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "gk1/families.hpp"

namespace gk1 {

// A concrete Hopf algebra together with its parameters. Structure maps are
// memoized once here and shared by every functional built on the family.
struct HopfFamily {
  std::string tag;  // taft | liu | dmx | dihedral
  std::variant<TaftParams, LiuParams, DParams> params;
  HopfStructure h;
  CtxPtr ctx;

  const TaftParams& taft() const { return std::get<TaftParams>(params); }
  const LiuParams& liu() const { return std::get<LiuParams>(params); }
  const DParams& dmx() const { return std::get<DParams>(params); }
  bool is_d_like() const { return tag == "dmx" || tag == "dihedral"; }

  // Truncated basis: l <= bound for Taft, |j| <= bound otherwise.
  std::vector<Mono> basis(int bound) const;
  // Root q of the divided powers of E1 (xi^v, gamma, gamma).
  Cyclo e1_root() const;
  // Nilpotency order of E1 (m for Taft and D, n for Liu).
  int e1_order() const;
  Cyclo one() const { return Cyclo(ctx, Rational(1)); }
};

using FamilyPtr = std::shared_ptr<const HopfFamily>;

FamilyPtr make_family(const TaftParams& p);
FamilyPtr make_family(const LiuParams& p);
FamilyPtr make_family(const DParams& p);
FamilyPtr make_dihedral_family(const CtxPtr& ctx);

// Evaluable linear functional on H. Values are cached per basis index.
class DualFunctional {
 public:
  using Evaluator = std::function<Cyclo(const Mono&)>;

  DualFunctional() = default;
  DualFunctional(FamilyPtr fam, std::string label, Evaluator f);

  Cyclo operator()(const Mono& b) const;
  Cyclo eval_elem(const Element& e) const;
  const FamilyPtr& family() const { return fam_; }
  const std::string& label() const;
  bool valid() const { return node_ != nullptr; }

 private:
  struct Node;
  FamilyPtr fam_;
  std::shared_ptr<Node> node_;
};

class FamilyMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Convolution product <fg, h> = sum <f, h1><g, h2>.
DualFunctional convolve(const DualFunctional& f, const DualFunctional& g);
DualFunctional operator*(const DualFunctional& f, const DualFunctional& g);
DualFunctional operator+(const DualFunctional& f, const DualFunctional& g);
DualFunctional operator-(const DualFunctional& f, const DualFunctional& g);
DualFunctional operator*(const Cyclo& c, const DualFunctional& f);
DualFunctional power(const DualFunctional& f, int k);
DualFunctional counit_functional(const FamilyPtr& fam);
DualFunctional zero_functional(const FamilyPtr& fam);

Cyclo eval(const DualFunctional& f, const Mono& b);
// <f, b b'>
Cyclo dual_pair_eval(const DualFunctional& f, const Mono& b, const Mono& bp);
// <f, S(b)>
Cyclo dual_antipode_eval(const DualFunctional& f, const Mono& b);

// Generator request. Kinds: psi, omega, E1, E2 (Taft: psi uses a = lambda);
// psi, E1, E2 (Liu: psi uses (a, b) = (alpha, beta)); zeta, chi, E1, E2 (D);
// zeta, chi, E2 (dihedral, a = lambda).
struct DualGenSpec {
  std::string kind;
  Cyclo a;
  Cyclo b;
};

// Throws ParamError on a violated pair constraint or an unavailable generator.
DualFunctional make_generator(const FamilyPtr& fam, const DualGenSpec& spec);

// Named constructors for the common generators.
DualFunctional taft_psi(const FamilyPtr& fam, const Cyclo& lambda);
DualFunctional taft_omega(const FamilyPtr& fam);
DualFunctional liu_psi(const FamilyPtr& fam, const Cyclo& alpha, const Cyclo& beta);
DualFunctional d_zeta(const FamilyPtr& fam, const Cyclo& alpha, const Cyclo& beta);
DualFunctional d_chi(const FamilyPtr& fam, const Cyclo& alpha, const Cyclo& beta);
DualFunctional dual_e1(const FamilyPtr& fam);
DualFunctional dual_e2(const FamilyPtr& fam);
// zeta_{1,gamma^e} + xi^e chi_{1,gamma^e}; valid for every integer e.
DualFunctional d_grouplike(const FamilyPtr& fam, long e);
// E1^k / k!_q and E2^s / s!.
DualFunctional e1_divided(const FamilyPtr& fam, int k);
DualFunctional e2_divided(const FamilyPtr& fam, int s);

// Finite sum of c * (f (x) g) evaluated on pairs of basis indices.
class FunctionalTensor {
 public:
  struct Term {
    Cyclo c;
    DualFunctional left;
    DualFunctional right;
  };

  FunctionalTensor() = default;
  FunctionalTensor(const DualFunctional& f, const DualFunctional& g, const Cyclo& c = Cyclo(1L));

  FunctionalTensor& operator+=(const FunctionalTensor& o);
  friend FunctionalTensor operator+(FunctionalTensor a, const FunctionalTensor& b) {
    return a += b;
  }
  friend FunctionalTensor operator*(const Cyclo& c, const FunctionalTensor& t);
  // (f (x) g)(f' (x) g') = f f' (x) g g'
  friend FunctionalTensor operator*(const FunctionalTensor& a, const FunctionalTensor& b);

  Cyclo operator()(const Mono& b, const Mono& bp) const;
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

// True when f(b) == g(b) on every listed index; the first mismatch is
// described in witness.
bool functionals_agree(const DualFunctional& f, const DualFunctional& g,
                       const std::vector<Mono>& basis, std::string* witness = nullptr);

}  // namespace gk1
