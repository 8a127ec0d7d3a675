#include "doctest.h"
#include "gk1/pairing.hpp"

using namespace gk1;

namespace {

PresentedPtr pres(FamilyPtr f) { return std::make_shared<PresentedAlgebra>(f); }
PresentedPtr taft31() { return pres(make_family(make_taft(3, 1, CycloContext::get(3), 1))); }
PresentedPtr liu22() { return pres(make_family(make_liu(2, 2, CycloContext::get(2), 1))); }
PresentedPtr d31() { return pres(make_family(make_d(3, 1, CycloContext::get(6), 1))); }
PresentedPtr dihedral() { return pres(make_dihedral_family(CycloContext::get(2))); }

}  // namespace

TEST_CASE("commutation rules") {
  auto p = liu22();
  PElement f1 = p->letter_element(p->f1()), f2 = p->letter_element(p->f2());
  CHECK(p->mul(f1, f2) == p->mul(f2, f1) + Cyclo(ratio(1, 2)) * f1);

  auto t = taft31();
  PElement tf1 = t->letter_element(t->f1());
  CHECK(t->power(tf1, t->order()).empty());
  CHECK_FALSE(t->power(tf1, t->order() - 1).empty());
}

TEST_CASE("counit and antipode of generators") {
  auto t = taft31();
  CHECK(t->counit(t->word(t->taft_group(Cyclo(3L), 0))).is_one());
  CHECK(t->counit(t->letter_element(t->f2())).is_zero());
  PElement f2 = t->letter_element(t->f2());
  CHECK(t->antipode(f2) == Cyclo(-1L) * f2);

  auto l = liu22();
  Cyclo a(4L), b(4L);
  CHECK(l->antipode(l->word(l->liu_group(a, b))) == l->word(l->liu_group(a.inverse(), b.inverse())));

  auto d = d31();
  NFWord x = d->d_group(1, Cyclo(2L), Cyclo(2L));
  x.s = 1;
  CHECK(d->counit(x).is_zero());
  Cyclo al(2L);
  CHECK(d->antipode(d->word(d->d_group(0, al, al))) == d->word(d->d_group(0, al.inverse(), al.inverse())));
}

TEST_CASE("word text round trip") {
  for (auto p : {taft31(), liu22(), d31()}) {
    for (const NFWord& w : hbullet_basis(*p, 1)) {
      const std::string text = p->format(w);
      CHECK(p->parse(text) == w);
    }
  }
  auto t = taft31();
  CHECK(t->format(t->taft_group(Cyclo(2L), 1)).rfind("Psi(", 0) == 0);
}

TEST_CASE("group constraints are enforced") {
  CHECK_THROWS_AS(liu22()->liu_group(Cyclo(2L), Cyclo(3L)), ParamError);
  CHECK_THROWS_AS(d31()->d_group(0, Cyclo(2L), Cyclo(3L)), ParamError);
  CHECK_THROWS_AS(dihedral()->f1(), ParamError);
}

TEST_CASE("theta is multiplicative on sample words") {
  auto d = d31();
  auto words = hbullet_basis(*d, 0);
  auto basis = d->family()->basis(1);
  for (size_t a = 0; a < words.size(); a += 5)
    for (size_t b = 0; b < words.size(); b += 7) {
      DualFunctional lhs = d->theta(d->mul(words[a], words[b]));
      DualFunctional rhs = d->theta(words[a]) * d->theta(words[b]);
      CHECK(functionals_agree(lhs, rhs, basis));
    }
}

TEST_CASE("theta and presented-axiom suites") {
  ThetaBounds tb;
  tb.word_length = 2;
  CHECK(verify_theta(taft31(), tb).passed());
  CHECK(verify_theta(dihedral(), tb).passed());
  CHECK(verify_presented_axioms(liu22(), 1).passed());
}
