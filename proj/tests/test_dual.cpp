#include "doctest.h"
#include "gk1/dual_lemmas.hpp"

using namespace gk1;

namespace {

FamilyPtr taft31() { return make_family(make_taft(3, 1, CycloContext::get(3), 1)); }
FamilyPtr liu22() { return make_family(make_liu(2, 2, CycloContext::get(2), 1)); }
FamilyPtr d31() { return make_family(make_d(3, 1, CycloContext::get(6), 1)); }

}  // namespace

TEST_CASE("generator values on basis elements") {
  auto t = taft31();
  const int m = t->taft().m();
  Cyclo z = t->taft().xi;
  for (long j = 0; j < 3; ++j) CHECK(eval(taft_psi(t, Cyclo(5L)), Mono{0, 0, j, 2 * m}) == Cyclo(25L));
  CHECK(eval(taft_omega(t), Mono{0, 0, 2, 0}) == z * z);
  CHECK(dual_antipode_eval(taft_omega(t), Mono{0, 0, 1, 0}) == pow_int(z, -1));

  auto l = liu22();
  CHECK(eval(dual_e2(l), Mono{0, 1, 3, 0}) == Cyclo(2L));

  auto d = d31();
  const DParams& p = d->dmx();
  for (int i = 0; i < 3; ++i)
    for (long j = -1; j <= 1; ++j) {
      CHECK(eval(dual_e1(d), Mono{1, i, j, 1}) == p.xi / (Cyclo(1L) - pow_int(p.gamma(), -1)));
      CHECK(dual_antipode_eval(dual_e2(d), Mono{1, i, j, 0}) ==
            Cyclo(ratio(i, 3)) + Cyclo(ratio(j, 3)) + Cyclo(ratio(1 - 3, 6)));
    }
  CHECK(eval(d_chi(d, Cyclo(2L), Cyclo(2L)), Mono{0, 1, 1, 1}).is_zero());
}

TEST_CASE("counit functional and convolution unit") {
  auto d = d31();
  auto basis = d->basis(1);
  DualFunctional e = counit_functional(d);
  for (const Mono& b : basis) CHECK(eval(e, b) == d->h.counit_b(b));
  DualFunctional f = dual_e2(d);
  CHECK(functionals_agree(e * f, f, basis));
  CHECK(functionals_agree(f * e, f, basis));
  for (const Mono& b : d->basis(0))
    for (const Mono& c : d->basis(0)) CHECK(dual_pair_eval(e, b, c) == eval(e, b) * eval(e, c));
}

TEST_CASE("Taft group-likes multiply additively") {
  auto t = taft31();
  const int m = t->taft().m();
  DualFunctional a = taft_psi(t, Cyclo(2L)), b = taft_psi(t, Cyclo(ratio(1, 3)));
  CHECK(eval(a * b, Mono{0, 0, 0, m}) == Cyclo(ratio(7, 3)));
  CHECK(functionals_agree(a * b, taft_psi(t, Cyclo(ratio(7, 3))), t->basis(3 * m)));
}

TEST_CASE("mismatching functionals produce a witness") {
  auto t = taft31();
  std::string w;
  CHECK_FALSE(functionals_agree(dual_e1(t), Cyclo(2L) * dual_e1(t), t->basis(2), &w));
  CHECK_FALSE(w.empty());
}

TEST_CASE("pair constraint violations are rejected") {
  CHECK_THROWS_AS(liu_psi(liu22(), Cyclo(2L), Cyclo(3L)), ParamError);
  CHECK_THROWS_AS(d_zeta(d31(), Cyclo(2L), Cyclo(3L)), ParamError);
  auto d11 = make_family(make_d(1, 1, CycloContext::get(2), 1));
  CHECK_THROWS_AS(dual_e1(d11), ParamError);
}

TEST_CASE("identity groups pass on the reference families") {
  DualLemmaBounds b;
  b.bound = 2 * taft31()->taft().m();
  b.samples = {Cyclo(0L), Cyclo(1L), Cyclo(2L), taft31()->taft().xi};
  CHECK(verify_dual_lemma(taft31(), "taft-relations", b).passed());
  CHECK(verify_dual_lemma(taft31(), "taft-structure", b).passed());
  CHECK(verify_dual_lemmas(liu22(), {}).passed());
  DualLemmaBounds bd;
  bd.bound = 2;
  bd.pair_bound = 1;
  bd.samples = {Cyclo(1L), Cyclo(2L), d31()->dmx().xi};
  CHECK(verify_dual_lemma(d31(), "dmx-coproduct-group", bd).passed());
  CHECK_THROWS_AS(verify_dual_lemma(d31(), "taft-relations", bd), ParamError);
  CHECK(is_dual_lemma_id("dihedral"));
  CHECK_FALSE(is_dual_lemma_id("L3.1"));
}

TEST_CASE("theta product identity") {
  // Oracle value: m = 3, d = 1, alpha = 2 gives 1 - 2^3 = -7.
  DParams p = make_d(3, 1, CycloContext::get(6), 1);
  Cyclo prod(1L);
  for (const Cyclo& t : theta_values(p, Cyclo(2L))) prod *= t;
  CHECK(prod == Cyclo(-7L));
  auto tv = theta_values(p, Cyclo(1L));
  CHECK(tv[0].is_zero());
}
