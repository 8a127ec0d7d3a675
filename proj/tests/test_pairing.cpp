#include "doctest.h"
#include "gk1/pairing.hpp"

using namespace gk1;

namespace {

PresentedPtr pres(FamilyPtr f) { return std::make_shared<PresentedAlgebra>(f); }
PresentedPtr taft31() { return pres(make_family(make_taft(3, 1, CycloContext::get(3), 1))); }
PresentedPtr liu22(int field = 2) { return pres(make_family(make_liu(2, 2, CycloContext::get(field), field / 2))); }
PresentedPtr d31() { return pres(make_family(make_d(3, 1, CycloContext::get(6), 1))); }
PresentedPtr dihedral() { return pres(make_dihedral_family(CycloContext::get(2))); }

}  // namespace

TEST_CASE("H-bullet spanning words") {
  CHECK(hbullet_basis(*dihedral(), 1).size() == 4);
  CHECK(hbullet_basis(*taft31(), 0).size() == 9);
  CHECK(hbullet_basis(*d31(), 0).size() == 18);
  for (const NFWord& w : hbullet_basis(*d31(), 1)) CHECK(in_hbullet(*d31(), w));
  auto d = d31();
  CHECK_FALSE(in_hbullet(*d, d->d_group(0, Cyclo(2L), Cyclo(2L))));
}

TEST_CASE("pairing values") {
  // Dihedral: <Z F2^e, g^s> = s^e with 0^0 = 1.
  auto p = dihedral();
  NFWord z = p->d_group(0, Cyclo(1L), Cyclo(1L));
  for (int e = 0; e <= 3; ++e)
    for (long s = -2; s <= 2; ++s) {
      NFWord w = z;
      w.s = e;
      CHECK(pair(*p, w, Mono{0, 0, s, 0}) == pow_int(Cyclo(s), e));
    }
  // <1, b> = eps(b)
  auto d = d31();
  for (const Mono& b : d->family()->basis(1))
    CHECK(pair(*d, d->unit(), basis_element(b)) == d->family()->h.counit_b(b));
}

TEST_CASE("D pairing closed form on the y-sector") {
  auto d = d31();
  const DParams& p = d->family()->dmx();
  // <G^k' F2^s' F1^l', x^i g^j y^l> = l!_gamma delta ξ^(2jk') (i/omega + j/m)^s'
  PElement g = d->grouplike(1);
  PElement f1 = d->letter_element(d->f1()), f2 = d->letter_element(d->f2());
  for (int kp = 0; kp < 6; kp += 1)
    for (int sp = 0; sp <= 2; ++sp)
      for (int lp = 0; lp < 3; ++lp) {
        PElement w = d->mul(d->mul(d->power(g, kp), d->power(f2, sp)), d->power(f1, lp));
        for (int i = 0; i < 3; ++i)
          for (long j = -1; j <= 1; ++j)
            for (int l = 0; l < 3; ++l) {
              Cyclo want;
              if (l == lp)
                want = q_factorial(l, p.gamma()) * pow_int(p.xi, 2 * j * kp) *
                       pow_int(Cyclo(ratio(i, 3) + ratio(j, 3)), sp);
              CHECK(pair(*d, w, basis_element(Mono{0, i, j, l})) == want);
            }
      }
}

TEST_CASE("pairing axioms") {
  PairingBounds b;
  for (auto p : {dihedral(), taft31(), liu22(), d31()}) {
    Report r = verify_pairing_axioms(p, b);
    CHECK(r.passed());
    CHECK(r.cases_total >= 50);
  }
}

// |det| values from tests/oracles/oracles.py.
TEST_CASE("truncated Gram matrices have full rank") {
  GramResult g = gram_rank(dihedral(), 1);
  CHECK(g.full_rank);
  CHECK(g.matrix.rows() == 6);
  CHECK((g.det == Cyclo(32L) || g.det == Cyclo(-32L)));
  CHECK(g.closed_form_mismatches == 0);

  GramResult t = gram_rank(taft31(), 1);
  CHECK(t.full_rank);
  CHECK(t.matrix.rows() == 18);
  CHECK((t.det == Cyclo(19683L) || t.det == Cyclo(-19683L)));

  CHECK(gram_rank(liu22(), 1).full_rank);
}

TEST_CASE("Taft proof matrix factors as a Kronecker product") {
  auto t = taft31();
  for (long lam : {0L, 5L}) {
    ProofMatrixResult r = proof_matrix(t, {"P3.3", 1, Cyclo(lam), {}, {}});
    CHECK(r.invertible);
    CHECK(r.report.passed());
    CHECK(r.report.extra["kronecker_matches"] == true);
    // The other two factors are unitriangular and the identity, so det is a power of det(V).
    auto c3 = CycloContext::get(3);
    ExactMatrix v(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) v.at(a, b) = Cyclo::zeta(c3, a * b);
    Cyclo dv = pow_int(det(v), r.matrix.rows() / 3);
    CHECK((r.det == dv || r.det == -dv));
  }
}

TEST_CASE("Liu and D proof matrices") {
  // lambda = 3 needs sqrt(3) = zeta12 + zeta12^11.
  auto l = liu22(12);
  auto c12 = CycloContext::get(12);
  Cyclo s3 = Cyclo::zeta(c12, 1) + Cyclo::zeta(c12, 11);
  CHECK(s3 * s3 == Cyclo(3L));
  ProofMatrixResult r = proof_matrix(l, {"P4.3", 2, {}, s3, s3});
  CHECK(r.invertible);
  CHECK(r.report.passed());

  auto d = d31();
  CHECK(proof_matrix(d, {"P5.6-case1", 1, {}, Cyclo(2L), {}}).invertible);
  CHECK(proof_matrix(d, {"P5.6-case2", 1, {}, {}, {}}).invertible);
  CHECK(proof_matrix(d, {"P5.6-case3", 1, {}, {}, {}}).invertible);
  CHECK_THROWS_AS(proof_matrix(d, {"P3.3", 1, Cyclo(5L), {}, {}}), ParamError);
  // alpha^omega = 1 falls outside case 1.
  CHECK_THROWS_AS(proof_matrix(d, {"P5.6-case1", 1, {}, Cyclo(1L), {}}), ParamError);
}
