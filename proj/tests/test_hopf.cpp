#include "doctest.h"
#include "gk1/families.hpp"

using namespace gk1;

namespace {

Element mono(int sector, int i, long j, int l) { return basis_element(Mono{sector, i, j, l}); }

Tensor2 tens(const Element& a, const Element& b, const Cyclo& c = Cyclo(1L)) {
  Tensor2 t;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) t.add({ka, kb}, c * ca * cb);
  return t;
}

}  // namespace

TEST_CASE("parameter validation") {
  auto c6 = CycloContext::get(6);
  CHECK_THROWS_WITH_AS(validate(make_d(2, 1, CycloContext::get(4), 1)), "(1+m)d must be even", ParamError);
  CHECK_THROWS_AS(make_taft(3, 3, CycloContext::get(3), 1), ParamError);
  CHECK_THROWS_AS(make_taft(3, 1, CycloContext::get(3), 3), ParamError);
  CHECK_NOTHROW(make_d(3, 1, c6, 1));
  CHECK_NOTHROW(make_liu(2, 2, CycloContext::get(2), 1));
}

TEST_CASE("Taft structure constants") {
  auto c3 = CycloContext::get(3);
  TaftParams p = make_taft(3, 1, c3, 1);
  HopfStructure h = taft_structure(p);
  Cyclo z = p.xi;
  CHECK(lin_mul(h, h.unit, mono(0, 0, 1, 1)) == mono(0, 0, 1, 1));
  // (g x)(g^2 x) = xi^2 x^2
  CHECK(lin_mul(h, mono(0, 0, 1, 1), mono(0, 0, 2, 1)) == z * z * mono(0, 0, 0, 2));
  CHECK(lin_comul(h, h.unit) == tens(h.unit, h.unit));
  CHECK(lin_comul(h, mono(0, 0, 0, 1)) == tens(h.unit, mono(0, 0, 0, 1)) + tens(mono(0, 0, 0, 1), mono(0, 0, 1, 0)));
  Tensor2 want = tens(h.unit, mono(0, 0, 0, 2)) + tens(mono(0, 0, 0, 1), mono(0, 0, 1, 1), Cyclo(1L) + z) +
                 tens(mono(0, 0, 0, 2), mono(0, 0, 2, 0));
  CHECK(lin_comul(h, mono(0, 0, 0, 2)) == want);
  CHECK(lin_antipode(h, h.unit) == h.unit);
  CHECK(lin_antipode(h, mono(0, 0, 1, 0)) == mono(0, 0, 2, 0));
  CHECK(lin_antipode(h, mono(0, 0, 0, 1)) == -pow_int(z, -1) * mono(0, 0, 2, 1));
}

TEST_CASE("Liu structure constants") {
  LiuParams p = make_liu(2, 2, CycloContext::get(2), 1);
  HopfStructure h = liu_structure(p);
  Element y = mono(0, 0, 0, 1), x = mono(0, 1, 0, 0);
  CHECK(lin_mul(h, y, y) == h.unit - mono(0, 0, 2, 0));
  CHECK(lin_mul(h, x, x) == mono(0, 0, 2, 0));
  CHECK(lin_comul(h, y) == tens(h.unit, y) + tens(y, mono(0, 0, 1, 0)));
  // The middle term vanishes because the q-binomial (2, 1) at q = -1 is zero.
  CHECK(lin_comul(h, lin_mul(h, y, y)) ==
        lin_comul(h, h.unit) - lin_comul(h, mono(0, 0, 2, 0)));
}

TEST_CASE("D structure constants") {
  auto c6 = CycloContext::get(6);
  DParams p = make_d(3, 1, c6, 1);
  HopfStructure h = d_structure(p);
  Cyclo g = p.gamma();
  CHECK(phi_product(p, 0, 0) == h.unit);
  CHECK(phi_product(p, 0, 1) == h.unit - pow_int(g, -1) * mono(0, 1, 0, 0));
  // (1 - gamma^-1 x)(1 - gamma^-2 x) = 1 + x + x^2 at gamma = zeta3.
  CHECK(phi_product(p, 0, 2) == h.unit + mono(0, 1, 0, 0) + mono(0, 2, 0, 0));
  // S(x^i g^j y) = -gamma^(-j-1) x^(-i) g^(-j-1) y
  for (int i = 0; i < 3; ++i)
    for (long j = -2; j <= 2; ++j)
      CHECK(lin_antipode(h, mono(0, i, j, 1)) == -pow_int(g, -j - 1) * d_mono(p, 0, -i, -j - 1, 1));
  // y u_0 = phi_0 u_1
  CHECK(lin_mul(h, mono(0, 0, 0, 1), mono(1, 0, 0, 0)) == lin_mul(h, phi_product(p, 0, 1), mono(1, 0, 0, 1)));
  // Delta(u_0) = sum_j gamma^(-j^2) u_j (x) x^(-jd) g^j u_(-j mod m)
  Tensor2 want;
  for (int j = 0; j < 3; ++j)
    want += tens(mono(1, 0, 0, j), d_mono(p, 1, -j, j, (3 - j) % 3), pow_int(g, -j * j));
  CHECK(lin_comul(h, mono(1, 0, 0, 0)) == want);
}

TEST_CASE("dihedral relations") {
  DParams p = make_dihedral(CycloContext::get(2));
  HopfStructure h = d_structure(p);
  Element u = mono(1, 0, 0, 0), g = mono(0, 0, 1, 0);
  CHECK(lin_mul(h, u, u) == h.unit);
  // u g u = g^-1
  CHECK(lin_mul(h, lin_mul(h, u, g), u) == mono(0, 0, -1, 0));
}

TEST_CASE("Hopf axioms hold on small slices") {
  auto c6 = CycloContext::get(6);
  DParams p = make_d(3, 1, c6, 1);
  HopfStructure h = memoize(d_structure(p));
  auto basis = d_basis(p, 1);
  std::vector<std::pair<Mono, Mono>> pairs;
  for (size_t a = 0; a < basis.size(); a += 3)
    for (size_t b = 0; b < basis.size(); b += 5) pairs.emplace_back(basis[a], basis[b]);
  Report r = verify_hopf_axioms(h, basis, pairs);
  CHECK(r.passed());
  CHECK(r.cases_total > 0);
  CHECK(verify_associativity(h, d_basis(p, 0)).passed());
}

TEST_CASE("a wrong antipode is detected") {
  auto c3 = CycloContext::get(3);
  TaftParams p = make_taft(3, 1, c3, 1);
  HopfStructure h = taft_structure(p);
  auto good = h.antipode_b;
  h.antipode_b = [good](const Mono& b) { return b.l == 1 ? Cyclo(-1L) * good(b) : good(b); };
  auto basis = taft_basis(p, 2);
  Report r = verify_hopf_axioms(h, basis, {});
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("a wrong coproduct coefficient is detected") {
  LiuParams p = make_liu(2, 2, CycloContext::get(2), 1);
  HopfStructure h = liu_structure(p);
  auto good = h.comul_b;
  h.comul_b = [good](const Mono& b) {
    Tensor2 t = good(b);
    if (b.l == 1) t = Cyclo(2L) * t;
    return t;
  };
  CHECK_FALSE(verify_hopf_axioms(h, liu_basis(p, 1), {}).passed());
}
