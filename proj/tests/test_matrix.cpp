#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gk1/matrix.hpp"

using namespace gk1;

namespace {

ExactMatrix mat(std::vector<std::vector<Cyclo>> rows) { return ExactMatrix::from_rows(rows); }

// Leibniz expansion, used as a reference for small sizes.
Cyclo leibniz_det(const ExactMatrix& m) {
  std::vector<int> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Cyclo total;
  do {
    int inv = 0;
    for (size_t a = 0; a < p.size(); ++a)
      for (size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
    Cyclo term(inv % 2 ? -1L : 1L);
    for (int r = 0; r < m.rows(); ++r) term *= m.at(r, p[r]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

ExactMatrix sample(std::mt19937& rng, int r, int c, const CtxPtr& ctx) {
  std::uniform_int_distribution<int> pick(-2, 2);
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m.at(i, j) = Cyclo(static_cast<long>(pick(rng))) + Cyclo(static_cast<long>(pick(rng) / 2)) * Cyclo::zeta(ctx, 1);
  return m;
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(det(ExactMatrix::identity(3)).is_one());
  CHECK(det(mat({{1, 2}, {1, Cyclo(ratio(1, 2))}})) == Cyclo(ratio(-3, 2)));
  auto c3 = CycloContext::get(3);
  ExactMatrix v(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) v.at(a, b) = Cyclo::zeta(c3, a * b);
  Cyclo dv = det(v);
  CHECK(!dv.is_zero());
  // Squared Vandermonde on the cube roots of unity is the discriminant of x^3 - 1.
  CHECK(dv * dv == Cyclo(-27L));
}

TEST_CASE("rank examples") {
  CHECK(rank(ExactMatrix(2, 3)) == 0);
  CHECK(rank(ExactMatrix::identity(4)) == 4);
  CHECK(rank(mat({{1, 1}, {2, 2}})) == 1);
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(11);
  auto c5 = CycloContext::get(5);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 6; ++t) {
      ExactMatrix m = sample(rng, n, n, c5);
      CHECK(det(m) == leibniz_det(m));
      CHECK((rank(m) == n) == !det(m).is_zero());
    }
}

TEST_CASE("rank is preserved by transpose and bounded by products") {
  std::mt19937 rng(5);
  auto c4 = CycloContext::get(4);
  for (int t = 0; t < 10; ++t) {
    ExactMatrix a = sample(rng, 3, 4, c4), b = sample(rng, 4, 2, c4);
    CHECK(rank(a) == rank(a.transpose()));
    CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
  }
}

TEST_CASE("Kronecker products") {
  ExactMatrix a = mat({{1, 1}, {0, 1}}), b = mat({{2, 0}, {0, 3}});
  ExactMatrix k = kronecker(a, b);
  CHECK(k.rows() == 4);
  CHECK(!det(k).is_zero());
  // det(A (x) B) = det(A)^2 det(B)^2 for 2 x 2 factors.
  CHECK(det(k) == Cyclo(36L));
  ExactMatrix s = mat({{1, 1}, {1, 1}});
  CHECK(rank(kronecker(a, s)) < 4);
}

TEST_CASE("shifted matrix") {
  ExactMatrix m = build_shifted_matrix(1, Cyclo(2L), 0, 0, 1);
  CHECK(m == mat({{1, 2}, {1, Cyclo(ratio(1, 2))}}));
  for (const Rational& a : {Rational(0), Rational(3), ratio(1, 2)}) {
    ExactMatrix one = build_shifted_matrix(1, Cyclo(1L), a, 0, 1);
    CHECK(one == mat({{1, 1}, {1, 1}}));
    CHECK(det(one).is_zero());
  }
  CHECK(!det(build_shifted_matrix(2, Cyclo(3L), ratio(1, 2), 1, 2)).is_zero());
  CHECK(det(build_shifted_matrix(3, Cyclo(-1L), 0, 0, 1)).is_zero());
}

TEST_CASE("block criterion") {
  ExactMatrix i2 = ExactMatrix::identity(2);
  auto r = verify_block_criterion(i2, {i2, i2});
  CHECK(r.invertible);
  CHECK(r.consistent);

  auto r2 = verify_block_criterion(mat({{1, 1}, {0, 1}}), {i2, mat({{1, 1}, {1, 1}})});
  CHECK_FALSE(r2.invertible);
  CHECK_FALSE(r2.all_blocks_invertible);
  CHECK(r2.consistent);

  auto r3 = verify_block_criterion(mat({{2, 0}, {0, 3}}), {mat({{1, 2}, {3, 4}}), mat({{0, 1}, {5, 7}})});
  CHECK(r3.invertible);
  CHECK(r3.consistent);
}

TEST_CASE("csv output") {
  ExactMatrix m = mat({{1, Cyclo(ratio(1, 2))}});
  CHECK(m.to_csv().find(',') != std::string::npos);
}

TEST_CASE("block-wise rank and determinant agree with direct elimination") {
  std::mt19937 rng(3);
  auto c3 = CycloContext::get(3);
  std::uniform_int_distribution<int> keep(0, 3);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 6, cols = t % 3 == 0 ? n + 1 : n;
    ExactMatrix m = sample(rng, n, cols, c3);
    // Sparsify so that several components appear.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < cols; ++j)
        if (keep(rng) != 0) m.at(i, j) = Cyclo();
    RankDet rd = rank_and_det(m);
    CHECK(rd.rank == rank(m));
    if (n == cols) CHECK(rd.det == det(m));
  }
  // A permuted block-diagonal matrix splits into its blocks.
  ExactMatrix p = mat({{0, 2, 0}, {1, 0, 0}, {0, 0, 3}});
  RankDet rp = rank_and_det(p);
  CHECK(rp.components == 3);
  CHECK(rp.det == Cyclo(-6L));
}
