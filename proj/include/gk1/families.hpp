#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gk1/hopf.hpp"

namespace gk1 {

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Infinite-dimensional Taft algebra: g^n = 1, xg = xi g x.
struct TaftParams {
  int n = 1;
  int v = 0;
  Cyclo xi;  // primitive n-th root of unity, bound to the working field
  int m() const;
  CtxPtr ctx() const { return xi.context(); }
};

// Generalized Liu algebra: x central grouplike, y^n = 1 - x^omega = 1 - g^n.
struct LiuParams {
  int n = 1;
  int omega = 1;
  Cyclo gamma;  // primitive n-th root of unity
  CtxPtr ctx() const { return gamma.context(); }
};

// Two-sector family D(m, d, xi) with omega = m d and gamma = xi^2.
struct DParams {
  int m = 1;
  int d = 1;
  Cyclo xi;  // primitive 2m-th root of unity
  int omega() const { return m * d; }
  Cyclo gamma() const { return xi * xi; }
  CtxPtr ctx() const { return xi.context(); }
};

// Each validator throws ParamError naming the violated constraint.
void validate(const TaftParams& p);
void validate(const LiuParams& p);
void validate(const DParams& p);

// Convenience constructors: the root is zeta_N^t in the given context.
TaftParams make_taft(int n, int v, const CtxPtr& ctx, long t);
LiuParams make_liu(int n, int omega, const CtxPtr& ctx, long t);
DParams make_d(int m, int d, const CtxPtr& ctx, long t);
// D(1, 1, -1), the group algebra of the infinite dihedral group.
DParams make_dihedral(const CtxPtr& ctx);

HopfStructure taft_structure(const TaftParams& p);
HopfStructure liu_structure(const LiuParams& p);
HopfStructure d_structure(const DParams& p);
// Same structure as d_structure(make_dihedral(ctx)) but tagged "dihedral".
HopfStructure dihedral_structure(const CtxPtr& ctx);

// Generators of the dihedral alias: the rotation g and the reflection x = u_0.
Element dihedral_g();
Element dihedral_x();

// Reduced monomials. Exponents may lie outside the canonical ranges; the
// result is rewritten using x^omega = g^n (resp. g^m) and y^n = 1 - g^n.
Element taft_mono(const TaftParams& p, long j, int l);
Element liu_mono(const LiuParams& p, long i, long j, int l);
Element d_mono(const DParams& p, int sector, long i, long j, int l);

// phi_start phi_{start+1} ... phi_{start+count-1}, phi_i = 1 - gamma^{-i-1} x^d.
Element phi_product(const DParams& p, int start, int count);
// u_i u_j reduced to the basis.
Element u_product(const DParams& p, int i, int j);

// Truncated basis slices used by the test harness.
std::vector<Mono> taft_basis(const TaftParams& p, int l_max);
std::vector<Mono> liu_basis(const LiuParams& p, int j_max);
std::vector<Mono> d_basis(const DParams& p, int j_max);

std::string format_taft(const Mono& b);
std::string format_liu(const Mono& b);
std::string format_d(const Mono& b);

}  // namespace gk1
