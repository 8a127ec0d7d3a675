#include "gk1/families.hpp"

#include <memory>
#include <numeric>

namespace gk1 {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long mod(long a, long b) { return a - b * floor_div(a, b); }

// Powers root^k for k modulo the multiplicative order of root.
class RootPowers {
 public:
  RootPowers(const Cyclo& root, int order) : order_(order) {
    Cyclo p = Cyclo(root.context(), Rational(1));
    for (int k = 0; k < order; ++k) {
      pow_.push_back(p);
      p *= root;
    }
  }
  const Cyclo& operator()(long k) const { return pow_[mod(k, order_)]; }

 private:
  int order_;
  std::vector<Cyclo> pow_;
};

bool is_primitive_root(const Cyclo& r, int order) {
  if (r.is_zero()) return false;
  Cyclo p = r;
  for (int t = 1; t < order; ++t) {
    if (p.is_one()) return false;
    p *= r;
  }
  return p.is_one();
}

Tensor2 tensor_of(const Element& a, const Element& b, const Cyclo& c) {
  Tensor2 t;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) t.add({ka, kb}, c * ca * cb);
  return t;
}

std::string pw(const char* sym, long e) { return std::string(sym) + "^" + std::to_string(e); }

}  // namespace

int TaftParams::m() const { return n / std::gcd(n, v == 0 ? n : v); }

void validate(const TaftParams& p) {
  if (p.n < 1) throw ParamError("n must be positive");
  if (p.v < 0 || p.v > p.n - 1) throw ParamError("v must satisfy 0 <= v <= n-1");
  if (!p.xi.bound()) throw ParamError("xi must be bound to a cyclotomic context");
  if (!is_primitive_root(p.xi, p.n)) throw ParamError("xi must be a primitive n-th root of unity");
}

void validate(const LiuParams& p) {
  if (p.n < 1 || p.omega < 1) throw ParamError("n and omega must be positive");
  if (!p.gamma.bound()) throw ParamError("gamma must be bound to a cyclotomic context");
  if (!is_primitive_root(p.gamma, p.n))
    throw ParamError("gamma must be a primitive n-th root of unity");
}

void validate(const DParams& p) {
  if (p.m < 1 || p.d < 1) throw ParamError("m and d must be positive");
  if (((1 + p.m) * p.d) % 2 != 0) throw ParamError("(1+m)d must be even");
  if (!p.xi.bound()) throw ParamError("xi must be bound to a cyclotomic context");
  if (!is_primitive_root(p.xi, 2 * p.m))
    throw ParamError("xi must be a primitive 2m-th root of unity");
}

TaftParams make_taft(int n, int v, const CtxPtr& ctx, long t) {
  TaftParams p{n, v, Cyclo::zeta(ctx, t)};
  validate(p);
  return p;
}

LiuParams make_liu(int n, int omega, const CtxPtr& ctx, long t) {
  LiuParams p{n, omega, Cyclo::zeta(ctx, t)};
  validate(p);
  return p;
}

DParams make_d(int m, int d, const CtxPtr& ctx, long t) {
  DParams p{m, d, Cyclo::zeta(ctx, t)};
  validate(p);
  return p;
}

DParams make_dihedral(const CtxPtr& ctx) {
  DParams p{1, 1, Cyclo(ctx, Rational(-1))};
  validate(p);
  return p;
}

std::string format_taft(const Mono& b) { return pw("g", b.j) + " " + pw("x", b.l); }

std::string format_liu(const Mono& b) {
  return pw("x", b.i) + " " + pw("g", b.j) + " " + pw("y", b.l);
}

std::string format_d(const Mono& b) {
  std::string tail = b.sector == kSectorY ? pw("y", b.l) : "u_" + std::to_string(b.l);
  return pw("x", b.i) + " " + pw("g", b.j) + " " + tail;
}

// ---------------------------------------------------------------- Taft

Element taft_mono(const TaftParams& p, long j, int l) {
  return Element(Mono{0, 0, mod(j, p.n), l}, Cyclo(p.ctx(), Rational(1)));
}

HopfStructure taft_structure(const TaftParams& p) {
  validate(p);
  auto xi = std::make_shared<RootPowers>(p.xi, p.n);
  const CtxPtr ctx = p.ctx();
  const int n = p.n;
  const int v = p.v;
  const Cyclo one(ctx, Rational(1));

  HopfStructure h;
  h.family = "taft";
  h.params = {{"n", p.n}, {"v", p.v}, {"xi", p.xi.to_string()}};
  h.ctx = ctx;
  h.unit = Element(Mono{}, one);
  h.format = format_taft;

  h.mul_b = [xi, n](const Mono& a, const Mono& b) {
    return Element(Mono{0, 0, mod(a.j + b.j, n), a.l + b.l}, (*xi)(b.j * a.l));
  };
  Cyclo q = (*xi)(v);
  h.comul_b = [q, n, v, one](const Mono& a) {
    Tensor2 t;
    for (int k = 0; k <= a.l; ++k)
      t.add({Mono{0, 0, a.j, k}, Mono{0, 0, mod(a.j + static_cast<long>(k) * v, n), a.l - k}},
            q_binomial(a.l, k, q) * one);
    return t;
  };
  h.counit_b = [one](const Mono& a) { return a.l == 0 ? one : Cyclo(); };

  // S(g^j x^l) = S(x)^l S(g)^j with S(g) = g^{n-1}, S(x) = -xi^{-v} g^{n-v} x.
  HopfStructure plain = h;
  Element s_x(Mono{0, 0, mod(n - v, n), 1}, -(*xi)(-v));
  h.antipode_b = [plain, s_x, n, one](const Mono& a) {
    Element r(Mono{}, one);
    for (int k = 0; k < a.l; ++k) r = lin_mul(plain, r, s_x);
    return lin_mul(plain, r, Element(Mono{0, 0, mod(-a.j, n), 0}, one));
  };
  return h;
}

std::vector<Mono> taft_basis(const TaftParams& p, int l_max) {
  std::vector<Mono> out;
  for (int j = 0; j < p.n; ++j)
    for (int l = 0; l <= l_max; ++l) out.push_back(Mono{0, 0, j, l});
  return out;
}

// ---------------------------------------------------------------- Liu

Element liu_mono(const LiuParams& p, long i, long j, int l) {
  const Cyclo one(p.ctx(), Rational(1));
  long q = floor_div(i, p.omega);
  int r = static_cast<int>(i - q * p.omega);
  long jj = j + q * p.n;
  Element e;
  if (l < p.n) {
    e.add(Mono{0, r, jj, l}, one);
  } else {
    // y^l = y^{l-n} (1 - g^n) and g^n commutes with y.
    Element rest = liu_mono(p, r, jj, l - p.n);
    e += rest;
    e -= liu_mono(p, r, jj + p.n, l - p.n);
  }
  return e;
}

HopfStructure liu_structure(const LiuParams& p) {
  validate(p);
  auto gm = std::make_shared<RootPowers>(p.gamma, p.n);
  const CtxPtr ctx = p.ctx();
  const Cyclo one(ctx, Rational(1));

  HopfStructure h;
  h.family = "liu";
  h.params = {{"n", p.n}, {"omega", p.omega}, {"gamma", p.gamma.to_string()}};
  h.ctx = ctx;
  h.unit = Element(Mono{}, one);
  h.format = format_liu;

  h.mul_b = [p, gm](const Mono& a, const Mono& b) {
    return (*gm)(b.j * a.l) * liu_mono(p, a.i + b.i, a.j + b.j, a.l + b.l);
  };
  Cyclo gamma = p.gamma;
  h.comul_b = [gamma, one](const Mono& a) {
    Tensor2 t;
    for (int k = 0; k <= a.l; ++k)
      t.add({Mono{0, a.i, a.j, k}, Mono{0, a.i, a.j + k, a.l - k}}, q_binomial(a.l, k, gamma) * one);
    return t;
  };
  h.counit_b = [one](const Mono& a) { return a.l == 0 ? one : Cyclo(); };

  // S(x^i g^j y^l) = S(y)^l g^{-j} x^{-i} with S(y) = -gamma^{-1} g^{-1} y.
  HopfStructure plain = h;
  Element s_y = -(*gm)(-1) * liu_mono(p, 0, -1, 1);
  h.antipode_b = [plain, p, s_y, one](const Mono& a) {
    Element r(Mono{}, one);
    for (int k = 0; k < a.l; ++k) r = lin_mul(plain, r, s_y);
    return lin_mul(plain, r, liu_mono(p, -a.i, -a.j, 0));
  };
  return h;
}

std::vector<Mono> liu_basis(const LiuParams& p, int j_max) {
  std::vector<Mono> out;
  for (int i = 0; i < p.omega; ++i)
    for (long j = -j_max; j <= j_max; ++j)
      for (int l = 0; l < p.n; ++l) out.push_back(Mono{0, i, j, l});
  return out;
}

// ---------------------------------------------------------------- D(m, d, xi)

Element d_mono(const DParams& p, int sector, long i, long j, int l) {
  const Cyclo one(p.ctx(), Rational(1));
  const int w = p.omega();
  long q = floor_div(i, w);
  int r = static_cast<int>(i - q * w);
  long jj = j + q * p.m;
  Element e;
  if (sector == kSectorU) {
    e.add(Mono{kSectorU, r, jj, static_cast<int>(mod(l, p.m))}, one);
  } else if (l < p.m) {
    e.add(Mono{kSectorY, r, jj, l}, one);
  } else {
    e += d_mono(p, kSectorY, r, jj, l - p.m);
    e -= d_mono(p, kSectorY, r, jj + p.m, l - p.m);
  }
  return e;
}

namespace {

// Polynomial in x with integer exponents, kept unreduced until placed.
using XPoly = std::map<long, Cyclo>;

XPoly phi_chain(const DParams& p, const RootPowers& gm, int start, int count) {
  const Cyclo one(p.ctx(), Rational(1));
  XPoly poly{{0, one}};
  for (int t = 0; t < count; ++t) {
    Cyclo c = -gm(-(start + t) - 1);
    XPoly next;
    for (const auto& [e, v] : poly) {
      next[e] += v;
      next[e + p.d] += v * c;
    }
    poly.clear();
    for (auto& [e, v] : next)
      if (!v.is_zero()) poly.emplace(e, v);
  }
  return poly;
}

// coef * x^a * poly * g^b * (y^l or u_l), reduced.
Element place(const DParams& p, const Cyclo& coef, const XPoly& poly, long a, long b, int sector,
              int l) {
  Element e;
  for (const auto& [ex, v] : poly) e.add_scaled(d_mono(p, sector, a + ex, b, l), coef * v);
  return e;
}

int chain_count(int m, int i, int j) { return static_cast<int>(mod(m - 1 - i - j, m)); }

// (-1)^j xi^{-j} gamma^{j(j+1)/2} / m
Cyclo u_coefficient(const DParams& p, const RootPowers& xi, int j) {
  Cyclo c = xi(-j) * xi(static_cast<long>(j) * (j + 1));
  if (j % 2) c = -c;
  return c * Cyclo(ratio(1, p.m));
}

// x^A g^B u_i u_j, with the x and g prefix already known.
Element uu_with_prefix(const DParams& p, const RootPowers& xi, const RootPowers& gm, int i, int j,
                       long a, long b, const Cyclo& coef) {
  int r = static_cast<int>(mod(i + j, p.m));
  XPoly chain = phi_chain(p, gm, i, chain_count(p.m, i, j));
  // ... y^r g = gamma^r g y^r
  Cyclo c = coef * u_coefficient(p, xi, j) * gm(r);
  return place(p, c, chain, a - (1 + p.m) * p.d / 2, b + 1, kSectorY, r);
}

}  // namespace

Element phi_product(const DParams& p, int start, int count) {
  validate(p);
  RootPowers gm(p.gamma(), p.m);
  return place(p, Cyclo(p.ctx(), Rational(1)), phi_chain(p, gm, start, count), 0, 0, kSectorY, 0);
}

Element u_product(const DParams& p, int i, int j) {
  validate(p);
  RootPowers xi(p.xi, 2 * p.m);
  RootPowers gm(p.gamma(), p.m);
  return uu_with_prefix(p, xi, gm, i, j, 0, 0, Cyclo(p.ctx(), Rational(1)));
}

HopfStructure d_structure(const DParams& p) {
  validate(p);
  auto xi = std::make_shared<RootPowers>(p.xi, 2 * p.m);
  auto gm = std::make_shared<RootPowers>(p.gamma(), p.m);
  const CtxPtr ctx = p.ctx();
  const Cyclo one(ctx, Rational(1));
  const int m = p.m;
  const int d = p.d;

  HopfStructure h;
  h.family = "dmx";
  h.params = {{"m", p.m}, {"d", p.d}, {"xi", p.xi.to_string()}};
  h.ctx = ctx;
  h.unit = Element(Mono{}, one);
  h.format = format_d;

  h.mul_b = [p, xi, gm, d](const Mono& a, const Mono& b) {
    Cyclo c = (*gm)(b.j * a.l);
    if (a.sector == kSectorY && b.sector == kSectorY)
      return c * d_mono(p, kSectorY, a.i + b.i, a.j + b.j, a.l + b.l);
    if (a.sector == kSectorY) {
      XPoly chain = phi_chain(p, *gm, b.l, a.l);
      return place(p, c, chain, a.i + b.i, a.j + b.j, kSectorU, a.l + b.l);
    }
    if (b.sector == kSectorY) {
      XPoly chain = phi_chain(p, *gm, a.l, b.l);
      return place(p, c * (*xi)(-b.l), chain, a.i - b.i - 2L * d * b.j - static_cast<long>(d) * b.l,
                   a.j + b.j, kSectorU, a.l + b.l);
    }
    return uu_with_prefix(p, *xi, *gm, a.l, b.l, a.i - b.i - 2L * d * b.j, a.j + b.j, c);
  };

  Cyclo gamma = p.gamma();
  h.comul_b = [p, gm, gamma, one, m, d](const Mono& a) {
    Tensor2 t;
    if (a.sector == kSectorY) {
      for (int k = 0; k <= a.l; ++k)
        t.add({Mono{kSectorY, a.i, a.j, k}, Mono{kSectorY, a.i, a.j + k, a.l - k}},
              q_binomial(a.l, k, gamma) * one);
      return t;
    }
    for (int k = 0; k < m; ++k) {
      Element right = d_mono(p, kSectorU, a.i - static_cast<long>(k) * d, a.j + k, a.l - k);
      t += tensor_of(Element(Mono{kSectorU, a.i, a.j, k}, one), right,
                     (*gm)(static_cast<long>(k) * (a.l - k)));
    }
    return t;
  };
  h.counit_b = [one](const Mono& a) { return a.l == 0 ? one : Cyclo(); };

  HopfStructure plain = h;
  Element s_y = -(*gm)(-1) * d_mono(p, kSectorY, 0, -1, 1);
  h.antipode_b = [plain, p, xi, gm, s_y, one, m, d](const Mono& a) {
    Element r;
    if (a.sector == kSectorY) {
      r = Element(Mono{}, one);
      for (int k = 0; k < a.l; ++k) r = lin_mul(plain, r, s_y);
    } else {
      // S(u_l) = (-1)^l xi^{-l} gamma^{-l(l+1)/2} x^{ld + 3(1-m)d/2} g^{m-l-1} u_l
      const long l = a.l;
      Cyclo c = (*xi)(-l) * (*xi)(-l * (l + 1));
      if (l % 2) c = -c;
      r = c * d_mono(p, kSectorU, l * d + 3L * (1 - m) * d / 2, m - l - 1, a.l);
    }
    return lin_mul(plain, r, d_mono(p, kSectorY, -a.i, -a.j, 0));
  };
  return h;
}

HopfStructure dihedral_structure(const CtxPtr& ctx) {
  HopfStructure h = d_structure(make_dihedral(ctx));
  h.family = "dihedral";
  h.params = nlohmann::json::object();
  return h;
}

Element dihedral_g() { return Element(Mono{kSectorY, 0, 1, 0}, Cyclo(1L)); }
Element dihedral_x() { return Element(Mono{kSectorU, 0, 0, 0}, Cyclo(1L)); }

std::vector<Mono> d_basis(const DParams& p, int j_max) {
  std::vector<Mono> out;
  for (int s : {kSectorY, kSectorU})
    for (int i = 0; i < p.omega(); ++i)
      for (long j = -j_max; j <= j_max; ++j)
        for (int l = 0; l < p.m; ++l) out.push_back(Mono{s, i, j, l});
  return out;
}

}  // namespace gk1
