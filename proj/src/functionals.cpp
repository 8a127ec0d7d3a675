#include "gk1/functionals.hpp"

#include <map>
#include <mutex>

namespace gk1 {

struct DualFunctional::Node {
  std::string label;
  Evaluator f;
  std::mutex mu;
  std::map<Mono, Cyclo> memo;
};

// ---------------------------------------------------------------- families

std::vector<Mono> HopfFamily::basis(int bound) const {
  if (tag == "taft") return taft_basis(taft(), bound);
  if (tag == "liu") return liu_basis(liu(), bound);
  return d_basis(dmx(), bound);
}

Cyclo HopfFamily::e1_root() const {
  if (tag == "taft") return pow_int(taft().xi, taft().v);
  if (tag == "liu") return liu().gamma;
  return dmx().gamma();
}

int HopfFamily::e1_order() const {
  if (tag == "taft") return taft().m();
  if (tag == "liu") return liu().n;
  return dmx().m;
}

FamilyPtr make_family(const TaftParams& p) {
  auto f = std::make_shared<HopfFamily>();
  f->tag = "taft";
  f->params = p;
  f->h = memoize(taft_structure(p));
  f->ctx = p.ctx();
  return f;
}

FamilyPtr make_family(const LiuParams& p) {
  auto f = std::make_shared<HopfFamily>();
  f->tag = "liu";
  f->params = p;
  f->h = memoize(liu_structure(p));
  f->ctx = p.ctx();
  return f;
}

FamilyPtr make_family(const DParams& p) {
  auto f = std::make_shared<HopfFamily>();
  f->tag = "dmx";
  f->params = p;
  f->h = memoize(d_structure(p));
  f->ctx = p.ctx();
  return f;
}

FamilyPtr make_dihedral_family(const CtxPtr& ctx) {
  auto f = std::make_shared<HopfFamily>();
  f->tag = "dihedral";
  f->params = make_dihedral(ctx);
  f->h = memoize(dihedral_structure(ctx));
  f->ctx = ctx;
  return f;
}

// ---------------------------------------------------------------- functionals

DualFunctional::DualFunctional(FamilyPtr fam, std::string label, Evaluator f)
    : fam_(std::move(fam)), node_(std::make_shared<Node>()) {
  node_->label = std::move(label);
  node_->f = std::move(f);
}

const std::string& DualFunctional::label() const { return node_->label; }

Cyclo DualFunctional::operator()(const Mono& b) const {
  {
    std::lock_guard<std::mutex> lock(node_->mu);
    auto it = node_->memo.find(b);
    if (it != node_->memo.end()) return it->second;
  }
  Cyclo v = node_->f(b);
  std::lock_guard<std::mutex> lock(node_->mu);
  node_->memo.emplace(b, v);
  return v;
}

Cyclo DualFunctional::eval_elem(const Element& e) const {
  Cyclo r(fam_->ctx, Rational(0));
  for (const auto& [k, c] : e.terms()) r += c * (*this)(k);
  return r;
}

namespace {

void same_family(const DualFunctional& f, const DualFunctional& g) {
  if (f.family() != g.family())
    throw FamilyMismatch("functionals belong to different Hopf algebras");
}

}  // namespace

DualFunctional convolve(const DualFunctional& f, const DualFunctional& g) {
  same_family(f, g);
  FamilyPtr fam = f.family();
  return DualFunctional(fam, "(" + f.label() + ")(" + g.label() + ")", [fam, f, g](const Mono& b) {
    Cyclo r(fam->ctx, Rational(0));
    const Tensor2 d = fam->h.comul_b(b);
    for (const auto& [k, c] : d.terms()) {
      Cyclo a = f(k.first);
      if (a.is_zero()) continue;
      r += c * a * g(k.second);
    }
    return r;
  });
}

DualFunctional operator*(const DualFunctional& f, const DualFunctional& g) { return convolve(f, g); }

DualFunctional operator+(const DualFunctional& f, const DualFunctional& g) {
  same_family(f, g);
  return DualFunctional(f.family(), f.label() + " + " + g.label(),
                        [f, g](const Mono& b) { return f(b) + g(b); });
}

DualFunctional operator-(const DualFunctional& f, const DualFunctional& g) {
  same_family(f, g);
  return DualFunctional(f.family(), f.label() + " - " + g.label(),
                        [f, g](const Mono& b) { return f(b) - g(b); });
}

DualFunctional operator*(const Cyclo& c, const DualFunctional& f) {
  return DualFunctional(f.family(), "[" + c.to_string() + "]" + f.label(),
                        [c, f](const Mono& b) { return c * f(b); });
}

DualFunctional counit_functional(const FamilyPtr& fam) {
  return DualFunctional(fam, "eps", [fam](const Mono& b) { return fam->h.counit_b(b); });
}

DualFunctional zero_functional(const FamilyPtr& fam) {
  return DualFunctional(fam, "0", [fam](const Mono&) { return Cyclo(fam->ctx, Rational(0)); });
}

DualFunctional power(const DualFunctional& f, int k) {
  if (k < 0) throw ParamError("negative convolution power");
  if (k == 0) return counit_functional(f.family());
  DualFunctional r = f;
  for (int i = 1; i < k; ++i) r = convolve(r, f);
  return r;
}

Cyclo eval(const DualFunctional& f, const Mono& b) { return f(b); }

Cyclo dual_pair_eval(const DualFunctional& f, const Mono& b, const Mono& bp) {
  return f.eval_elem(f.family()->h.mul_b(b, bp));
}

Cyclo dual_antipode_eval(const DualFunctional& f, const Mono& b) {
  return f.eval_elem(f.family()->h.antipode_b(b));
}

// ---------------------------------------------------------------- generators

DualFunctional taft_psi(const FamilyPtr& fam, const Cyclo& lambda) {
  const int m = fam->taft().m();
  Cyclo lam = fam->one() * lambda;
  return DualFunctional(fam, "psi(" + lam.to_string() + ")", [m, lam, fam](const Mono& b) {
    if (b.l % m != 0) return Cyclo(fam->ctx, Rational(0));
    return fam->one() * pow_int(lam, b.l / m);
  });
}

DualFunctional taft_omega(const FamilyPtr& fam) {
  Cyclo xi = fam->taft().xi;
  return DualFunctional(fam, "omega", [xi, fam](const Mono& b) {
    return b.l == 0 ? pow_int(xi, b.j) : Cyclo(fam->ctx, Rational(0));
  });
}

namespace {

void check_pair(const Cyclo& alpha, const Cyclo& beta, int omega, int n, const char* what) {
  if (alpha.is_zero() || beta.is_zero()) throw ParamError(std::string(what) + " needs nonzero alpha, beta");
  if (pow_int(alpha, omega) != pow_int(beta, n))
    throw ParamError(std::string(what) + " pair violates alpha^omega = beta^" +
                     (std::string(what) == "psi" ? "n" : "m"));
}

DualFunctional group_char(const FamilyPtr& fam, const std::string& label, Cyclo alpha, Cyclo beta,
                          int sector) {
  return DualFunctional(fam, label, [fam, alpha, beta, sector](const Mono& b) {
    if (b.l != 0 || b.sector != sector) return Cyclo(fam->ctx, Rational(0));
    return pow_int(alpha, b.i) * pow_int(beta, b.j);
  });
}

std::string pair_label(const char* name, const Cyclo& a, const Cyclo& b) {
  return std::string(name) + "(" + a.to_string() + "," + b.to_string() + ")";
}

}  // namespace

DualFunctional liu_psi(const FamilyPtr& fam, const Cyclo& alpha, const Cyclo& beta) {
  const auto& p = fam->liu();
  Cyclo a = fam->one() * alpha, b = fam->one() * beta;
  check_pair(a, b, p.omega, p.n, "psi");
  return group_char(fam, pair_label("psi", a, b), a, b, kSectorY);
}

DualFunctional d_zeta(const FamilyPtr& fam, const Cyclo& alpha, const Cyclo& beta) {
  const auto& p = fam->dmx();
  Cyclo a = fam->one() * alpha, b = fam->one() * beta;
  check_pair(a, b, p.omega(), p.m, "zeta");
  return group_char(fam, pair_label("zeta", a, b), a, b, kSectorY);
}

DualFunctional d_chi(const FamilyPtr& fam, const Cyclo& alpha, const Cyclo& beta) {
  const auto& p = fam->dmx();
  Cyclo a = fam->one() * alpha, b = fam->one() * beta;
  check_pair(a, b, p.omega(), p.m, "chi");
  return group_char(fam, pair_label("chi", a, b), a, b, kSectorU);
}

DualFunctional dual_e1(const FamilyPtr& fam) {
  if (fam->is_d_like()) {
    const auto& p = fam->dmx();
    if (p.m == 1) throw ParamError("E1 does not exist for m = 1");
    Cyclo u_val = p.xi / (fam->one() - p.gamma().inverse());
    return DualFunctional(fam, "E1", [fam, u_val](const Mono& b) {
      if (b.l != 1) return Cyclo(fam->ctx, Rational(0));
      return b.sector == kSectorY ? fam->one() : u_val;
    });
  }
  return DualFunctional(fam, "E1", [fam](const Mono& b) {
    return b.l == 1 ? fam->one() : Cyclo(fam->ctx, Rational(0));
  });
}

DualFunctional dual_e2(const FamilyPtr& fam) {
  if (fam->tag == "taft") {
    const int m = fam->taft().m();
    return DualFunctional(fam, "E2", [fam, m](const Mono& b) {
      return b.l == m ? fam->one() : Cyclo(fam->ctx, Rational(0));
    });
  }
  int omega, den;
  if (fam->tag == "liu") {
    omega = fam->liu().omega;
    den = fam->liu().n;
  } else {
    omega = fam->dmx().omega();
    den = fam->dmx().m;
  }
  return DualFunctional(fam, "E2", [fam, omega, den](const Mono& b) {
    if (b.l != 0) return Cyclo(fam->ctx, Rational(0));
    return Cyclo(fam->ctx, ratio(b.i, omega) + ratio(b.j, den));
  });
}

DualFunctional d_grouplike(const FamilyPtr& fam, long e) {
  const auto& p = fam->dmx();
  Cyclo ge = pow_int(p.gamma(), e);
  Cyclo one = fam->one();
  return d_zeta(fam, one, ge) + pow_int(p.xi, e) * d_chi(fam, one, ge);
}

DualFunctional e1_divided(const FamilyPtr& fam, int k) {
  Cyclo f = q_factorial(k, fam->e1_root());
  if (f.is_zero()) throw ParamError("divided power E1^[k] needs k!_q != 0");
  return f.inverse() * power(dual_e1(fam), k);
}

DualFunctional e2_divided(const FamilyPtr& fam, int s) {
  return Cyclo(Rational(1) / factorial(s)) * power(dual_e2(fam), s);
}

DualFunctional make_generator(const FamilyPtr& fam, const DualGenSpec& spec) {
  const std::string& k = spec.kind;
  if (k == "eps") return counit_functional(fam);
  if (k == "E2") return dual_e2(fam);
  if (k == "E1") {
    if (fam->tag == "dihedral") throw ParamError("E1 does not exist for the dihedral family");
    return dual_e1(fam);
  }
  if (fam->tag == "taft") {
    if (k == "psi") return taft_psi(fam, spec.a);
    if (k == "omega") return taft_omega(fam);
  } else if (fam->tag == "liu") {
    if (k == "psi") return liu_psi(fam, spec.a, spec.b);
  } else if (fam->tag == "dmx") {
    if (k == "zeta") return d_zeta(fam, spec.a, spec.b);
    if (k == "chi") return d_chi(fam, spec.a, spec.b);
  } else if (fam->tag == "dihedral") {
    if (k == "zeta") return d_zeta(fam, spec.a, spec.a);
    if (k == "chi") return d_chi(fam, spec.a, spec.a);
  }
  throw ParamError("generator '" + k + "' is not defined for family " + fam->tag);
}

// ---------------------------------------------------------------- tensors

FunctionalTensor::FunctionalTensor(const DualFunctional& f, const DualFunctional& g, const Cyclo& c) {
  terms_.push_back({c, f, g});
}

FunctionalTensor& FunctionalTensor::operator+=(const FunctionalTensor& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

FunctionalTensor operator*(const Cyclo& c, const FunctionalTensor& t) {
  FunctionalTensor r = t;
  for (auto& term : r.terms_) term.c = c * term.c;
  return r;
}

FunctionalTensor operator*(const FunctionalTensor& a, const FunctionalTensor& b) {
  FunctionalTensor r;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      r.terms_.push_back({x.c * y.c, convolve(x.left, y.left), convolve(x.right, y.right)});
  return r;
}

Cyclo FunctionalTensor::operator()(const Mono& b, const Mono& bp) const {
  Cyclo r;
  for (const auto& t : terms_) {
    Cyclo a = t.left(b);
    if (a.is_zero()) continue;
    r += t.c * a * t.right(bp);
  }
  return r;
}

bool functionals_agree(const DualFunctional& f, const DualFunctional& g,
                       const std::vector<Mono>& basis, std::string* witness) {
  for (const Mono& b : basis) {
    Cyclo x = f(b), y = g(b);
    if (x != y) {
      if (witness)
        *witness = f.label() + " vs " + g.label() + " at " + f.family()->h.format(b) + ": " +
                   x.to_string() + " != " + y.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace gk1
