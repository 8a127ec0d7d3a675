#include "gk1/presented.hpp"

#include <iterator>
#include <random>
#include <sstream>
#include <tuple>

#include "gk1/dual_lemmas.hpp"

namespace gk1 {

bool operator==(const NFWord& x, const NFWord& y) {
  return x.sector == y.sector && x.j == y.j && x.s == y.s && x.l == y.l && x.a == y.a && x.b == y.b;
}

bool operator<(const NFWord& x, const NFWord& y) {
  if (std::tie(x.sector, x.j, x.s, x.l) != std::tie(y.sector, y.j, y.s, y.l))
    return std::tie(x.sector, x.j, x.s, x.l) < std::tie(y.sector, y.j, y.s, y.l);
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

bool operator<(const Letter& x, const Letter& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  return x.group < y.group;
}

bool operator==(const Letter& x, const Letter& y) { return x.kind == y.kind && x.group == y.group; }

struct PresentedAlgebra::Caches {
  std::mutex mu;
  std::map<NFWord, PTensor> comul;
  std::map<NFWord, PElement> antipode;
  std::map<NFWord, DualFunctional> theta;
};

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

bool is_taft(const HopfFamily& f) { return f.tag == "taft"; }
bool is_liu(const HopfFamily& f) { return f.tag == "liu"; }

}  // namespace

PresentedAlgebra::PresentedAlgebra(FamilyPtr fam)
    : fam_(std::move(fam)), one_(fam_->one()), caches_(std::make_shared<Caches>()) {
  if (is_taft(*fam_)) order_ = fam_->taft().m();
  else if (is_liu(*fam_)) order_ = fam_->liu().n;
  else order_ = fam_->dmx().m;
}

bool PresentedAlgebra::has_f1() const { return order_ > 1; }

NFWord PresentedAlgebra::canon(NFWord w) const {
  w.a = one_ * w.a;
  if (is_taft(*fam_)) {
    w.b = Cyclo();
    w.j = mod(w.j, fam_->taft().n);
    w.sector = 0;
  } else {
    w.b = one_ * w.b;
    w.j = 0;
    if (is_liu(*fam_)) w.sector = 0;
  }
  return w;
}

NFWord PresentedAlgebra::taft_group(const Cyclo& lambda, long j) const {
  NFWord w;
  w.a = lambda;
  w.j = j;
  return canon(w);
}

NFWord PresentedAlgebra::liu_group(const Cyclo& alpha, const Cyclo& beta) const {
  const auto& p = fam_->liu();
  Cyclo a = one_ * alpha, b = one_ * beta;
  if (a.is_zero() || b.is_zero() || pow_int(a, p.omega) != pow_int(b, p.n))
    throw ParamError("Psi(a,b) needs nonzero a, b with a^omega = b^n");
  NFWord w;
  w.a = a;
  w.b = b;
  return canon(w);
}

NFWord PresentedAlgebra::d_group(int sector, const Cyclo& alpha, const Cyclo& beta) const {
  const auto& p = fam_->dmx();
  Cyclo a = one_ * alpha, b = one_ * beta;
  if (a.is_zero() || b.is_zero() || pow_int(a, p.omega()) != pow_int(b, p.m))
    throw ParamError("Z(a,b) and X(a,b) need nonzero a, b with a^omega = b^m");
  NFWord w;
  w.sector = sector;
  w.a = a;
  w.b = b;
  return canon(w);
}

Letter PresentedAlgebra::psi(const Cyclo& lambda) const {
  if (!is_taft(*fam_)) throw ParamError("Psi(lambda) is a Taft generator");
  return {Letter::kGroup, taft_group(lambda, 0)};
}

Letter PresentedAlgebra::omega() const {
  if (!is_taft(*fam_)) throw ParamError("Omega is a Taft generator");
  return {Letter::kGroup, taft_group(Cyclo(0L), 1)};
}

Letter PresentedAlgebra::psi(const Cyclo& alpha, const Cyclo& beta) const {
  if (!is_liu(*fam_)) throw ParamError("Psi(a,b) is a Liu generator");
  return {Letter::kGroup, liu_group(alpha, beta)};
}

Letter PresentedAlgebra::zeta(const Cyclo& alpha, const Cyclo& beta) const {
  if (!fam_->is_d_like()) throw ParamError("Z(a,b) is a D generator");
  return {Letter::kGroup, d_group(0, alpha, beta)};
}

Letter PresentedAlgebra::chi(const Cyclo& alpha, const Cyclo& beta) const {
  if (!fam_->is_d_like()) throw ParamError("X(a,b) is a D generator");
  return {Letter::kGroup, d_group(1, alpha, beta)};
}

Letter PresentedAlgebra::f1() const {
  if (!has_f1()) throw ParamError("F1 is not defined when its nilpotency order is 1");
  return {Letter::kF1, NFWord{}};
}

Letter PresentedAlgebra::f2() const { return {Letter::kF2, NFWord{}}; }

PElement PresentedAlgebra::unit() const {
  if (is_taft(*fam_)) return word(taft_group(Cyclo(0L), 0));
  if (is_liu(*fam_)) return word(liu_group(one_, one_));
  return word(d_group(0, one_, one_)) + word(d_group(1, one_, one_));
}

PElement PresentedAlgebra::letter_element(const Letter& x) const {
  if (x.kind == Letter::kGroup) return word(canon(x.group));
  PElement r;
  const PElement u = unit();
  for (const auto& [w, c] : u.terms()) {
    NFWord v = w;
    if (x.kind == Letter::kF2) v.s = 1;
    else v.l = 1;
    r.add(v, c);
  }
  return r;
}

Cyclo PresentedAlgebra::twist(const NFWord& g) const {
  if (is_taft(*fam_)) {
    const auto& p = fam_->taft();
    return pow_int(p.xi, static_cast<long>(p.v) * g.j);
  }
  if (is_liu(*fam_) || g.sector == 0) return g.b;
  return pow_int(g.a, -fam_->dmx().d) * g.b;
}

PElement PresentedAlgebra::group_mul(const NFWord& g, const NFWord& h) const {
  NFWord r;
  if (is_taft(*fam_)) {
    r.a = g.a + h.a;
    r.j = g.j + h.j;
  } else {
    if (g.sector != h.sector) return PElement();
    r.sector = g.sector;
    r.a = g.a * h.a;
    r.b = g.b * h.b;
  }
  return word(canon(r));
}

PElement PresentedAlgebra::mul(const NFWord& x, const NFWord& y) const {
  PElement gp = group_mul(x.group_part(), y.group_part());
  if (gp.empty()) return PElement();
  NFWord g = gp.terms().begin()->first;
  Cyclo coef = pow_int(twist(y.group_part()), x.l);

  // F1^l F2 = (F2 + shift) F1^l, shift = l/n (Liu) or (l/m) Z_{1,1} (D).
  Cyclo shift;
  if (is_liu(*fam_)) shift = Cyclo(ratio(x.l, order_));
  else if (fam_->is_d_like() && g.sector == 0) shift = Cyclo(ratio(x.l, order_));

  int L = x.l + y.l;
  if (L >= order_) {
    if (is_taft(*fam_) || is_liu(*fam_) || g.sector == 0) return PElement();
    coef *= pow_int(one_ - fam_->dmx().gamma(), -order_);
    L -= order_;
  }

  PElement r;
  for (int t = 0; t <= y.s; ++t) {
    Cyclo c = Cyclo(binomial(y.s, t)) * pow_int(shift, y.s - t);
    if (c.is_zero()) continue;
    NFWord w = g;
    w.s = x.s + t;
    w.l = L;
    r.add(w, coef * c);
  }
  return r;
}

PElement PresentedAlgebra::mul(const PElement& x, const PElement& y) const {
  PElement r;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r.add_scaled(mul(a, b), ca * cb);
  return r;
}

PElement PresentedAlgebra::power(const PElement& x, int k) const {
  PElement r = unit();
  for (int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

PElement PresentedAlgebra::product(const std::vector<Letter>& w) const {
  PElement r = unit();
  for (const Letter& x : w) r = mul(r, letter_element(x));
  return r;
}

PElement PresentedAlgebra::rewrite(const std::vector<Letter>& start, RewriteOrder order,
                                   unsigned seed) const {
  using Word = std::vector<Letter>;
  std::mt19937 rng(seed);
  std::map<Word, Cyclo> pending;
  PElement result;
  pending[start] = one_;

  Letter z11, x11;
  if (fam_->is_d_like()) {
    z11 = {Letter::kGroup, d_group(0, one_, one_)};
    x11 = {Letter::kGroup, d_group(1, one_, one_)};
  }
  auto push = [&](const Word& w, const Cyclo& c) {
    if (c.is_zero()) return;
    auto it = pending.find(w);
    if (it == pending.end()) {
      pending.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  auto splice = [](const Word& w, size_t p, size_t len, const Word& mid) {
    Word r(w.begin(), w.begin() + p);
    r.insert(r.end(), mid.begin(), mid.end());
    r.insert(r.end(), w.begin() + p + len, w.end());
    return r;
  };
  auto pick = [&](size_t n) -> size_t {
    if (order == RewriteOrder::kLeftmost) return 0;
    if (order == RewriteOrder::kRightmost) return n - 1;
    return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
  };

  while (!pending.empty()) {
    auto it = pending.begin();
    std::advance(it, pick(pending.size()));
    Word w = it->first;
    Cyclo c = it->second;
    pending.erase(it);

    // Candidate redexes: (position, rule). Rule 0 prepends the unit.
    std::vector<std::pair<size_t, int>> cand;
    if (w.empty() || w[0].kind != Letter::kGroup) cand.push_back({0, 0});
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      Letter::Kind a = w[p].kind, b = w[p + 1].kind;
      if (a == Letter::kGroup && b == Letter::kGroup) cand.push_back({p, 1});
      if (a == Letter::kF2 && b == Letter::kGroup) cand.push_back({p, 2});
      if (a == Letter::kF1 && b == Letter::kGroup) cand.push_back({p, 3});
      if (a == Letter::kF1 && b == Letter::kF2) cand.push_back({p, 4});
    }
    for (size_t p = 0; p + order_ <= w.size(); ++p) {
      bool run = true;
      for (int q = 0; q < order_; ++q) run = run && w[p + q].kind == Letter::kF1;
      if (run) cand.push_back({p, 5});
    }
    if (cand.empty()) {
      NFWord nf = w[0].group;
      for (size_t p = 1; p < w.size(); ++p) {
        if (w[p].kind == Letter::kF2) ++nf.s;
        else ++nf.l;
      }
      result.add(nf, c);
      continue;
    }
    auto [p, rule] = cand[pick(cand.size())];
    switch (rule) {
      case 0: {
        const PElement u = unit();
        for (const auto& [g, cg] : u.terms()) push(splice(w, 0, 0, {Letter{Letter::kGroup, g}}), c * cg);
        break;
      }
      case 1: {
        const PElement gp = group_mul(w[p].group, w[p + 1].group);
        for (const auto& [g, cg] : gp.terms()) push(splice(w, p, 2, {Letter{Letter::kGroup, g}}), c * cg);
        break;
      }
      case 2:
        push(splice(w, p, 2, {w[p + 1], w[p]}), c);
        break;
      case 3:
        push(splice(w, p, 2, {w[p + 1], w[p]}), c * twist(w[p + 1].group));
        break;
      case 4:
        push(splice(w, p, 2, {w[p + 1], w[p]}), c);
        if (is_liu(*fam_)) push(splice(w, p, 2, {w[p]}), c * Cyclo(ratio(1, order_)));
        if (fam_->is_d_like()) push(splice(w, p, 2, {z11, w[p]}), c * Cyclo(ratio(1, order_)));
        break;
      case 5:
        if (fam_->is_d_like())
          push(splice(w, p, order_, {x11}), c * pow_int(one_ - fam_->dmx().gamma(), -order_));
        break;
    }
  }
  return result;
}

PElement PresentedAlgebra::f1_divided(int k) const {
  if (k == 0) return unit();
  Cyclo f = q_factorial(k, fam_->e1_root());
  return f.inverse() * power(letter_element(f1()), k);
}

PElement PresentedAlgebra::grouplike(long e) const {
  const auto& p = fam_->dmx();
  Cyclo ge = pow_int(p.gamma(), e);
  return word(d_group(0, one_, ge)) + pow_int(p.xi, e) * word(d_group(1, one_, ge));
}

PElement PresentedAlgebra::sigma(int c) const {
  const auto& p = fam_->taft();
  const int m = p.m(), n = p.n;
  PElement r;
  for (int t = 0; t < n / m; ++t)
    r.add(taft_group(Cyclo(0L), static_cast<long>(m) * t),
          pow_int(p.xi, -static_cast<long>(m) * c * t) * Cyclo(ratio(m, n)));
  return r;
}

PTensor PresentedAlgebra::tensor(const PElement& x, const PElement& y, const Cyclo& c) const {
  PTensor r;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r.add({a, b}, c * ca * cb);
  return r;
}

PTensor PresentedAlgebra::tmul(const PTensor& x, const PTensor& y) const {
  PTensor r;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      PElement left = mul(kx.first, ky.first);
      if (left.empty()) continue;
      PElement right = mul(kx.second, ky.second);
      Cyclo c = cx * cy;
      for (const auto& [l, cl] : left.terms())
        for (const auto& [rr, cr] : right.terms()) r.add({l, rr}, c * cl * cr);
    }
  return r;
}

PTensor PresentedAlgebra::f1_comul() const {
  PElement u = unit(), f = letter_element(f1());
  if (is_taft(*fam_)) return tensor(u, f) + tensor(f, word(taft_group(Cyclo(0L), 1)));
  if (is_liu(*fam_)) return tensor(u, f) + tensor(f, word(liu_group(one_, fam_->liu().gamma)));
  return tensor(u, f) + tensor(f, grouplike(1));
}

PTensor PresentedAlgebra::f2_comul() const {
  PElement u = unit(), f = letter_element(f2());
  const int m = order_;
  if (is_taft(*fam_)) {
    PTensor r = tensor(u, f) + tensor(f, word(taft_group(Cyclo(0L), m)));
    for (int k = 1; k < m; ++k)
      r += tensor(f1_divided(k), mul(word(taft_group(Cyclo(0L), k)), f1_divided(m - k)));
    return r;
  }
  if (is_liu(*fam_)) {
    PTensor r = tensor(u, f) + tensor(f, u);
    for (int k = 1; k < m; ++k)
      r += tensor(f1_divided(k), mul(word(liu_group(one_, pow_int(fam_->liu().gamma, k))), f1_divided(m - k)),
                  Cyclo(-1L));
    return r;
  }
  PElement zx = word(d_group(0, one_, one_)) - word(d_group(1, one_, one_));
  PTensor r = tensor(zx, f) + tensor(f, u);
  for (int k = 1; k < m; ++k)
    r += tensor(mul(zx, f1_divided(k)), mul(grouplike(k - m), f1_divided(m - k)), Cyclo(-1L));
  return r;
}

PTensor PresentedAlgebra::group_comul(const NFWord& g) const {
  if (is_taft(*fam_)) {
    const auto& p = fam_->taft();
    const int m = p.m(), n = p.n;
    Cyclo lam = g.a;
    PTensor mixed;
    for (int k = 1; k < m; ++k)
      mixed += tensor(f1_divided(k), mul(word(taft_group(Cyclo(0L), k)), f1_divided(m - k)));
    PTensor outer;
    PElement psi = word(taft_group(lam, 0));
    for (int c = 0; c < n / m; ++c)
      outer += tensor(word(taft_group(lam * pow_int(p.xi, static_cast<long>(m) * c), 0)), mul(psi, sigma(c)));
    PTensor r = tmul(outer, tensor(unit(), unit()) + lam * mixed);
    PElement om = word(taft_group(Cyclo(0L), 1));
    for (long t = 0; t < g.j; ++t) r = tmul(r, tensor(om, om));
    return r;
  }
  if (is_liu(*fam_)) {
    const auto& p = fam_->liu();
    PElement psi = word(g);
    PTensor r = tensor(psi, psi);
    Cyclo lam = pow_int(g.b, p.n);
    for (int k = 1; k < p.n; ++k)
      r += tensor(mul(psi, f1_divided(k)),
                  mul(mul(psi, word(liu_group(one_, pow_int(p.gamma, k)))), f1_divided(p.n - k)), one_ - lam);
    return r;
  }

  const auto& p = fam_->dmx();
  const int m = p.m, d = p.d;
  Cyclo a = g.a, ad = pow_int(a, d);
  int k = discrete_log(p.gamma(), g.b / ad, m);
  Cyclo lam = pow_int(a, p.omega());
  std::vector<Cyclo> th = theta_values(p, a);
  auto except = [&](int j) {
    Cyclo r = one_;
    for (int i = 0; i < m; ++i)
      if (i != j) r *= th[i];
    return r;
  };
  auto partial = [&](int from, int to) {
    Cyclo r = one_;
    for (int i = from; i <= to; ++i) r *= th[i];
    return r;
  };
  PElement z = word(d_group(0, a, ad)), x = word(d_group(1, a, ad));
  PElement zi = word(d_group(0, a.inverse(), ad.inverse())), xi = word(d_group(1, a.inverse(), ad.inverse()));
  PTensor r;
  if (g.sector == 0) {
    Cyclo c0 = pow_int(a, static_cast<long>((1 - m) * d / 2));
    r = tensor(z, z) + tensor(x, xi, c0 * except(0));
    for (int t = 1; t < m; ++t) {
      PElement ek = f1_divided(t), emk = f1_divided(m - t);
      Cyclo gt = pow_int(p.gamma(), t);
      r += tensor(mul(z, ek), mul(mul(z, word(d_group(0, one_, gt))), emk), one_ - lam);
      r += tensor(mul(x, ek), mul(mul(xi, word(d_group(1, one_, gt))), emk),
                  c0 * except(m - t) * pow_int(p.xi, t));
    }
  } else {
    r = tensor(z, x) + tensor(x, zi);
    for (int t = 1; t < m; ++t) {
      PElement ek = f1_divided(t), emk = f1_divided(m - t);
      Cyclo gt = pow_int(p.gamma(), t);
      r += tensor(mul(z, ek), mul(mul(x, word(d_group(1, one_, gt))), emk),
                  -th[0] * partial(1, t - 1) * pow_int(p.xi, t));
      r += tensor(mul(x, ek), mul(mul(zi, word(d_group(0, one_, gt))), emk),
                  -th[0] * pow_int(a, -static_cast<long>(m - t) * d) * partial(1, m - t - 1));
    }
  }
  if (k > 0) {
    PElement gk = grouplike(k);
    r = tmul(r, tensor(gk, gk));
    if (g.sector == 1) r = pow_int(p.xi, -k) * r;
  }
  return r;
}

PTensor PresentedAlgebra::comul(const NFWord& w0) const {
  NFWord w = canon(w0);
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->comul.find(w);
    if (it != caches_->comul.end()) return it->second;
  }
  PTensor r = group_comul(w.group_part());
  if (w.s > 0) {
    PTensor d2 = f2_comul();
    for (int i = 0; i < w.s; ++i) r = tmul(r, d2);
  }
  if (w.l > 0) {
    PTensor d1 = f1_comul();
    for (int i = 0; i < w.l; ++i) r = tmul(r, d1);
  }
  std::lock_guard<std::mutex> lock(caches_->mu);
  caches_->comul.emplace(w, r);
  return r;
}

PTensor PresentedAlgebra::comul(const PElement& x) const {
  PTensor r;
  for (const auto& [w, c] : x.terms()) r.add_scaled(comul(w), c);
  return r;
}

Cyclo PresentedAlgebra::counit(const NFWord& w) const {
  return (w.s == 0 && w.l == 0 && w.sector == 0) ? one_ : Cyclo(fam_->ctx, Rational(0));
}

Cyclo PresentedAlgebra::counit(const PElement& x) const {
  Cyclo r(fam_->ctx, Rational(0));
  for (const auto& [w, c] : x.terms()) r += c * counit(w);
  return r;
}

PElement PresentedAlgebra::f1_antipode() const {
  PElement f = letter_element(f1());
  if (is_taft(*fam_)) {
    const auto& p = fam_->taft();
    return (-pow_int(p.xi, -p.v)) * mul(word(taft_group(Cyclo(0L), p.n - 1)), f);
  }
  if (is_liu(*fam_)) {
    const auto& p = fam_->liu();
    return (-pow_int(p.gamma, p.n - 1)) * mul(word(liu_group(one_, pow_int(p.gamma, p.n - 1))), f);
  }
  return (-fam_->dmx().gamma().inverse()) * mul(grouplike(-1), f);
}

PElement PresentedAlgebra::f2_antipode() const {
  PElement f = letter_element(f2());
  if (is_taft(*fam_)) {
    const auto& p = fam_->taft();
    return Cyclo(-1L) * mul(word(taft_group(Cyclo(0L), p.n - p.m())), f);
  }
  if (is_liu(*fam_)) return Cyclo(-1L) * f;
  const int m = order_;
  PElement z = word(d_group(0, one_, one_)), x = word(d_group(1, one_, one_));
  return Cyclo(-1L) * mul(z, f) + mul(x, f) + Cyclo(ratio(1 - m, 2 * m)) * x;
}

PElement PresentedAlgebra::group_antipode(const NFWord& g) const {
  if (is_taft(*fam_)) {
    const auto& p = fam_->taft();
    const int m = p.m(), n = p.n;
    PElement s;
    for (int c = 0; c < n / m; ++c)
      s += mul(word(taft_group(-g.a * pow_int(p.xi, -static_cast<long>(m) * c), 0)), sigma(c));
    return mul(word(taft_group(Cyclo(0L), (n - 1) * g.j)), s);
  }
  if (is_liu(*fam_)) return word(liu_group(g.a.inverse(), g.b.inverse()));
  if (g.sector == 0) return word(d_group(0, g.a.inverse(), g.b.inverse()));
  const auto& p = fam_->dmx();
  Cyclo ad = pow_int(g.a, p.d);
  int k = discrete_log(p.gamma(), g.b / ad, p.m);
  Cyclo coef = pow_int(g.a, static_cast<long>((1 - p.m) * p.d / 2)) * pow_int(p.gamma(), -k);
  return coef * word(d_group(1, g.a, ad * pow_int(p.gamma(), -k)));
}

PElement PresentedAlgebra::antipode(const NFWord& w0) const {
  NFWord w = canon(w0);
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->antipode.find(w);
    if (it != caches_->antipode.end()) return it->second;
  }
  PElement r = unit();
  if (w.l > 0) r = power(f1_antipode(), w.l);
  if (w.s > 0) r = mul(r, power(f2_antipode(), w.s));
  r = mul(r, group_antipode(w.group_part()));
  std::lock_guard<std::mutex> lock(caches_->mu);
  caches_->antipode.emplace(w, r);
  return r;
}

PElement PresentedAlgebra::antipode(const PElement& x) const {
  PElement r;
  for (const auto& [w, c] : x.terms()) r.add_scaled(antipode(w), c);
  return r;
}

DualFunctional PresentedAlgebra::theta(const NFWord& w0) const {
  NFWord w = canon(w0);
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    auto it = caches_->theta.find(w);
    if (it != caches_->theta.end()) return it->second;
  }
  DualFunctional g;
  if (is_taft(*fam_)) {
    g = taft_psi(fam_, w.a);
    if (w.j > 0) g = g * gk1::power(taft_omega(fam_), static_cast<int>(w.j));
  } else if (is_liu(*fam_)) {
    g = liu_psi(fam_, w.a, w.b);
  } else {
    g = w.sector == 0 ? d_zeta(fam_, w.a, w.b) : d_chi(fam_, w.a, w.b);
  }
  if (w.s > 0) g = g * gk1::power(dual_e2(fam_), w.s);
  if (w.l > 0) g = g * gk1::power(dual_e1(fam_), w.l);
  std::lock_guard<std::mutex> lock(caches_->mu);
  caches_->theta.emplace(w, g);
  return g;
}

DualFunctional PresentedAlgebra::theta(const PElement& x) const {
  std::vector<std::pair<Cyclo, DualFunctional>> parts;
  for (const auto& [w, c] : x.terms()) parts.emplace_back(c, theta(w));
  FamilyPtr fam = fam_;
  return DualFunctional(fam_, "Theta(" + format(x) + ")", [parts, fam](const Mono& b) {
    Cyclo r(fam->ctx, Rational(0));
    for (const auto& [c, f] : parts) r += c * f(b);
    return r;
  });
}

DualFunctional PresentedAlgebra::theta(const Letter& x) const {
  if (x.kind == Letter::kF1) return dual_e1(fam_);
  if (x.kind == Letter::kF2) return dual_e2(fam_);
  return theta(x.group);
}

std::string PresentedAlgebra::format(const NFWord& w) const {
  std::ostringstream os;
  if (is_taft(*fam_)) os << "Psi(" << w.a.to_string() << ") Omega^" << w.j;
  else if (is_liu(*fam_)) os << "Psi(" << w.a.to_string() << "," << w.b.to_string() << ")";
  else os << (w.sector == 0 ? "Z(" : "X(") << w.a.to_string() << "," << w.b.to_string() << ")";
  os << " F2^" << w.s << " F1^" << w.l;
  return os.str();
}

std::string PresentedAlgebra::format(const PElement& x) const {
  if (x.empty()) return "0";
  std::string r;
  for (const auto& [w, c] : x.terms()) {
    if (!r.empty()) r += " + ";
    r += "(" + c.to_string() + ")*" + format(w);
  }
  return r;
}

std::string PresentedAlgebra::format(const Letter& x) const {
  if (x.kind == Letter::kF1) return "F1";
  if (x.kind == Letter::kF2) return "F2";
  NFWord g = x.group;
  if (is_taft(*fam_)) {
    if (g.a.is_zero() && g.j == 1) return "Omega";
    return "Psi(" + g.a.to_string() + ")" + (g.j ? " Omega^" + std::to_string(g.j) : "");
  }
  std::string s = format(g);
  return s.substr(0, s.find(" F2^"));
}

namespace {

// Splits "a,b" at the top-level comma; scalars may contain commas in brackets.
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

NFWord PresentedAlgebra::parse(const std::string& text) const {
  std::istringstream is(text);
  std::string tok;
  if (!(is >> tok)) throw ParamError("empty word");
  auto open = tok.find('(');
  if (open == std::string::npos || tok.back() != ')') throw ParamError("malformed group part '" + tok + "'");
  std::string head = tok.substr(0, open);
  auto args = split_args(tok.substr(open + 1, tok.size() - open - 2));
  NFWord w;
  CtxPtr ctx = fam_->ctx;
  if (head == "Psi" && is_taft(*fam_) && args.size() == 1) w = taft_group(parse_scalar(ctx, args[0]), 0);
  else if (head == "Psi" && is_liu(*fam_) && args.size() == 2)
    w = liu_group(parse_scalar(ctx, args[0]), parse_scalar(ctx, args[1]));
  else if ((head == "Z" || head == "X") && fam_->is_d_like() && args.size() == 2)
    w = d_group(head == "Z" ? 0 : 1, parse_scalar(ctx, args[0]), parse_scalar(ctx, args[1]));
  else
    throw ParamError("group part '" + tok + "' does not match family " + fam_->tag);
  while (is >> tok) {
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    long e = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
    if (name == "Omega" && is_taft(*fam_)) w.j = e;
    else if (name == "F2") w.s = static_cast<int>(e);
    else if (name == "F1") w.l = static_cast<int>(e);
    else throw ParamError("unknown factor '" + tok + "'");
  }
  if (w.l < 0 || w.l >= order_ || w.s < 0) throw ParamError("exponent out of range in '" + text + "'");
  return canon(w);
}

std::vector<Letter> default_alphabet(const PresentedAlgebra& p) {
  const FamilyPtr& fam = p.family();
  const Cyclo one = fam->one(), two = Cyclo(fam->ctx, Rational(2));
  std::vector<Letter> out;
  if (fam->tag == "taft") {
    out = {p.psi(one), p.psi(two), p.omega()};
  } else if (fam->tag == "liu") {
    const auto& q = fam->liu();
    out = {p.psi(one, q.gamma), p.psi(pow_int(two, q.n), pow_int(two, q.omega))};
  } else {
    const auto& q = fam->dmx();
    Cyclo ad = pow_int(two, q.d);
    out = {p.zeta(one, q.gamma()), p.chi(two, ad * q.gamma()), p.zeta(two, ad)};
  }
  if (p.has_f1()) out.push_back(p.f1());
  out.push_back(p.f2());
  return out;
}

Report verify_theta(const PresentedPtr& pp, const ThetaBounds& bounds) {
  Stopwatch sw;
  const PresentedAlgebra& p = *pp;
  const FamilyPtr& fam = p.family();
  Report rep;
  rep.suite = "theta";
  rep.family = fam->tag;
  rep.params = fam->h.params;

  const int len = bounds.word_length >= 0 ? bounds.word_length : (fam->tag == "dmx" ? 2 : 3);
  int bound = bounds.bound, pbound = bounds.pair_bound;
  if (bound < 0) bound = fam->tag == "taft" ? 2 * fam->taft().m() : 2;
  if (pbound < 0) pbound = fam->tag == "taft" ? fam->taft().m() : 1;
  std::vector<Letter> alphabet = bounds.alphabet.empty() ? default_alphabet(p) : bounds.alphabet;
  std::vector<Mono> singles = fam->basis(bound), grid = fam->basis(pbound);
  const Mono one_mono = fam->h.unit.terms().begin()->first;

  std::vector<std::string> letters;
  for (const Letter& x : alphabet) letters.push_back(p.format(x));
  rep.extra["alphabet"] = letters;
  rep.extra["word_length"] = len;
  rep.extra["bound"] = bound;
  rep.extra["pair_bound"] = pbound;

  DualFunctional eps = counit_functional(fam);
  DualFunctional theta_one = p.theta(p.unit());
  for (const Mono& b : singles)
    rep.check_lazy(theta_one(b) == eps(b), [&] { return "Theta(1) != eps at " + fam->h.format(b); });

  long words = 0;
  std::vector<std::vector<size_t>> layer = {{}};
  for (int L = 1; L <= len; ++L) {
    std::vector<std::vector<size_t>> next;
    for (const auto& w : layer)
      for (size_t a = 0; a < alphabet.size(); ++a) {
        auto v = w;
        v.push_back(a);
        next.push_back(v);
      }
    layer = next;
    for (const auto& idx : layer) {
      ++words;
      std::vector<Letter> word;
      std::string name;
      for (size_t a : idx) {
        word.push_back(alphabet[a]);
        name += (name.empty() ? "" : " ") + letters[a];
      }
      PElement e = p.product(word);

      unsigned seed = static_cast<unsigned>(words * 2654435761u);
      for (RewriteOrder ord : {RewriteOrder::kLeftmost, RewriteOrder::kRightmost, RewriteOrder::kRandom}) {
        PElement r = p.rewrite(word, ord, seed);
        rep.check_lazy(r == e, [&] {
          return "rewriting disagrees on [" + name + "]: " + p.format(r) + " vs " + p.format(e);
        });
      }

      DualFunctional te = p.theta(e);
      DualFunctional conv = p.theta(word[0]);
      for (size_t i = 1; i < word.size(); ++i) conv = conv * p.theta(word[i]);
      for (const Mono& b : singles) {
        Cyclo x = te(b), y = conv(b);
        rep.check_lazy(x == y, [&] {
          return "Theta(product) != product of Theta on [" + name + "] at " + fam->h.format(b) + ": " +
                 x.to_string() + " vs " + y.to_string();
        });
      }
      rep.check_lazy(p.counit(e) == te(one_mono), [&] { return "counit mismatch on [" + name + "]"; });

      PTensor de = p.comul(e);
      std::vector<std::tuple<Cyclo, DualFunctional, DualFunctional>> legs;
      for (const auto& [k, c] : de.terms()) legs.emplace_back(c, p.theta(k.first), p.theta(k.second));
      for (const Mono& b : grid)
        for (const Mono& bp : grid) {
          Cyclo lhs = dual_pair_eval(te, b, bp);
          Cyclo rhs(fam->ctx, Rational(0));
          for (const auto& [c, f, g] : legs) {
            Cyclo v = f(b);
            if (!v.is_zero()) rhs += c * v * g(bp);
          }
          rep.check_lazy(lhs == rhs, [&] {
            return "coproduct mismatch on [" + name + "] at (" + fam->h.format(b) + ", " +
                   fam->h.format(bp) + "): " + lhs.to_string() + " vs " + rhs.to_string();
          });
        }

      DualFunctional ts = p.theta(p.antipode(e));
      for (const Mono& b : singles) {
        Cyclo x = ts(b), y = dual_antipode_eval(te, b);
        rep.check_lazy(x == y, [&] {
          return "antipode mismatch on [" + name + "] at " + fam->h.format(b) + ": " + x.to_string() +
                 " vs " + y.to_string();
        });
      }
    }
  }
  rep.extra["words"] = words;
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_presented_axioms(const PresentedPtr& pp, int s_max) {
  Stopwatch sw;
  const PresentedAlgebra& p = *pp;
  const FamilyPtr& fam = p.family();
  Report rep;
  rep.suite = "presented-axioms";
  rep.family = fam->tag;
  rep.params = fam->h.params;
  const Cyclo one = fam->one();

  std::vector<NFWord> groups;
  const PElement u = p.unit();
  for (const auto& [w, c] : u.terms()) groups.push_back(w);
  for (const Letter& x : default_alphabet(p))
    if (x.kind == Letter::kGroup) groups.push_back(x.group);
  if (fam->tag == "taft") groups.push_back(p.taft_group(Cyclo(0L), 1));

  std::vector<NFWord> words;
  for (const NFWord& g : groups)
    for (int s = 0; s <= s_max; ++s)
      for (int l = 0; l < p.order(); ++l) {
        NFWord w = g;
        w.s = s;
        w.l = l;
        words.push_back(w);
      }
  rep.extra["words"] = static_cast<long>(words.size());

  for (const NFWord& w : words) {
    PTensor d = p.comul(w);
    PTensor3 left, right;
    for (const auto& [k, c] : d.terms()) {
      const PTensor d1 = p.comul(k.first);
      for (const auto& [k2, c2] : d1.terms()) left.add({k2.first, k2.second, k.second}, c * c2);
      const PTensor d2 = p.comul(k.second);
      for (const auto& [k2, c2] : d2.terms()) right.add({k.first, k2.first, k2.second}, c * c2);
    }
    rep.check_lazy(left == right, [&] { return "coassociativity fails at " + p.format(w); });

    PElement cl, cr, sl, sr;
    for (const auto& [k, c] : d.terms()) {
      cl.add(k.second, c * p.counit(k.first));
      cr.add(k.first, c * p.counit(k.second));
      sl.add_scaled(p.mul(p.antipode(k.first), p.word(k.second)), c);
      sr.add_scaled(p.mul(p.word(k.first), p.antipode(k.second)), c);
    }
    PElement ew = p.word(w);
    PElement target = p.counit(w) * p.unit();
    rep.check_lazy(cl == ew && cr == ew, [&] { return "counit law fails at " + p.format(w); });
    rep.check_lazy(sl == target, [&] { return "m(S (x) id)D != e1 at " + p.format(w) + ": " + p.format(sl); });
    rep.check_lazy(sr == target, [&] { return "m(id (x) S)D != e1 at " + p.format(w) + ": " + p.format(sr); });
  }

  // Multiplicativity of D and of the counit on pairs of words.
  for (size_t a = 0; a < words.size(); a += 2)
    for (size_t b = 1; b < words.size(); b += 3) {
      PElement ab = p.mul(words[a], words[b]);
      rep.check_lazy(p.comul(ab) == p.tmul(p.comul(words[a]), p.comul(words[b])), [&] {
        return "D not multiplicative on " + p.format(words[a]) + " * " + p.format(words[b]);
      });
      rep.check_lazy(p.counit(ab) == p.counit(words[a]) * p.counit(words[b]), [&] {
        return "counit not multiplicative on " + p.format(words[a]) + " * " + p.format(words[b]);
      });
    }

  // F1^l F2 = F2 F1^l + shift * F1^l, with the shift l/n (Liu) or (l/m) Z_{1,1} (D).
  if (p.has_f1() && fam->tag != "taft") {
    for (int l = 1; l < p.order(); ++l) {
      std::vector<Letter> lhs(l, p.f1());
      lhs.push_back(p.f2());
      std::vector<Letter> base = {p.f2()};
      for (int i = 0; i < l; ++i) base.push_back(p.f1());
      PElement want = p.rewrite(base, RewriteOrder::kLeftmost);
      PElement f1l = p.rewrite(std::vector<Letter>(l, p.f1()), RewriteOrder::kLeftmost);
      Cyclo shift = Cyclo(ratio(l, p.order()));
      if (fam->tag == "liu") want += shift * f1l;
      else want += shift * p.mul(p.word(p.d_group(0, one, one)), f1l);
      rep.check_lazy(p.rewrite(lhs, RewriteOrder::kLeftmost) == want,
                     [&] { return "F1^" + std::to_string(l) + " F2 commutation rule fails"; });
      rep.check_lazy(p.product(lhs) == want,
                     [&] { return "closed-form product disagrees with F1^" + std::to_string(l) + " F2 rule"; });
    }
  }

  if (fam->tag == "taft") {
    const auto& q = fam->taft();
    const int classes = q.n / q.m();
    PElement sum;
    for (int c = 0; c < classes; ++c) {
      sum += p.sigma(c);
      for (int c2 = 0; c2 < classes; ++c2) {
        PElement prod = p.mul(p.sigma(c), p.sigma(c2));
        rep.check_lazy(prod == (c == c2 ? p.sigma(c) : PElement()), [&] {
          return "sigma_" + std::to_string(c) + " sigma_" + std::to_string(c2) + " = " + p.format(prod);
        });
      }
    }
    rep.check_lazy(sum == p.unit(), [&] { return "sum of sigma_c != 1: " + p.format(sum); });
  }

  if (fam->tag == "dmx") {
    const auto& q = fam->dmx();
    for (const Cyclo& a : default_dual_samples(*fam)) {
      Cyclo prod = one;
      for (const Cyclo& t : theta_values(q, a)) prod *= t;
      rep.check_lazy(prod == one - pow_int(one * a, q.omega()),
                     [&] { return "theta product identity fails at alpha = " + a.to_string(); });
    }
  }

  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace gk1
