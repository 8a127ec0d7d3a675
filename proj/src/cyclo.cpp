#include "gk1/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gk1 {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Long division; b must be nonzero.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(std::max(0, deg(r) - deg(b) + 1), Rational(0));
  const Rational lead = b.back();
  while (!r.empty() && deg(r) >= deg(b)) {
    int shift = deg(r) - deg(b);
    Rational c = r.back() / lead;
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
}

std::map<int, Poly>& phi_cache() {
  static std::map<int, Poly> cache;
  return cache;
}

}  // namespace

int euler_totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rational> cyclotomic_polynomial(int order) {
  if (order < 1) throw ScalarError("cyclotomic order must be positive");
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& cache = phi_cache();
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  // x^N - 1 divided by Phi_d for every proper divisor d, smallest first.
  Poly num(order + 1, Rational(0));
  num[0] = -1;
  num[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    Poly divisor;
    auto hit = cache.find(d);
    if (hit != cache.end()) {
      divisor = hit->second;
    } else {
      // Recursion without the lock held would need a reentrant scheme; the
      // divisors are small so compute them directly here.
      Poly sub(d + 1, Rational(0));
      sub[0] = -1;
      sub[d] = 1;
      for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        Poly q, r;
        poly_divmod(sub, cache.at(e), q, r);
        sub = q;
      }
      cache[d] = sub;
      divisor = sub;
    }
    Poly q, r;
    poly_divmod(num, divisor, q, r);
    if (!r.empty()) throw ScalarError("cyclotomic division left a remainder");
    num = q;
  }
  cache[order] = num;
  return num;
}

CycloContext::CycloContext(int order) : order_(order) {
  if (order < 1) throw ScalarError("cyclotomic order must be positive");
  // Fill the cache bottom-up so nested divisor lookups always hit.
  for (int d = 1; d <= order; ++d)
    if (order % d == 0) cyclotomic_polynomial(d);
  phi_ = cyclotomic_polynomial(order);
  degree_ = deg(phi_);
  if (degree_ != euler_totient(order)) throw ScalarError("cyclotomic degree mismatch");
  int size = std::max(order, 2 * degree_ - 1);
  table_.resize(size);
  Poly cur(degree_, Rational(0));
  cur[0] = 1;
  for (int k = 0; k < size; ++k) {
    table_[k] = cur;
    // multiply cur by x and reduce using x^d = -sum phi_i x^i
    Rational top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
  }
}

CtxPtr CycloContext::get(int order) {
  static std::mutex mu;
  static std::map<int, CtxPtr> interned;
  std::lock_guard<std::mutex> lock(mu);
  auto it = interned.find(order);
  if (it != interned.end()) return it->second;
  auto ctx = std::make_shared<const CycloContext>(order);
  interned[order] = ctx;
  return ctx;
}

Cyclo::Cyclo(long v) {
  if (v != 0) c_.push_back(Rational(v));
}

Cyclo::Cyclo(const Rational& q) {
  if (q != 0) {
    c_.push_back(q);
    c_[0].canonicalize();
  }
}

Cyclo::Cyclo(CtxPtr ctx, const Rational& q) : ctx_(std::move(ctx)) {
  if (q != 0) {
    c_.assign(ctx_->degree(), Rational(0));
    c_[0] = q;
    c_[0].canonicalize();
  }
}

Cyclo::Cyclo(CtxPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)) {
  int d = ctx_->degree();
  for (Rational& q : coeffs) q.canonicalize();
  if (static_cast<int>(coeffs.size()) > d) {
    // reduce a longer polynomial
    std::vector<Rational> r(d, Rational(0));
    for (size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      if (static_cast<int>(k) < d) {
        r[k] += coeffs[k];
      } else if (static_cast<int>(k) < ctx_->table_size()) {
        const auto& row = ctx_->power_residue(static_cast<int>(k));
        for (int i = 0; i < d; ++i)
          if (row[i] != 0) r[i] += coeffs[k] * row[i];
      } else {
        Poly q, rem;
        Poly mono(k + 1, Rational(0));
        mono[k] = 1;
        poly_divmod(mono, ctx_->minpoly(), q, rem);
        rem.resize(d, Rational(0));
        for (int i = 0; i < d; ++i) r[i] += coeffs[k] * rem[i];
      }
    }
    coeffs = std::move(r);
  }
  coeffs.resize(d, Rational(0));
  bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; });
  if (!zero) c_ = std::move(coeffs);
}

Cyclo Cyclo::zeta(const CtxPtr& ctx, long k) {
  long n = ctx->order();
  long r = ((k % n) + n) % n;
  return Cyclo(ctx, ctx->power_residue(static_cast<int>(r)));
}

std::vector<Rational> Cyclo::coefficients() const {
  if (!ctx_) return {c_.empty() ? Rational(0) : c_[0]};
  if (c_.empty()) return std::vector<Rational>(ctx_->degree(), Rational(0));
  return c_;
}

bool Cyclo::is_zero() const { return c_.empty(); }

bool Cyclo::is_one() const {
  Rational q;
  return is_rational(&q) && q == 1;
}

bool Cyclo::is_rational(Rational* out) const {
  if (c_.empty()) {
    if (out) *out = 0;
    return true;
  }
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  if (out) *out = c_[0];
  return true;
}

void Cyclo::bind_to(const CtxPtr& ctx) {
  if (ctx_ == ctx) return;
  if (ctx_) throw ScalarError("cyclotomic context mismatch");
  ctx_ = ctx;
  if (!c_.empty()) c_.resize(ctx_->degree(), Rational(0));
}

void Cyclo::unify(Cyclo& a, Cyclo& b) {
  if (a.ctx_ == b.ctx_) return;
  if (!a.ctx_) {
    a.bind_to(b.ctx_);
  } else if (!b.ctx_) {
    b.bind_to(a.ctx_);
  } else {
    throw ScalarError("cyclotomic context mismatch: N=" + std::to_string(a.ctx_->order()) +
                      " vs N=" + std::to_string(b.ctx_->order()));
  }
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.c_.empty()) {
    if (o.ctx_ && !ctx_) bind_to(o.ctx_);
    return *this;
  }
  Cyclo other = o;
  unify(*this, other);
  if (c_.empty()) {
    c_ = other.c_;
    return *this;
  }
  bool zero = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] += other.c_[i];
    if (c_[i] != 0) zero = false;
  }
  if (zero) c_.clear();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.ctx_ != b.ctx_ && a.ctx_ && b.ctx_)
    throw ScalarError("cyclotomic context mismatch: N=" + std::to_string(a.ctx_->order()) +
                      " vs N=" + std::to_string(b.ctx_->order()));
  CtxPtr ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  Cyclo r;
  r.ctx_ = ctx;
  if (a.c_.empty() || b.c_.empty()) return r;
  if (!a.ctx_ || !b.ctx_) {
    // at least one side is a rational
    const Cyclo& scalar = a.ctx_ ? b : a;
    const Cyclo& vec = a.ctx_ ? a : b;
    r.c_ = vec.c_;
    for (auto& q : r.c_) q *= scalar.c_[0];
    return r;
  }
  int d = ctx->degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0) continue;
    const auto& row = ctx->power_residue(k);
    for (int i = 0; i < d; ++i)
      if (row[i] != 0) prod[i] += prod[k] * row[i];
  }
  prod.resize(d);
  bool zero = std::all_of(prod.begin(), prod.end(), [](const Rational& q) { return q == 0; });
  if (!zero) r.c_ = std::move(prod);
  return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  *this = *this * o;
  return *this;
}

Cyclo Cyclo::inverse() const {
  if (c_.empty()) throw ScalarError("division by zero");
  if (!ctx_) return Cyclo(Rational(1) / c_[0]);
  Rational q;
  if (is_rational(&q)) return Cyclo(ctx_, Rational(1) / q);
  Poly a = c_;
  trim(a);
  Poly r0 = ctx_->minpoly(), r1 = a;
  Poly s0, s1 = {Rational(1)};
  while (deg(r1) > 0) {
    Poly quo, rem;
    poly_divmod(r0, r1, quo, rem);
    Poly s2 = poly_sub(s0, poly_mul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw ScalarError("element not invertible modulo the cyclotomic polynomial");
  for (auto& x : s1) x /= r1[0];
  return Cyclo(ctx_, s1);
}

Cyclo& Cyclo::operator/=(const Cyclo& o) {
  if (o.is_zero()) throw ScalarError("division by zero");
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
  if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
  if (a.ctx_ && b.ctx_) throw ScalarError("cyclotomic context mismatch");
  Cyclo x = a, y = b;
  Cyclo::unify(x, y);
  return x.c_ == y.c_;
}

bool operator<(const Cyclo& a, const Cyclo& b) {
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  size_t n = std::max(ca.size(), cb.size());
  ca.resize(n, Rational(0));
  cb.resize(n, Rational(0));
  return ca < cb;
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  os << "N=" << (ctx_ ? ctx_->order() : 1) << ";[";
  auto c = coefficients();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i].get_str();
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.to_string(); }

Cyclo primitive_root(const CtxPtr& ctx, int M) {
  if (M < 1 || ctx->order() % M != 0)
    throw ScalarError("root order " + std::to_string(M) + " does not divide N=" +
                      std::to_string(ctx->order()));
  return Cyclo::zeta(ctx, ctx->order() / M);
}

Cyclo pow_int(const Cyclo& a, long e) {
  if (e < 0) {
    if (a.is_zero()) throw ScalarError("zero base with negative exponent");
    return pow_int(a.inverse(), -e);
  }
  Cyclo result(1L);
  if (a.bound()) result = Cyclo(a.context(), Rational(1));
  Cyclo base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Cyclo q_integer(int l, const Cyclo& q) {
  Cyclo sum(0L), term(1L);
  for (int i = 0; i < l; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

Cyclo q_factorial(int l, const Cyclo& q) {
  Cyclo r(1L);
  for (int i = 1; i <= l; ++i) r *= q_integer(i, q);
  return r;
}

Cyclo q_binomial(int l, int k, const Cyclo& q) {
  if (k < 0 || l < 0 || k > l) throw ScalarError("q_binomial requires 0 <= k <= l");
  // row[k] holds C(row, k)_q; C(l,k) = C(l-1,k-1) + q^k C(l-1,k)
  std::vector<Cyclo> row(1, Cyclo(1L));
  std::vector<Cyclo> qpow(l + 1, Cyclo(1L));
  for (int i = 1; i <= l; ++i) qpow[i] = qpow[i - 1] * q;
  for (int n = 1; n <= l; ++n) {
    std::vector<Cyclo> next(n + 1);
    next[0] = Cyclo(1L);
    next[n] = Cyclo(1L);
    for (int j = 1; j < n; ++j) next[j] = row[j - 1] + qpow[j] * row[j];
    row = std::move(next);
  }
  return row[k];
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational stirling_partial(int r, int s) {
  mpz_class total = 0;
  for (int t = 0; t <= r; ++t) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), r, t);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(s));
    if ((r - t) % 2) c = -c;
    total += c * p;
  }
  return Rational(total);
}

int discrete_log(const Cyclo& base, const Cyclo& target, int order) {
  Cyclo cur(1L);
  for (int k = 0; k < order; ++k) {
    if (cur == target) return k;
    cur *= base;
  }
  throw ScalarError("discrete_log: target " + target.to_string() +
                    " is not a power of the given base");
}

namespace {

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ScalarError("empty rational");
  Rational q;
  if (q.set_str(t, 10) != 0) throw ScalarError("cannot parse rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Cyclo parse_scalar(const CtxPtr& ctx, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.rfind("N=", 0) == 0) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw ScalarError("malformed scalar '" + text + "'");
    int order = std::stoi(s.substr(2, semi - 2));
    std::string body = s.substr(semi + 1);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw ScalarError("malformed scalar '" + text + "'");
    body = body.substr(1, body.size() - 2);
    std::vector<Rational> coeffs;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    if (order == 1) return Cyclo(ctx, coeffs.empty() ? Rational(0) : coeffs[0]);
    if (order != ctx->order()) {
      if (ctx->order() % order != 0)
        throw ScalarError("scalar field N=" + std::to_string(order) + " not contained in N=" +
                          std::to_string(ctx->order()));
      Cyclo z = primitive_root(ctx, order), acc(ctx, Rational(0)), p(ctx, Rational(1));
      for (const auto& c : coeffs) {
        acc += p * Cyclo(c);
        p *= z;
      }
      return acc;
    }
    return Cyclo(ctx, coeffs);
  }
  Rational factor = 1;
  std::string root = s;
  auto star = s.find('*');
  if (star != std::string::npos) {
    factor = parse_rational(s.substr(0, star));
    root = s.substr(star + 1);
  }
  if (root.rfind("zeta", 0) == 0) {
    std::string rest = root.substr(4);
    auto caret = rest.find('^');
    int M = std::stoi(rest.substr(0, caret));
    long t = caret == std::string::npos ? 1 : std::stol(rest.substr(caret + 1));
    return Cyclo(factor) * pow_int(primitive_root(ctx, M), t);
  }
  if (star != std::string::npos) throw ScalarError("malformed scalar '" + text + "'");
  return Cyclo(ctx, parse_rational(s));
}

}  // namespace gk1
