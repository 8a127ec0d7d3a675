#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk1 {

using Rational = mpq_class;

// Canonical a / b; mpq_class(a, b) alone leaves common factors in place.
inline Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

class CycloContext;
using CtxPtr = std::shared_ptr<const CycloContext>;

// The field Q(zeta_N) represented as Q[x] / Phi_N(x).
class CycloContext {
 public:
  // Contexts are interned per order, so two scalars share a field iff their
  // context pointers are equal.
  static CtxPtr get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  // Coefficients of Phi_N, lowest degree first, monic.
  const std::vector<Rational>& minpoly() const { return phi_; }
  // Residue of x^k modulo Phi_N, for 0 <= k < table_size().
  const std::vector<Rational>& power_residue(int k) const { return table_[k]; }
  int table_size() const { return static_cast<int>(table_.size()); }

  explicit CycloContext(int order);

 private:
  int order_;
  int degree_;
  std::vector<Rational> phi_;
  std::vector<std::vector<Rational>> table_;
};

// Integer coefficient list of the N-th cyclotomic polynomial.
std::vector<Rational> cyclotomic_polynomial(int order);
int euler_totient(int n);

class Cyclo {
 public:
  // Zero, not yet bound to a field. Unbound scalars are rationals and are
  // lifted into the field of whatever bound scalar they meet.
  Cyclo() = default;
  Cyclo(long v);  // NOLINT(google-explicit-constructor)
  Cyclo(int v) : Cyclo(static_cast<long>(v)) {}  // NOLINT
  Cyclo(const Rational& q);                      // NOLINT
  Cyclo(CtxPtr ctx, const Rational& q);
  Cyclo(CtxPtr ctx, std::vector<Rational> coeffs);

  // zeta_N^k for the context order N; k may be negative.
  static Cyclo zeta(const CtxPtr& ctx, long k);

  const CtxPtr& context() const { return ctx_; }
  bool bound() const { return ctx_ != nullptr; }
  // Coefficients in the power basis 1, zeta, ..., zeta^(phi(N)-1).
  std::vector<Rational> coefficients() const;

  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in Q; fills out if given.
  bool is_rational(Rational* out = nullptr) const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);
  Cyclo inverse() const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
  // Total order on the coefficient representation, used for canonical keys.
  friend bool operator<(const Cyclo& a, const Cyclo& b);

  // Canonical exact string, e.g. "N=6;[1/2,0]".
  std::string to_string() const;

 private:
  void bind_to(const CtxPtr& ctx);
  static void unify(Cyclo& a, Cyclo& b);

  CtxPtr ctx_;
  std::vector<Rational> c_;  // empty means zero
};

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

// Primitive M-th root of unity zeta_N^(N/M); M must divide N.
Cyclo primitive_root(const CtxPtr& ctx, int M);
Cyclo pow_int(const Cyclo& a, long e);

// Gaussian binomial by the q-Pascal recursion.
Cyclo q_binomial(int l, int k, const Cyclo& q);
Cyclo q_integer(int l, const Cyclo& q);
Cyclo q_factorial(int l, const Cyclo& q);
// sum_{t=0}^{r} C(r,t) (-1)^(r-t) t^s with 0^0 = 1.
Rational stirling_partial(int r, int s);
Rational binomial(int n, int k);
Rational factorial(int n);
// Least k in [0, order) with base^k == target; throws if none.
int discrete_log(const Cyclo& base, const Cyclo& target, int order);

// Parses "N=6;[1/2,0]", a rational "3/4", "zetaM^t", or "q*zetaM^t" with
// M dividing the context order.
Cyclo parse_scalar(const CtxPtr& ctx, const std::string& text);

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gk1
