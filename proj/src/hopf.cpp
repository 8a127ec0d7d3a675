#include "gk1/hopf.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace gk1 {

Element basis_element(const Mono& b) { return Element(b, Cyclo(1L)); }

Element lin_mul(const HopfStructure& h, const Element& u, const Element& v) {
  Element r;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) r.add_scaled(h.mul_b(a, b), ca * cb);
  return r;
}

Tensor2 lin_comul(const HopfStructure& h, const Element& u) {
  Tensor2 r;
  for (const auto& [a, ca] : u.terms()) r.add_scaled(h.comul_b(a), ca);
  return r;
}

Cyclo lin_counit(const HopfStructure& h, const Element& u) {
  Cyclo r;
  for (const auto& [a, ca] : u.terms()) r += ca * h.counit_b(a);
  return r;
}

Element lin_antipode(const HopfStructure& h, const Element& u) {
  Element r;
  for (const auto& [a, ca] : u.terms()) r.add_scaled(h.antipode_b(a), ca);
  return r;
}

Tensor2 tensor_mul(const HopfStructure& h, const Tensor2& a, const Tensor2& b) {
  Tensor2 r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Element left = h.mul_b(ka.first, kb.first);
      if (left.empty()) continue;
      Element right = h.mul_b(ka.second, kb.second);
      Cyclo c = ca * cb;
      for (const auto& [l, cl] : left.terms())
        for (const auto& [rr, cr] : right.terms()) r.add({l, rr}, c * cl * cr);
    }
  return r;
}

std::string format_element(const HopfStructure& h, const Element& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << h.format(k);
  }
  return os.str();
}

std::string format_tensor(const HopfStructure& h, const Tensor2& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << h.format(k.first) << " (x) " << h.format(k.second);
  }
  return os.str();
}

namespace {

template <class K, class V>
struct Cache {
  std::mutex mu;
  std::map<K, V> data;
};

}  // namespace

HopfStructure memoize(const HopfStructure& h) {
  HopfStructure m = h;
  auto mul_cache = std::make_shared<Cache<std::pair<Mono, Mono>, Element>>();
  auto comul_cache = std::make_shared<Cache<Mono, Tensor2>>();
  auto s_cache = std::make_shared<Cache<Mono, Element>>();
  auto mul = h.mul_b;
  auto comul = h.comul_b;
  auto anti = h.antipode_b;
  m.mul_b = [mul_cache, mul](const Mono& a, const Mono& b) {
    {
      std::lock_guard<std::mutex> lock(mul_cache->mu);
      auto it = mul_cache->data.find({a, b});
      if (it != mul_cache->data.end()) return it->second;
    }
    Element r = mul(a, b);
    std::lock_guard<std::mutex> lock(mul_cache->mu);
    mul_cache->data.emplace(std::make_pair(a, b), r);
    return r;
  };
  m.comul_b = [comul_cache, comul](const Mono& a) {
    {
      std::lock_guard<std::mutex> lock(comul_cache->mu);
      auto it = comul_cache->data.find(a);
      if (it != comul_cache->data.end()) return it->second;
    }
    Tensor2 r = comul(a);
    std::lock_guard<std::mutex> lock(comul_cache->mu);
    comul_cache->data.emplace(a, r);
    return r;
  };
  m.antipode_b = [s_cache, anti](const Mono& a) {
    {
      std::lock_guard<std::mutex> lock(s_cache->mu);
      auto it = s_cache->data.find(a);
      if (it != s_cache->data.end()) return it->second;
    }
    Element r = anti(a);
    std::lock_guard<std::mutex> lock(s_cache->mu);
    s_cache->data.emplace(a, r);
    return r;
  };
  return m;
}

Report verify_hopf_axioms(const HopfStructure& h, const std::vector<Mono>& test_basis,
                          const std::vector<std::pair<Mono, Mono>>& test_pairs) {
  Stopwatch sw;
  Report rep;
  rep.suite = "hopf-axioms";
  rep.family = h.family;
  rep.params = h.params;
  for (const Mono& b : test_basis) {
    Element eb = basis_element(b);
    Tensor2 d = h.comul_b(b);

    Tensor3 left, right;
    for (const auto& [k, c] : d.terms()) {
      const Tensor2 d1 = h.comul_b(k.first);
      for (const auto& [k2, c2] : d1.terms()) left.add({k2.first, k2.second, k.second}, c * c2);
      const Tensor2 d2 = h.comul_b(k.second);
      for (const auto& [k2, c2] : d2.terms()) right.add({k.first, k2.first, k2.second}, c * c2);
    }
    rep.check_lazy(left == right, [&] { return "coassociativity fails at " + h.format(b); });

    Element cl, cr;
    for (const auto& [k, c] : d.terms()) {
      cl.add(k.second, c * h.counit_b(k.first));
      cr.add(k.first, c * h.counit_b(k.second));
    }
    rep.check_lazy(cl == eb && cr == eb, [&] { return "counit law fails at " + h.format(b); });

    Element target = h.counit_b(b) * h.unit;
    Element sl, sr;
    for (const auto& [k, c] : d.terms()) {
      sl.add_scaled(lin_mul(h, h.antipode_b(k.first), basis_element(k.second)), c);
      sr.add_scaled(lin_mul(h, basis_element(k.first), h.antipode_b(k.second)), c);
    }
    rep.check_lazy(sl == target, [&] {
      return "m(S(x)id)D != e1 at " + h.format(b) + ": got " + format_element(h, sl);
    });
    rep.check_lazy(sr == target, [&] {
      return "m(id(x)S)D != e1 at " + h.format(b) + ": got " + format_element(h, sr);
    });
  }
  for (const auto& [a, b] : test_pairs) {
    Element ab = h.mul_b(a, b);
    Tensor2 lhs = lin_comul(h, ab);
    Tensor2 rhs = tensor_mul(h, h.comul_b(a), h.comul_b(b));
    rep.check_lazy(lhs == rhs, [&] {
      return "comultiplication not multiplicative on " + h.format(a) + " * " + h.format(b);
    });
    rep.check_lazy(lin_counit(h, ab) == h.counit_b(a) * h.counit_b(b), [&] {
      return "counit not multiplicative on " + h.format(a) + " * " + h.format(b);
    });
  }
  rep.seconds = sw.seconds();
  return rep;
}

Report verify_associativity(const HopfStructure& hin, const std::vector<Mono>& basis) {
  Stopwatch sw;
  HopfStructure h = memoize(hin);
  Report rep;
  rep.suite = "associativity";
  rep.family = h.family;
  rep.params = h.params;
  for (const Mono& a : basis)
    for (const Mono& b : basis) {
      Element ab = h.mul_b(a, b);
      for (const Mono& c : basis) {
        Element left;
        for (const auto& [k, ck] : ab.terms()) left.add_scaled(h.mul_b(k, c), ck);
        Element bc = h.mul_b(b, c);
        Element right;
        for (const auto& [k, ck] : bc.terms()) right.add_scaled(h.mul_b(a, k), ck);
        rep.check_lazy(left == right, [&] {
          return "(ab)c != a(bc) for a=" + h.format(a) + ", b=" + h.format(b) +
                 ", c=" + h.format(c);
        });
      }
    }
  rep.seconds = sw.seconds();
  return rep;
}

}  // namespace gk1
