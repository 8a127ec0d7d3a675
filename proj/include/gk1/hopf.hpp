#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gk1/cyclo.hpp"
#include "gk1/report.hpp"

namespace gk1 {

// Basis monomial shared by all families.
//   Taft:  g^j x^l            (sector 0, i = 0, 0 <= j < n)
//   Liu:   x^i g^j y^l        (sector 0)
//   D:     x^i g^j y^l        (sector 0) or x^i g^j u_l (sector 1)
struct Mono {
  int sector = 0;
  int i = 0;
  long j = 0;
  int l = 0;
  auto operator<=>(const Mono&) const = default;
};

inline constexpr int kSectorY = 0;
inline constexpr int kSectorU = 1;

// Finite linear combination over an ordered key type with no stored zeros.
template <class K>
class LinComb {
 public:
  using Map = std::map<K, Cyclo>;

  LinComb() = default;
  LinComb(const K& k, const Cyclo& c) { add(k, c); }

  void add(const K& k, const Cyclo& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_scaled(const LinComb& o, const Cyclo& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add(k, v * c);
  }
  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Cyclo& c, const LinComb& a) {
    LinComb r;
    r.add_scaled(a, c);
    return r;
  }

  Cyclo coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Cyclo() : it->second;
  }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  bool operator==(const LinComb& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
      if (!(a->first == b->first) || a->second != b->second) return false;
    return true;
  }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

 private:
  Map terms_;
};

using Element = LinComb<Mono>;
using Tensor2 = LinComb<std::pair<Mono, Mono>>;
using Tensor3 = LinComb<std::tuple<Mono, Mono, Mono>>;

struct HopfStructure {
  std::string family;
  nlohmann::json params = nlohmann::json::object();
  CtxPtr ctx;
  std::function<Element(const Mono&, const Mono&)> mul_b;
  std::function<Tensor2(const Mono&)> comul_b;
  std::function<Cyclo(const Mono&)> counit_b;
  std::function<Element(const Mono&)> antipode_b;
  Element unit;
  std::function<std::string(const Mono&)> format;
};

Element lin_mul(const HopfStructure& h, const Element& u, const Element& v);
Tensor2 lin_comul(const HopfStructure& h, const Element& u);
Cyclo lin_counit(const HopfStructure& h, const Element& u);
Element lin_antipode(const HopfStructure& h, const Element& u);
Tensor2 tensor_mul(const HopfStructure& h, const Tensor2& a, const Tensor2& b);
Element basis_element(const Mono& b);

std::string format_element(const HopfStructure& h, const Element& e);
std::string format_tensor(const HopfStructure& h, const Tensor2& t);

// Wraps the structure maps with thread-safe caches keyed by basis indices.
HopfStructure memoize(const HopfStructure& h);

Report verify_hopf_axioms(const HopfStructure& h, const std::vector<Mono>& test_basis,
                          const std::vector<std::pair<Mono, Mono>>& test_pairs);

// (ab)c == a(bc) for all triples drawn from the basis list.
Report verify_associativity(const HopfStructure& h, const std::vector<Mono>& basis);

}  // namespace gk1
