// Dense univariate polynomials over an exact coefficient ring K, lowest
// degree first.  The same template serves Q, finite fields, their extensions,
// big integers (for PRS work) and nested polynomials (bivariate resultants).
//
// Every polynomial carries the ring's multiplicative identity so that the
// zero polynomial over a context-dependent field (F_q) still knows its field.
#ifndef BELYI_POLYNOMIAL_HPP
#define BELYI_POLYNOMIAL_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "belyi/rational.hpp"

namespace belyi {

template <class K>
class Poly {
 public:
  explicit Poly(K one) : one_(std::move(one)) {}
  Poly(K one, std::vector<K> cs) : one_(std::move(one)), c_(std::move(cs)) { trim(); }

  static Poly constant(const K& v) {
    Poly p(ring::one_like(v));
    if (!ring::is_zero(v)) p.c_ = {v};
    return p;
  }
  static Poly from_coeffs(const K& one, std::vector<K> cs) { return Poly(one, std::move(cs)); }
  // x^n with unit leading coefficient
  static Poly monomial(const K& one, size_t n) {
    std::vector<K> cs(n + 1, ring::zero_like(one));
    cs[n] = one;
    return Poly(one, std::move(cs));
  }
  static Poly x(const K& one) { return monomial(one, 1); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const K& unit() const { return one_; }
  K zero_coeff() const { return ring::zero_like(one_); }

  const K& lc() const {
    if (c_.empty()) throw std::logic_error("lc of zero polynomial");
    return c_.back();
  }
  K coeff(size_t i) const { return i < c_.size() ? c_[i] : zero_coeff(); }
  const std::vector<K>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (K& v : r.c_) v = -v;
    return r;
  }
  Poly operator+(const Poly& o) const {
    std::vector<K> cs(std::max(c_.size(), o.c_.size()), zero_coeff());
    for (size_t i = 0; i < c_.size(); ++i) cs[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) cs[i] = cs[i] + o.c_[i];
    return Poly(one_, std::move(cs));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(one_);
    std::vector<K> cs(c_.size() + o.c_.size() - 1, zero_coeff());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (ring::is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) cs[i + j] = cs[i + j] + c_[i] * o.c_[j];
    }
    return Poly(one_, std::move(cs));
  }
  Poly operator*(const K& s) const {
    if (ring::is_zero(s)) return Poly(one_);
    Poly r = *this;
    for (K& v : r.c_) v = v * s;
    r.trim();
    return r;
  }
  Poly pow(unsigned long e) const {
    Poly r = constant(one_);
    Poly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  K eval(const K& t) const {
    K r = zero_coeff();
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
  }
  // substitute another polynomial
  Poly compose(const Poly& g) const {
    Poly r(one_);
    for (size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(one_);
    std::vector<K> cs(c_.size() - 1, zero_coeff());
    K k = one_;
    for (size_t i = 1; i < c_.size(); ++i) {
      cs[i - 1] = c_[i] * k;
      k = k + one_;
    }
    return Poly(one_, std::move(cs));
  }

  // x^deg * f(1/x); for f(0) != 0 the roots invert
  Poly reversed() const {
    std::vector<K> cs(c_.rbegin(), c_.rend());
    return Poly(one_, std::move(cs));
  }

  Poly shift_x(const K& a) const {  // f(x + a)
    return compose(Poly(one_, {a, one_}));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (ring::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += coeff_str(c_[i]) + "*x^" + std::to_string(i);
    }
    return s;
  }

 private:
  static std::string coeff_str(const Rat& v) { return rat_to_string(v); }
  static std::string coeff_str(const Int& v) { return v.get_str(); }
  template <class T>
  static std::string coeff_str(const T& v) {
    return v.to_string();
  }

  void trim() {
    while (!c_.empty() && ring::is_zero(c_.back())) c_.pop_back();
  }

  K one_;
  std::vector<K> c_;
};

// ---- division over a coefficient field ----

template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly<K> q(a.unit()), r = a;
  K inv_lc = ring::inverse(b.lc());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    size_t k = static_cast<size_t>(r.degree() - b.degree());
    K c = r.lc() * inv_lc;
    Poly<K> t = Poly<K>::monomial(a.unit(), k) * c;
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
  return divrem(a, b).first;
}
template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divrem(a, b).second;
}

template <class K>
Poly<K> monic(const Poly<K>& a) {
  if (a.is_zero()) return a;
  return a * ring::inverse(a.lc());
}

// Exact division over a ring: requires b | a, checked.
template <class K>
Poly<K> exact_div_poly(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("exact_div_poly by zero");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw std::logic_error("exact_div_poly: not divisible");
  std::vector<K> q(static_cast<size_t>(a.degree() - b.degree()) + 1, a.zero_coeff());
  Poly<K> r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    K c = ring::exact_div(r.lc(), b.lc());
    size_t k = static_cast<size_t>(r.degree() - b.degree());
    q[k] = c;
    r = r - Poly<K>::monomial(a.unit(), k) * c * b;
  }
  if (!r.is_zero()) throw std::logic_error("exact_div_poly: nonzero remainder");
  return Poly<K>(a.unit(), std::move(q));
}

// ---- ring hooks so Poly<K> can itself be a coefficient domain ----
namespace ring {

template <class K>
struct Traits<Poly<K>> {
  static constexpr bool is_field = false;
  static bool is_zero(const Poly<K>& p) { return p.is_zero(); }
  static Poly<K> zero_like(const Poly<K>& p) { return Poly<K>(p.unit()); }
  static Poly<K> one_like(const Poly<K>& p) { return Poly<K>::constant(p.unit()); }
  static Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) { return exact_div_poly(a, b); }
  static Poly<K> inverse(const Poly<K>&) { throw std::logic_error("K[x] is not a field"); }
  static unsigned long characteristic(const Poly<K>& p) { return ring::characteristic(p.unit()); }
  static Poly<K> inv_frobenius(const Poly<K>&) {
    throw std::logic_error("inv_frobenius of a polynomial coefficient");
  }
};

}  // namespace ring

// ---- gcd ----

// Monic Euclidean gcd over any coefficient field.
template <class K>
Poly<K> gcd_field(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline Int int_content(const Poly<Int>& a) {
  Int g = 0;
  for (const Int& c : a.coeffs()) g = gcd(g, c);
  return g;  // zero for the zero polynomial
}

inline Poly<Int> int_primitive(const Poly<Int>& a) {
  Int g = int_content(a);
  if (sgn(g) == 0) return a;
  if (sgn(a.lc()) < 0) g = -g;  // normalize sign of the leading coefficient
  std::vector<Int> cs;
  cs.reserve(a.coeffs().size());
  for (const Int& c : a.coeffs()) cs.push_back(ring::exact_div(c, g));
  return Poly<Int>(Int(1), std::move(cs));
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a  mod  b, over a domain.
template <class D>
Poly<D> prem(const Poly<D>& a, const Poly<D>& b) {
  if (b.is_zero()) throw std::domain_error("prem by zero");
  Poly<D> r = a;
  long db = b.degree();
  long e = a.degree() - db + 1;
  if (e <= 0) return r;
  long steps = 0;
  while (!r.is_zero() && r.degree() >= db) {
    size_t k = static_cast<size_t>(r.degree() - db);
    Poly<D> t = Poly<D>::monomial(a.unit(), k) * r.lc();
    r = r * b.lc() - t * b;
    ++steps;
  }
  // pad remaining factor so the full lc(b)^e multiplier is applied
  for (; steps < e; ++steps) r = r * b.lc();
  return r;
}

// Subresultant-flavoured PRS gcd over Z: pseudo-remainders with content
// stripping keep coefficient growth polynomial instead of exponential.
inline Poly<Int> gcd_int_primitive(Poly<Int> a, Poly<Int> b) {
  if (a.is_zero()) return int_primitive(b);
  if (b.is_zero()) return int_primitive(a);
  a = int_primitive(a);
  b = int_primitive(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero() && b.degree() > 0) {
    Poly<Int> r = int_primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!b.is_zero()) return Poly<Int>::constant(Int(1));  // nonzero constant remainder
  return int_primitive(a);
}

inline Poly<Int> rat_poly_to_int(const Poly<Rat>& a, Int* denom_out = nullptr) {
  Int l(1);
  for (const Rat& c : a.coeffs()) l = lcm(l, Int(c.get_den()));
  std::vector<Int> cs;
  cs.reserve(a.coeffs().size());
  for (const Rat& c : a.coeffs()) {
    Rat s = c * Rat(l);
    s.canonicalize();
    cs.emplace_back(s.get_num());
  }
  if (denom_out) *denom_out = l;
  return Poly<Int>(Int(1), std::move(cs));
}

inline Poly<Rat> int_poly_to_rat(const Poly<Int>& a) {
  std::vector<Rat> cs;
  cs.reserve(a.coeffs().size());
  for (const Int& c : a.coeffs()) cs.emplace_back(c);
  return Poly<Rat>(Rat(1), std::move(cs));
}

inline Poly<Rat> poly_gcd(const Poly<Rat>& a, const Poly<Rat>& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  Poly<Int> g = gcd_int_primitive(rat_poly_to_int(a), rat_poly_to_int(b));
  return monic(int_poly_to_rat(g));
}

template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  return gcd_field(a, b);
}

// ---- squarefree part ----

namespace detail {
// coefficient-wise inverse Frobenius; only reachable in characteristic p
template <class K>
Poly<K> pth_root_poly(const Poly<K>& a, unsigned long p) {
  std::vector<K> cs;
  for (size_t i = 0; i < a.coeffs().size(); i += p) cs.push_back(ring::inv_frobenius(a.coeffs()[i]));
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    if (i % p != 0 && !ring::is_zero(a.coeffs()[i]))
      throw std::logic_error("pth_root_poly: input is not a p-th power");
  return Poly<K>(a.unit(), std::move(cs));
}
}  // namespace detail

// Monic product of the distinct irreducible factors; base field Q or a
// perfect field of characteristic p (finite fields here).
template <class K>
Poly<K> squarefree_part(const Poly<K>& a) {
  if (a.is_zero()) throw invalid_input("squarefree_part of zero");
  if (a.degree() == 0) return Poly<K>::constant(a.unit());
  Poly<K> f = monic(a);
  unsigned long p = ring::characteristic(a.unit());
  Poly<K> d = f.derivative();
  if (p == 0) {
    return monic(f / poly_gcd(f, d));
  }
  if constexpr (!std::is_same_v<K, Rat> && !std::is_same_v<K, Int>) {
    if (d.is_zero()) return squarefree_part(detail::pth_root_poly(f, p));
    Poly<K> g = poly_gcd(f, d);
    Poly<K> v = f / g;  // distinct factors whose multiplicity is not 0 mod p
    // strip every v-factor from f; what survives is a perfect p-th power
    Poly<K> h = f;
    for (;;) {
      Poly<K> w = poly_gcd(h, v);
      if (w.degree() == 0) break;
      h = h / w;
    }
    if (h.degree() == 0) return monic(v);
    return monic(v * squarefree_part(detail::pth_root_poly(h, p)));
  } else {
    throw std::logic_error("characteristic p with rational coefficients");
  }
}

template <class K>
bool is_squarefree(const Poly<K>& a) {
  if (a.is_zero()) return false;
  if (a.degree() == 0) return true;
  return squarefree_part(a).degree() == a.degree();
}

}  // namespace belyi

#endif
