// Resultants over an exact integral domain via a pseudo-remainder sequence
// with content stripping and exact tracking of the scale factors.
//
// Convention (fixed throughout the library): res(a, b) is the determinant of
// the Sylvester matrix whose first deg(b) rows carry the coefficients of a,
// equivalently
//     res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r).
// Examples: res_y(2y, y^2-2-x) = -4x-8,  res_y(y-2, y-5) = -3.
#ifndef BELYI_RESULTANT_HPP
#define BELYI_RESULTANT_HPP

#include <stdexcept>
#include <utility>

#include "belyi/polynomial.hpp"

namespace belyi {

namespace detail {

// Content hook used by the PRS to keep intermediate values small.  Must
// return a divisor of every coefficient; returning one is always sound.
inline Int domain_content(const Poly<Int>& r) {
  Int g = int_content(r);
  return sgn(g) == 0 ? Int(1) : g;
}
inline Rat domain_content(const Poly<Rat>&) { return Rat(1); }
template <class K>
inline Poly<K> domain_content(const Poly<Poly<K>>& r) {
  Poly<K> g(r.unit().unit());
  for (const Poly<K>& c : r.coeffs()) g = poly_gcd(g, c);
  if (g.is_zero() || g.degree() < 0) return ring::one_like(r.unit());
  return g;
}
inline Poly<Int> domain_content(const Poly<Poly<Int>>& r) {
  Int g(0);
  for (const Poly<Int>& c : r.coeffs()) g = gcd(g, int_content(c));
  if (sgn(g) == 0) g = 1;
  return Poly<Int>::constant(g);
}

template <class D>
D pow_d(D base, long e) {
  D r = ring::one_like(base);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Resultant of two polynomials over the domain D.
template <class D>
D resultant_prs(Poly<D> a, Poly<D> b) {
  const D one = ring::one_like(a.unit());
  if (a.is_zero() || b.is_zero()) {
    // res with the zero polynomial: zero unless both are constants
    return ring::zero_like(a.unit());
  }
  bool negate = false;
  D num = one, den = one;
  for (;;) {
    if (a.degree() == 0 && b.degree() == 0) {
      // empty Sylvester matrix
      break;
    }
    if (a.degree() == 0) {  // res(c, b) = c^deg(b)
      num = num * detail::pow_d(a.lc(), b.degree());
      break;
    }
    if (b.degree() == 0) {  // res(a, c) = c^deg(a)
      num = num * detail::pow_d(b.lc(), a.degree());
      break;
    }
    if (a.degree() < b.degree()) {
      if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
      std::swap(a, b);
    }
    long m = a.degree(), n = b.degree();
    long e = m - n + 1;
    Poly<D> r = prem(a, b);
    if (r.is_zero()) return ring::zero_like(a.unit());
    long dr = r.degree();
    // res(a,b) = (-1)^{mn} lc(b)^{m - e n - dr} res(b, r); the exponent is <= 0
    if ((m & 1) && (n & 1)) negate = !negate;
    den = den * detail::pow_d(b.lc(), e * n + dr - m);
    D c = detail::domain_content(r);
    bool c_trivial = (c == one);
    if (!c_trivial) {
      num = num * detail::pow_d(c, n);
      std::vector<D> cs;
      for (const D& v : r.coeffs()) cs.push_back(ring::exact_div(v, c));
      r = Poly<D>(a.unit(), std::move(cs));
    }
    a = std::move(b);
    b = std::move(r);
  }
  D res = ring::exact_div(num, den);
  return negate ? -res : res;
}

// res_y(a(y), b(y)) where the coefficients of both live in K[x]; the result
// is a polynomial in x.  a and b must be over the same field.
template <class K>
Poly<K> resultant_y(const Poly<Poly<K>>& a, const Poly<Poly<K>>& b);

template <class K>
Poly<K> resultant_y_impl_field(const Poly<Poly<K>>& a, const Poly<Poly<K>>& b) {
  return resultant_prs(a, b);
}

inline Poly<Rat> resultant_y_rat(const Poly<Poly<Rat>>& a, const Poly<Poly<Rat>>& b) {
  // scale both to integer coefficients, run the PRS over Z[x], scale back
  auto scale = [](const Poly<Poly<Rat>>& p, Int& den) {
    den = 1;
    for (const Poly<Rat>& c : p.coeffs())
      for (const Rat& v : c.coeffs()) den = lcm(den, Int(v.get_den()));
    std::vector<Poly<Int>> cs;
    for (const Poly<Rat>& c : p.coeffs()) {
      std::vector<Int> ci;
      for (const Rat& v : c.coeffs()) {
        Rat s = v * Rat(den);
        s.canonicalize();
        ci.emplace_back(s.get_num());
      }
      cs.emplace_back(Int(1), std::move(ci));
    }
    return Poly<Poly<Int>>(Poly<Int>::constant(Int(1)), std::move(cs));
  };
  Int da, db;
  Poly<Poly<Int>> az = scale(a, da), bz = scale(b, db);
  Poly<Int> rz = resultant_prs(az, bz);
  // res(da*a, db*b) = da^deg(b) db^deg(a) res(a, b)
  Rat fac = Rat(1);
  if (b.degree() >= 0)
    for (long i = 0; i < b.degree(); ++i) fac *= Rat(da);
  if (a.degree() >= 0)
    for (long i = 0; i < a.degree(); ++i) fac *= Rat(db);
  Poly<Rat> r = int_poly_to_rat(rz);
  return r * ring::inverse(fac);
}

template <class K>
Poly<K> resultant_y(const Poly<Poly<K>>& a, const Poly<Poly<K>>& b) {
  if (a.is_zero()) throw invalid_input("resultant: zero polynomial");
  if constexpr (std::is_same_v<K, Rat>) {
    return resultant_y_rat(a, b);
  } else {
    return resultant_y_impl_field(a, b);
  }
}

// Lift a univariate polynomial in y over K to K[x][y] (constant in x).
template <class K>
Poly<Poly<K>> lift_y(const Poly<K>& a) {
  std::vector<Poly<K>> cs;
  for (const K& c : a.coeffs()) cs.push_back(Poly<K>::constant(c));
  return Poly<Poly<K>>(Poly<K>::constant(a.unit()), std::move(cs));
}

// The spec-facing operation: res_y(a(y), b(y; x)).
template <class K>
Poly<K> resultant(const Poly<K>& a, const Poly<Poly<K>>& b) {
  return resultant_y(lift_y(a), b);
}

}  // namespace belyi

#endif
