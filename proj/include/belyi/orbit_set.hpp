// Galois-stable finite subsets of P^1 encoded as a monic squarefree
// polynomial (roots = finite members) plus a flag for the point at infinity.
// All set algebra is gcd- and resultant-based; points of the algebraic
// closure are never materialized.
#ifndef BELYI_ORBIT_SET_HPP
#define BELYI_ORBIT_SET_HPP

#include <string>
#include <utility>

#include "belyi/rational_function.hpp"
#include "belyi/resultant.hpp"

namespace belyi {

template <class K>
struct OrbitSet {
  Poly<K> f;        // monic squarefree, constant 1 when there are no finite members
  bool inf = false;

  explicit OrbitSet(const K& one) : f(Poly<K>::constant(one)) {}
  OrbitSet(Poly<K> finite_part, bool at_infinity) : f(std::move(finite_part)), inf(at_infinity) {
    if (f.is_zero()) throw invalid_input("orbit set: zero polynomial");
    f = monic(f);
  }

  static OrbitSet empty(const K& one) { return OrbitSet(one); }
  static OrbitSet infinity_only(const K& one) {
    OrbitSet s(one);
    s.inf = true;
    return s;
  }
  static OrbitSet single(const K& pt) {
    return OrbitSet(Poly<K>(ring::one_like(pt), {-pt, ring::one_like(pt)}), false);
  }
  static OrbitSet of_point(const P1Point<K>& pt, const K& one) {
    if (pt.inf) return infinity_only(one);
    return single(pt.v);
  }
  // takes the squarefree part; flags whether the input was already squarefree
  static OrbitSet from_poly(const Poly<K>& p, bool at_infinity, bool* was_squarefree = nullptr) {
    if (p.is_zero()) throw invalid_input("orbit set: zero polynomial");
    Poly<K> sf = p.degree() == 0 ? Poly<K>::constant(p.unit()) : squarefree_part(p);
    if (was_squarefree) *was_squarefree = (sf.degree() == p.degree());
    return OrbitSet(sf, at_infinity);
  }

  const K& unit() const { return f.unit(); }
  long cardinality() const { return f.degree() + (inf ? 1 : 0); }
  bool is_empty() const { return cardinality() == 0; }

  bool contains(const P1Point<K>& pt) const {
    if (pt.inf) return inf;
    return ring::is_zero(f.eval(pt.v));
  }

  bool operator==(const OrbitSet& o) const { return inf == o.inf && f == o.f; }
  bool operator!=(const OrbitSet& o) const { return !(*this == o); }

  std::string to_string() const {
    return "{poly: " + f.to_string() + (inf ? ", inf}" : "}");
  }
};

template <class K>
OrbitSet<K> set_union(const OrbitSet<K>& a, const OrbitSet<K>& b) {
  Poly<K> g = poly_gcd(a.f, b.f);
  Poly<K> lcm_part = (a.f * b.f) / g;
  return OrbitSet<K>(monic(lcm_part), a.inf || b.inf);
}

template <class K>
OrbitSet<K> set_difference(const OrbitSet<K>& a, const OrbitSet<K>& b) {
  Poly<K> g = poly_gcd(a.f, b.f);
  return OrbitSet<K>(a.f / g, a.inf && !b.inf);
}

template <class K>
bool disjoint(const OrbitSet<K>& a, const OrbitSet<K>& b) {
  if (a.inf && b.inf) return false;
  return poly_gcd(a.f, b.f).degree() == 0;
}

// a subset of b, as divisibility of finite parts plus flag implication.
template <class K>
bool subset_of(const OrbitSet<K>& a, const OrbitSet<K>& b) {
  if (a.inf && !b.inf) return false;
  if (a.f.degree() <= 0) return true;
  return (b.f % a.f).is_zero();
}

// ---- images and preimages under a nonconstant rational map ----

// {F(x) : x in a}
template <class K>
OrbitSet<K> pushforward(const RatFun<K>& F, const OrbitSet<K>& a) {
  if (F.is_constant()) throw invalid_input("pushforward by a constant map");
  const K one = ring::one_like(a.unit());
  const Poly<K>& P = F.num();
  const Poly<K>& Q = F.den();
  OrbitSet<K> out = OrbitSet<K>::empty(one);
  if (a.f.degree() >= 1) {
    // res_y(a(y), P(y) - x Q(y)) vanishes exactly at the finite values F(beta)
    long n = std::max(P.degree(), Q.degree());
    std::vector<Poly<K>> cs;
    for (long i = 0; i <= n; ++i) {
      K pi = P.coeff(static_cast<size_t>(i));
      K qi = Q.coeff(static_cast<size_t>(i));
      cs.push_back(Poly<K>(one, {pi, -qi}));
    }
    Poly<Poly<K>> B(Poly<K>::constant(one), std::move(cs));
    Poly<K> R = resultant(a.f, B);
    if (R.is_zero()) throw std::logic_error("pushforward: vanishing resultant");
    if (R.degree() >= 1) out.f = squarefree_part(R);
    if (poly_gcd(a.f, Q).degree() > 0) out.inf = true;  // some orbit hits a pole
  }
  if (a.inf) {
    P1Point<K> img = F.eval_at_infinity();
    if (img.inf)
      out.inf = true;
    else
      out = set_union(out, OrbitSet<K>::single(img.v));
  }
  return out;
}

// {x : F(x) in b}
template <class K>
OrbitSet<K> preimage(const RatFun<K>& F, const OrbitSet<K>& b) {
  if (F.is_constant()) throw invalid_input("preimage under a constant map");
  const K one = ring::one_like(b.unit());
  const Poly<K>& P = F.num();
  const Poly<K>& Q = F.den();
  OrbitSet<K> out = OrbitSet<K>::empty(one);
  if (b.f.degree() >= 1) {
    // res_v(b(v), P(x) - v Q(x)) = prod over roots v0 of the fiber polys
    std::vector<Poly<K>> cs = {P, -Q};
    Poly<Poly<K>> Bv(Poly<K>::constant(one), std::move(cs));
    Poly<K> S = resultant(b.f, Bv);
    if (S.is_zero()) throw std::logic_error("preimage: vanishing resultant");
    if (S.degree() >= 1) out.f = squarefree_part(S);
  }
  if (b.inf && Q.degree() >= 1) out = set_union(out, OrbitSet<K>(squarefree_part(Q), false));
  P1Point<K> img_inf = F.eval_at_infinity();
  out.inf = b.contains(img_inf);
  return out;
}

}  // namespace belyi

#endif
