// Degree-1 projective transformations and the three input-normalisation
// devices built from them: moving a marked point to 0, the size-separating
// map s/(x-r) with certified bounds, and integerization ahead of pinning.
#ifndef BELYI_MOEBIUS_HPP
#define BELYI_MOEBIUS_HPP

#include <vector>

#include "belyi/orbit_set.hpp"
#include "belyi/root_bounds.hpp"

namespace belyi {

template <class K>
struct Moebius {
  K a, b, c, d;  // x -> (a x + b)/(c x + d)

  Moebius(K a_, K b_, K c_, K d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (ring::is_zero(det())) throw invalid_input("Moebius map with zero determinant");
  }
  static Moebius identity(const K& one) {
    return Moebius(one, ring::zero_like(one), ring::zero_like(one), one);
  }
  static Moebius translation(const K& t) {
    K one = ring::one_like(t);
    return Moebius(one, t, ring::zero_like(t), one);
  }
  static Moebius scaling(const K& s) {
    K one = ring::one_like(s);
    return Moebius(s, ring::zero_like(s), ring::zero_like(s), one);
  }
  // 1/(x - u)
  static Moebius inverted_at(const K& u) {
    K one = ring::one_like(u);
    return Moebius(ring::zero_like(u), one, one, -u);
  }

  K det() const { return a * d - b * c; }

  Moebius inverse() const { return Moebius(d, -b, -c, a); }

  // (this o other)(x) = this(other(x)): the matrix product
  Moebius compose_after(const Moebius& o) const {
    return Moebius(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
  }

  P1Point<K> apply(const P1Point<K>& x) const {
    if (x.inf) {
      if (ring::is_zero(c)) return P1Point<K>::infinity(a);
      return P1Point<K>::finite(a / c);
    }
    K den = c * x.v + d;
    if (ring::is_zero(den)) return P1Point<K>::infinity(a);
    return P1Point<K>::finite((a * x.v + b) / den);
  }

  RatFun<K> as_ratfun() const {
    K one = ring::one_like(a);
    Poly<K> num(one, {b, a});
    Poly<K> den(one, {d, c});
    return RatFun<K>(num, den);
  }

  bool operator==(const Moebius& o) const {
    // projective equality: cross-multiplied coefficient proportionality
    return a * o.b == b * o.a && a * o.c == c * o.a && a * o.d == d * o.a &&
           b * o.c == c * o.b && b * o.d == d * o.b && c * o.d == d * o.c;
  }
};

// ---- normalize_input: assume alpha = 0 and infinity not in A ----

template <class K>
struct NormalizedInput {
  Moebius<K> psi;
  OrbitSet<K> image;  // psi(A); alpha maps to 0
};

inline Rat smallest_nonneg_integer_avoiding(const OrbitSet<Rat>& A,
                                            const std::vector<Rat>& extra) {
  for (Int k(0);; ++k) {
    Rat q(k);
    bool bad = A.contains(P1Point<Rat>::finite(q));
    for (const Rat& e : extra)
      if (e == q) bad = true;
    if (!bad) return q;
  }
}

inline NormalizedInput<Rat> normalize_input(const OrbitSet<Rat>& A, const P1Point<Rat>& alpha) {
  if (A.contains(alpha)) throw invalid_input("normalize_input: alpha lies in A");
  Moebius<Rat> psi = Moebius<Rat>::identity(Rat(1));
  if (alpha.inf) {
    Rat u = smallest_nonneg_integer_avoiding(A, {});
    psi = Moebius<Rat>::inverted_at(u);
  } else if (!A.inf) {
    psi = Moebius<Rat>::translation(-alpha.v);
  } else {
    Rat u = smallest_nonneg_integer_avoiding(A, {alpha.v});
    Moebius<Rat> inv = Moebius<Rat>::inverted_at(u);
    Rat t = Rat(1) / (alpha.v - u);
    psi = Moebius<Rat>::translation(-t).compose_after(inv);
  }
  OrbitSet<Rat> img = pushforward(psi.as_ratfun(), A);
  if (img.inf) throw std::logic_error("normalize_input: infinity survived");
  P1Point<Rat> a0 = psi.apply(alpha);
  if (a0.inf || sgn(a0.v) != 0) throw std::logic_error("normalize_input: alpha not at 0");
  return {psi, img};
}

// ---- the separating map of the size-change lemma ----

// psi = s/(x - r) with |psi(0)| > c and, certified through root bounds,
// |psi(beta)| < 1 for every root beta of A.  Requires 0 not in A, no
// infinity, nonempty A.
inline Moebius<Rat> separating_map(const OrbitSet<Rat>& A, const Rat& c) {
  if (A.inf || A.f.degree() < 1) throw invalid_input("separating_map: need a finite nonempty set");
  if (ring::is_zero(A.f.coeff(0))) throw invalid_input("separating_map: 0 lies in A");
  if (!(c > 1)) throw invalid_input("separating_map: c must exceed 1");
  Rat lb = root_lower_bound(A.f);   // min |beta| >= lb > 0
  Rat bound = lb / (c + 1);
  // largest 1/2^k strictly below bound
  Rat r(1);
  while (!(r < bound)) r /= 2;
  for (;;) {
    Rat L = min_root_distance_lower(A.f, r);  // min |beta - r| >= L > 0
    if (r * c < L) {
      Rat s = (r * c + L) / 2;
      return Moebius<Rat>(Rat(0), s, Rat(1), -r);
    }
    r /= 2;  // shrinking r grows the reachable gap; terminates
  }
}

// ---- integerization ahead of the pinning construction ----

struct IntegerizedData {
  std::vector<Moebius<Rat>> stages;
  std::vector<Int> B;
  Int beta;
};

inline IntegerizedData integerize(std::vector<P1Point<Rat>> B, Rat beta) {
  for (const auto& b : B)
    if (!b.inf && b.v == beta) throw invalid_input("integerize: beta lies in B");
  IntegerizedData out;
  bool has_inf = false;
  for (const auto& b : B) has_inf |= b.inf;
  if (has_inf) {
    // 1/(x - a) with a the smallest nonnegative integer avoiding B and beta
    Rat a(0);
    for (Int k(0);; ++k) {
      Rat q(k);
      bool bad = (q == beta);
      for (const auto& b : B) bad |= (!b.inf && b.v == q);
      if (!bad) {
        a = q;
        break;
      }
    }
    Moebius<Rat> mu = Moebius<Rat>::inverted_at(a);
    out.stages.push_back(mu);
    for (auto& b : B) b = mu.apply(b);
    beta = mu.apply(P1Point<Rat>::finite(beta)).v;
  }
  Int L(1);
  for (const auto& b : B) L = lcm(L, Int(b.v.get_den()));
  L = lcm(L, Int(beta.get_den()));
  if (L != 1) out.stages.push_back(Moebius<Rat>::scaling(Rat(L)));
  for (const auto& b : B) {
    Rat v = b.v * Rat(L);
    v.canonicalize();
    out.B.emplace_back(v.get_num());
  }
  Rat bv = beta * Rat(L);
  bv.canonicalize();
  out.beta = Int(bv.get_num());
  for (const Int& x : out.B)
    if (x == out.beta) throw std::logic_error("integerize: beta collided with B");
  return out;
}

}  // namespace belyi

#endif
