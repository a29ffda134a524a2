// Reduced rational functions P/Q over a coefficient field: Q monic and
// gcd(P, Q) = 1, maintained as an invariant.  Evaluation is total on the
// projective line.
#ifndef BELYI_RATIONAL_FUNCTION_HPP
#define BELYI_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>

#include "belyi/polynomial.hpp"

namespace belyi {

// A point of P^1 over K: either a field element or the point at infinity.
template <class K>
struct P1Point {
  bool inf = false;
  K v;
  static P1Point infinity(const K& sample) { return {true, ring::zero_like(sample)}; }
  static P1Point finite(K x) { return {false, std::move(x)}; }
  bool operator==(const P1Point& o) const {
    if (inf != o.inf) return false;
    return inf || v == o.v;
  }
  std::string to_string() const;
};

template <>
inline std::string P1Point<Rat>::to_string() const {
  return inf ? "inf" : rat_to_string(v);
}
template <class K>
inline std::string P1Point<K>::to_string() const {
  return inf ? "inf" : v.to_string();
}

template <class K>
class RatFun {
 public:
  RatFun(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
  static RatFun from_poly(Poly<K> p) {
    Poly<K> one = Poly<K>::constant(p.unit());
    return RatFun(std::move(p), std::move(one));
  }
  static RatFun identity(const K& one) {
    return from_poly(Poly<K>::x(one));
  }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  const K& unit() const { return num_.unit(); }

  long degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFun operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFun operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RatFun operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }
  RatFun operator/(const RatFun& o) const {
    if (o.num_.is_zero()) throw std::domain_error("division by the zero function");
    return RatFun(num_ * o.den_, den_ * o.num_);
  }
  RatFun operator-() const { return RatFun(-num_, den_); }

  // (P/Q)' = (P'Q - PQ')/Q^2, reduced
  RatFun derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  P1Point<K> eval(const P1Point<K>& x) const {
    if (x.inf) return eval_at_infinity();
    K p = num_.eval(x.v), q = den_.eval(x.v);
    if (ring::is_zero(q)) return P1Point<K>::infinity(unit());
    return P1Point<K>::finite(p / q);
  }
  P1Point<K> eval_at_infinity() const {
    long dp = num_.degree(), dq = den_.degree();
    if (dp > dq) return P1Point<K>::infinity(unit());
    if (dp < dq) return P1Point<K>::finite(ring::zero_like(unit()));
    return P1Point<K>::finite(num_.lc() / den_.lc());
  }

  std::string to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

 private:
  void reduce() {
    if (den_.is_zero()) throw invalid_input("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<K>::constant(num_.unit());
      return;
    }
    Poly<K> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    K lead = den_.lc();
    if (!(lead == ring::one_like(lead))) {
      K inv = ring::inverse(lead);
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Poly<K> num_, den_;
};

// Reduced composition outer(inner).  The expansion threshold guards against
// the factorial degree growth this library otherwise never materializes.
template <class K>
RatFun<K> compose(const RatFun<K>& outer, const RatFun<K>& inner, long expand_threshold) {
  if (outer.is_constant() || inner.is_constant())
    throw invalid_input("compose: constant map");
  long d = outer.degree() * inner.degree();
  if (d > expand_threshold)
    throw resource_limit("compose: degree " + std::to_string(d) + " exceeds expansion threshold");
  const Poly<K>& p = inner.num();
  const Poly<K>& q = inner.den();
  long n = outer.degree();
  // homogenize both chains with q^n
  auto plug = [&](const Poly<K>& f) {
    Poly<K> acc(f.unit());
    for (long i = 0; i <= n; ++i) {
      K c = f.coeff(static_cast<size_t>(i));
      if (ring::is_zero(c)) continue;
      acc = acc + p.pow(static_cast<unsigned long>(i)) *
                      q.pow(static_cast<unsigned long>(n - i)) * c;
    }
    return acc;
  };
  RatFun<K> r(plug(outer.num()), plug(outer.den()));
  if (r.degree() != d) throw std::logic_error("compose: degree not multiplicative");
  return r;
}

}  // namespace belyi

#endif
