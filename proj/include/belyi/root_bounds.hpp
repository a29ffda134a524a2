// Certified rational bounds on complex root magnitudes: a Cauchy-type upper
// bound and, through the reversed polynomial, a lower bound.  Rigorous for
// every conjugate at once, so no embedding of Q-bar into C is ever chosen.
#ifndef BELYI_ROOT_BOUNDS_HPP
#define BELYI_ROOT_BOUNDS_HPP

#include "belyi/polynomial.hpp"

namespace belyi {

// 1 + max |a_i / a_n|: every complex root has absolute value below this.
inline Rat cauchy_upper_bound(const Poly<Rat>& a) {
  if (a.is_zero()) throw invalid_input("root bound of zero polynomial");
  Rat m(0);
  long n = a.degree();
  for (long i = 0; i < n; ++i) {
    Rat t = abs(a.coeff(static_cast<size_t>(i)) / a.lc());
    if (t > m) m = t;
  }
  return Rat(1) + m;
}

// Positive lower bound on |root|; needs a(0) != 0.
inline Rat root_lower_bound(const Poly<Rat>& a) {
  if (a.is_zero()) throw invalid_input("root bound of zero polynomial");
  if (ring::is_zero(a.coeff(0))) throw invalid_input("root lower bound requires a(0) != 0");
  if (a.degree() == 0) throw invalid_input("constant polynomial has no roots");
  return Rat(1) / cauchy_upper_bound(a.reversed());
}

struct RootRadiusBounds {
  Rat upper;
  bool lower_defined = false;
  Rat lower;
};

inline RootRadiusBounds root_radius_bounds(const Poly<Rat>& a) {
  RootRadiusBounds b;
  b.upper = cauchy_upper_bound(a);
  if (a.degree() >= 1 && !ring::is_zero(a.coeff(0))) {
    b.lower_defined = true;
    b.lower = root_lower_bound(a);
  }
  return b;
}

// Certified positive lower bound on min over roots beta of |beta - r|,
// via the reversed shifted polynomial; requires a(r) != 0.
inline Rat min_root_distance_lower(const Poly<Rat>& a, const Rat& r) {
  Poly<Rat> sh = a.shift_x(r);
  return root_lower_bound(sh);
}

}  // namespace belyi

#endif
