#include "belyi/rational.hpp"

#include <algorithm>
#include <deque>

namespace belyi {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw invalid_input("empty rational literal");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw invalid_input("bad rational literal: " + s);
  if (sgn(Int(q.get_den())) == 0) throw invalid_input("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::optional<long> padic_valuation(const Rat& q, const Int& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw invalid_input("padic_valuation: p must be prime");
  if (sgn(q) == 0) return std::nullopt;
  Int num = q.get_num(), den = q.get_den(), tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

Int next_prime(const Int& n) {
  Int p;
  mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
  return p;
}

Int smallest_prime_dividing_none(const std::vector<Int>& values) {
  Int p = 2;
  for (;;) {
    bool ok = true;
    for (const Int& v : values) {
      if (sgn(v) != 0 && mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
    p = next_prime(p);
  }
}

std::vector<Int> coprime_basis(const std::vector<Int>& values) {
  std::deque<Int> work;
  for (const Int& v : values) {
    Int a = abs(v);
    if (a > 1) work.push_back(a);
  }
  std::vector<Int> basis;
  while (!work.empty()) {
    Int a = work.front();
    work.pop_front();
    if (a == 1) continue;
    bool split = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      Int g = gcd(a, basis[i]);
      if (g == 1) continue;
      // refine: basis[i] -> {g-parts}, push cofactors back
      Int b = basis[i];
      basis.erase(basis.begin() + static_cast<long>(i));
      work.push_back(g);
      work.push_back(ring::exact_div(b, g) * 1);
      work.push_back(ring::exact_div(a, g) * 1);
      // keep refining g against the rest later; the pushed parts re-enter
      split = true;
      break;
    }
    if (!split) basis.push_back(a);
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

bool abs_power_product_is_one(const std::vector<Rat>& xs, const std::vector<Int>& es) {
  if (xs.size() != es.size()) throw std::logic_error("power product: length mismatch");
  std::vector<Int> parts;
  for (const Rat& x : xs) {
    if (sgn(x) == 0) throw invalid_input("power product: zero base");
    parts.push_back(Int(x.get_num()));
    parts.push_back(Int(x.get_den()));
  }
  std::vector<Int> basis = coprime_basis(parts);
  for (const Int& b : basis) {
    Int total = 0, tmp;
    for (size_t i = 0; i < xs.size(); ++i) {
      Int num = abs(Int(xs[i].get_num()));
      Int den = Int(xs[i].get_den());
      long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), b.get_mpz_t()));
      long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), b.get_mpz_t()));
      total += es[i] * Int(vn - vd);
    }
    if (sgn(total) != 0) return false;
  }
  return true;
}

// Stern-Brocot walk; standard "simplest rational in an interval" recursion.
static Rat simplest_in_closed(const Rat& lo, const Rat& hi) {
  // precondition: 0 < lo <= hi
  Int a = lo.get_num(), b = lo.get_den();
  Int c = hi.get_num(), d = hi.get_den();
  Int fl = a / b;  // floor since a,b > 0
  if (fl * b == a) return Rat(fl);          // lo integral
  if (fl < c / d || (fl + 1) * d <= c) {    // an integer lies in [lo, hi]
    return Rat(fl + 1);
  }
  // recurse on fractional parts: simplest(lo,hi) = fl + 1/simplest(1/(hi-fl),1/(lo-fl))
  Rat rlo = Rat(d, c - fl * d);
  Rat rhi = Rat(b, a - fl * b);
  Rat inner = simplest_in_closed(rlo, rhi);
  return Rat(fl) + Rat(1) / inner;
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw invalid_input("simplest_rational_between: empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return Rat(0);
  if (sgn(lo) == 0) {
    // (0, hi): the simplest value is 1/k for the least k with 1/k < hi
    Rat inv = Rat(1) / hi;
    Int k = Int(inv.get_num()) / Int(inv.get_den()) + 1;
    if (hi > 1) return Rat(1);
    return Rat(1) / Rat(k);
  }
  if (sgn(hi) == 0) return -simplest_rational_between(-hi, -lo);
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);
  // now 0 < lo < hi: shrink to an interior closed interval to keep openness
  Rat mid = (lo + hi) / 2;
  Rat q1 = (lo + mid) / 2, q2 = (mid + hi) / 2;
  Rat r = simplest_in_closed(q1, q2);
  // r lies in [q1,q2] subset (lo,hi)
  return r;
}

}  // namespace belyi
