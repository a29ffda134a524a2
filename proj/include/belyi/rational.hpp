// Exact rational and big-integer scalars over GMP, plus the small pieces of
// integer number theory the library needs: p-adic valuations, prime search,
// gcd-free (coprime) bases for testing multiplicative identities without
// factoring, and the simplest rational inside an interval.
#ifndef BELYI_RATIONAL_HPP
#define BELYI_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace belyi {

using Int = mpz_class;
using Rat = mpq_class;

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat_of(long n, long d = 1) { return Rat(n, d); }

// Parses "a/b" or "a"; exact, no floating point.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

// Exponent of p in q; std::nullopt encodes the infinite valuation of 0.
std::optional<long> padic_valuation(const Rat& q, const Int& p);

Int next_prime(const Int& n);

// Smallest prime p with p | none of the given nonzero integers.
Int smallest_prime_dividing_none(const std::vector<Int>& values);

// Gcd-free basis of the nonzero inputs: pairwise coprime b_j > 1 such that
// every |input| is a product of powers of the b_j.  No factoring involved.
std::vector<Int> coprime_basis(const std::vector<Int>& values);

// Decides prod |x_i|^{e_i} == 1 exactly, for arbitrarily large exponents,
// by exponent bookkeeping over a coprime basis.
bool abs_power_product_is_one(const std::vector<Rat>& xs, const std::vector<Int>& es);

// Simplest rational in the open interval (lo, hi): minimal denominator,
// ties broken toward the smaller absolute numerator.  Requires lo < hi.
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

// ---- ring hooks shared by the generic polynomial code ----
// Dispatch goes through Traits<K> specializations so a coefficient type can
// be registered after the polynomial templates are defined.
namespace ring {

template <class K>
struct Traits;

template <class K>
inline bool is_zero(const K& a) { return Traits<K>::is_zero(a); }
template <class K>
inline K zero_like(const K& a) { return Traits<K>::zero_like(a); }
template <class K>
inline K one_like(const K& a) { return Traits<K>::one_like(a); }
template <class K>
inline K exact_div(const K& a, const K& b) { return Traits<K>::exact_div(a, b); }
template <class K>
inline K inverse(const K& a) { return Traits<K>::inverse(a); }
template <class K>
inline unsigned long characteristic(const K& a) { return Traits<K>::characteristic(a); }
template <class K>
inline K inv_frobenius(const K& a) { return Traits<K>::inv_frobenius(a); }
template <class K>
inline constexpr bool is_field_v = Traits<K>::is_field;

template <>
struct Traits<Int> {
  static constexpr bool is_field = false;
  static bool is_zero(const Int& a) { return sgn(a) == 0; }
  static Int zero_like(const Int&) { return Int(0); }
  static Int one_like(const Int&) { return Int(1); }
  static Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("exact_div: not divisible");
    return q;
  }
  static Int inverse(const Int&) { throw std::logic_error("Z is not a field"); }
  static unsigned long characteristic(const Int&) { return 0; }
  static Int inv_frobenius(const Int&) { throw std::logic_error("inv_frobenius over Z"); }
};

template <>
struct Traits<Rat> {
  static constexpr bool is_field = true;
  static bool is_zero(const Rat& a) { return sgn(a) == 0; }
  static Rat zero_like(const Rat&) { return Rat(0); }
  static Rat one_like(const Rat&) { return Rat(1); }
  static Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
  static Rat inverse(const Rat& a) {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return Rat(1) / a;
  }
  static unsigned long characteristic(const Rat&) { return 0; }
  static Rat inv_frobenius(const Rat&) { throw std::logic_error("inv_frobenius over Q"); }
};

}  // namespace ring

}  // namespace belyi

#endif
