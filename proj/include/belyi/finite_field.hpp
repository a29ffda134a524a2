// Explicit finite fields F_q, q = p^k: a context holding the prime and the
// monic modulus over F_p, and value-type elements carrying a shared pointer
// to their context.  Arithmetic is schoolbook on uint64 limbs (p < 2^31).
#ifndef BELYI_FINITE_FIELD_HPP
#define BELYI_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "belyi/rational.hpp"

namespace belyi {

struct FqCtx {
  uint64_t p = 0;                  // prime characteristic
  std::vector<uint64_t> modulus;   // monic over F_p, lowest first, degree >= 1
  size_t deg() const { return modulus.size() - 1; }
  bool operator==(const FqCtx& o) const { return p == o.p && modulus == o.modulus; }
};

using FqCtxPtr = std::shared_ptr<const FqCtx>;

FqCtxPtr make_prime_field(uint64_t p);
// Validates that the modulus is monic and irreducible over F_p.
FqCtxPtr make_extension_field(uint64_t p, const std::vector<uint64_t>& modulus_lowest_first);

bool is_irreducible_mod_p(uint64_t p, const std::vector<uint64_t>& poly_lowest_first);

class FF {
 public:
  FF() = default;
  FF(FqCtxPtr ctx, std::vector<uint64_t> a);

  static FF zero(const FqCtxPtr& ctx);
  static FF one(const FqCtxPtr& ctx);
  static FF from_int(const FqCtxPtr& ctx, const Int& n);
  // coefficients over F_p, lowest first (may be shorter than deg)
  static FF from_coeffs(const FqCtxPtr& ctx, const std::vector<Int>& cs);

  const FqCtxPtr& ctx() const { return ctx_; }
  const std::vector<uint64_t>& limbs() const { return a_; }
  bool is_zero() const;

  FF operator+(const FF& o) const;
  FF operator-(const FF& o) const;
  FF operator-() const;
  FF operator*(const FF& o) const;
  FF operator/(const FF& o) const;
  FF inverse() const;
  FF pow(const Int& e) const;
  FF frobenius() const;      // x -> x^p
  FF inv_frobenius() const;  // inverse automorphism x -> x^{p^{k-1}}
  bool operator==(const FF& o) const;
  bool operator!=(const FF& o) const { return !(*this == o); }

  FF zero() const { return zero(ctx_); }
  FF one() const { return one(ctx_); }

  uint64_t char_p() const { return ctx_->p; }
  Int field_size() const;  // p^k

  // mixed-radix index over F_p digits; used by the enumeration kernels
  uint64_t index() const;
  static FF from_index(const FqCtxPtr& ctx, uint64_t idx);

  std::string to_string() const;

 private:
  void check_same(const FF& o) const;
  FqCtxPtr ctx_;
  std::vector<uint64_t> a_;  // length deg, reduced mod p
};

namespace ring {
template <>
struct Traits<FF> {
  static constexpr bool is_field = true;
  static bool is_zero(const FF& a) { return a.is_zero(); }
  static FF zero_like(const FF& a) { return a.zero(); }
  static FF one_like(const FF& a) { return a.one(); }
  static FF exact_div(const FF& a, const FF& b) { return a / b; }
  static FF inverse(const FF& a) { return a.inverse(); }
  static unsigned long characteristic(const FF& a) { return a.char_p(); }
  static FF inv_frobenius(const FF& a) { return a.inv_frobenius(); }
};
}  // namespace ring

}  // namespace belyi

#endif
