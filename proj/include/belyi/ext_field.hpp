// Relative extensions F_{q^m} = F_q[y]/(H) with H monic irreducible over the
// base field F_q.  Keeping the extension relative (rather than absolute over
// F_p) means base-field coefficients embed as constants and projections back
// to F_q are just degree checks.  Includes deterministic irreducible search
// and root finding (exhaustive below the cap, equal-degree splitting above).
#ifndef BELYI_EXT_FIELD_HPP
#define BELYI_EXT_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "belyi/finite_field.hpp"
#include "belyi/polynomial.hpp"

namespace belyi {

struct ExtCtx {
  Poly<FF> modulus;  // monic over F_q, degree m >= 1
  ExtCtx(Poly<FF> H) : modulus(std::move(H)) {}
  size_t deg() const { return static_cast<size_t>(modulus.degree()); }
  const FqCtxPtr& base() const { return modulus.unit().ctx(); }
};

using ExtCtxPtr = std::shared_ptr<const ExtCtx>;

class Ext {
 public:
  Ext() = default;
  Ext(ExtCtxPtr ctx, Poly<FF> v) : ctx_(std::move(ctx)), v_(std::move(v)) { reduce(); }

  static Ext zero(const ExtCtxPtr& c) { return Ext(c, Poly<FF>(FF::one(c->base()))); }
  static Ext one(const ExtCtxPtr& c) { return Ext(c, Poly<FF>::constant(FF::one(c->base()))); }
  static Ext embed(const ExtCtxPtr& c, const FF& a) { return Ext(c, Poly<FF>::constant(a)); }
  static Ext gen(const ExtCtxPtr& c) { return Ext(c, Poly<FF>::x(FF::one(c->base()))); }

  const ExtCtxPtr& ctx() const { return ctx_; }
  const Poly<FF>& rep() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  // constant elements are exactly the image of F_q
  std::optional<FF> project() const {
    if (v_.is_zero()) return FF::zero(ctx_->base());
    if (v_.degree() == 0) return v_.coeff(0);
    return std::nullopt;
  }

  Ext operator+(const Ext& o) const { return Ext(ctx_, v_ + o.v_); }
  Ext operator-(const Ext& o) const { return Ext(ctx_, v_ - o.v_); }
  Ext operator-() const { return Ext(ctx_, -v_); }
  Ext operator*(const Ext& o) const { return Ext(ctx_, v_ * o.v_); }
  Ext inverse() const;
  Ext operator/(const Ext& o) const { return *this * o.inverse(); }
  Ext pow(const Int& e) const;
  bool operator==(const Ext& o) const { return v_ == o.v_; }
  bool operator!=(const Ext& o) const { return !(*this == o); }

  Ext zero() const { return zero(ctx_); }
  Ext one() const { return one(ctx_); }

  uint64_t char_p() const { return ctx_->base()->p; }
  Int field_size() const;  // q^m

  // F_p coordinates of the element, length k*m; the span machinery uses these
  std::vector<uint64_t> fp_coords() const;

  uint64_t index() const;  // mixed radix over base-field indices
  static Ext from_index(const ExtCtxPtr& c, uint64_t idx);

  Ext inv_frobenius() const { return pow(field_size() / Int(static_cast<long>(char_p()))); }

  std::string to_string() const;

 private:
  void reduce() {
    if (!ctx_) return;
    v_ = v_ % ctx_->modulus;
  }
  ExtCtxPtr ctx_;
  Poly<FF> v_{FF()};
};

namespace ring {
template <>
struct Traits<Ext> {
  static constexpr bool is_field = true;
  static bool is_zero(const Ext& a) { return a.is_zero(); }
  static Ext zero_like(const Ext& a) { return a.zero(); }
  static Ext one_like(const Ext& a) { return a.one(); }
  static Ext exact_div(const Ext& a, const Ext& b) { return a / b; }
  static Ext inverse(const Ext& a) { return a.inverse(); }
  static unsigned long characteristic(const Ext& a) { return a.char_p(); }
  static Ext inv_frobenius(const Ext& a) { return a.inv_frobenius(); }
};
}  // namespace ring

inline Ext Ext::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_{q^m}");
  // extended euclid over F_q[y]
  Poly<FF> r0 = ctx_->modulus, r1 = v_;
  Poly<FF> s0(v_.unit()), s1 = Poly<FF>::constant(FF::one(ctx_->base()));
  while (!r1.is_zero()) {
    auto [q, r2] = divrem(r0, r1);
    Poly<FF> s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::logic_error("extension modulus not irreducible");
  return Ext(ctx_, s0 * ring::inverse(r0.lc()));
}

inline Ext Ext::pow(const Int& e) const {
  if (sgn(e) < 0) return inverse().pow(-e);
  Ext r = one();
  if (sgn(e) == 0) return r;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  Ext b = *this;
  for (size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * b;
  }
  return r;
}

inline Int Ext::field_size() const {
  Int q = FF::one(ctx_->base()).field_size();
  Int Q;
  mpz_pow_ui(Q.get_mpz_t(), q.get_mpz_t(), ctx_->deg());
  return Q;
}

inline std::vector<uint64_t> Ext::fp_coords() const {
  size_t k = ctx_->base()->deg(), m = ctx_->deg();
  std::vector<uint64_t> out(k * m, 0);
  for (size_t j = 0; j < static_cast<size_t>(v_.degree() + 1); ++j) {
    const auto& limbs = v_.coeff(j).limbs();
    for (size_t i = 0; i < limbs.size() && i < k; ++i) out[j * k + i] = limbs[i];
  }
  return out;
}

inline uint64_t Ext::index() const {
  uint64_t q = 1;
  for (size_t i = 0; i < ctx_->base()->deg(); ++i) q *= ctx_->base()->p;
  uint64_t idx = 0;
  for (size_t j = ctx_->deg(); j-- > 0;) idx = idx * q + v_.coeff(j).index();
  return idx;
}

inline Ext Ext::from_index(const ExtCtxPtr& c, uint64_t idx) {
  uint64_t q = 1;
  for (size_t i = 0; i < c->base()->deg(); ++i) q *= c->base()->p;
  std::vector<FF> cs;
  for (size_t j = 0; j < c->deg(); ++j) {
    cs.push_back(FF::from_index(c->base(), idx % q));
    idx /= q;
  }
  return Ext(c, Poly<FF>(FF::one(c->base()), std::move(cs)));
}

inline std::string Ext::to_string() const {
  return "ext(" + v_.to_string() + ")";
}

// ---- irreducible search over F_q ----

bool is_irreducible_over_fq(const Poly<FF>& h);

// Deterministic: first monic polynomial of degree m (coefficients enumerated
// lexicographically by field index) that is irreducible over F_q.
Poly<FF> find_irreducible_over_fq(const FqCtxPtr& base, size_t m);

// All roots in F_{q^m} of a squarefree g over F_q.  Exhaustive scan below
// the cap (OpenMP when available), Cantor-Zassenhaus style equal-degree
// splitting above it.
std::vector<Ext> roots_in_ext(const Poly<FF>& g, const ExtCtxPtr& E, uint64_t enum_cap);

// Plain single-threaded scan over the whole field; kept as the reference
// implementation the parallel kernel is tested and benchmarked against.
std::vector<Ext> roots_in_ext_serial_reference(const Poly<FF>& g, const ExtCtxPtr& E);

}  // namespace belyi

#endif
