#include "belyi/finite_field.hpp"

#include <stdexcept>

namespace belyi {

namespace {

using Vec = std::vector<uint64_t>;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invm(uint64_t a, uint64_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  return powm(a, p - 2, p);
}

// plain F_p[x] helpers on coefficient vectors (lowest first, trimmed)
Vec poly_mul(const Vec& a, const Vec& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      unsigned __int128 t = static_cast<unsigned __int128>(a[i]) * b[j] + c[i + j];
      c[i + j] = static_cast<uint64_t>(t % p);
    }
  }
  trim(c);
  return c;
}

Vec poly_sub(Vec a, const Vec& b, uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = subm(a[i], b[i], p);
  trim(a);
  return a;
}

Vec poly_rem(Vec a, const Vec& b, uint64_t p) {
  if (b.empty()) throw std::domain_error("poly_rem by zero");
  uint64_t blc_inv = invm(b.back(), p);
  trim(a);
  while (a.size() >= b.size()) {
    uint64_t c = mulm(a.back(), blc_inv, p);
    size_t k = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[k + i] = subm(a[k + i], mulm(c, b[i], p), p);
    trim(a);  // the leading term cancels exactly, so this always shrinks a
  }
  return a;
}

Vec poly_powmod(Vec base, const Int& e, const Vec& mod, uint64_t p) {
  Vec r = {1};
  base = poly_rem(std::move(base), mod, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = poly_rem(poly_mul(r, r, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_rem(poly_mul(r, base, p), mod, p);
  }
  return r;
}

Vec poly_gcd_fp(Vec a, Vec b, uint64_t p) {
  while (!b.empty()) {
    Vec r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    uint64_t inv = invm(a.back(), p);
    for (uint64_t& c : a) c = mulm(c, inv, p);
  }
  return a;
}

// extended euclid: returns (g, u) with u*a = g mod m, g monic
std::pair<Vec, Vec> poly_half_xgcd(Vec a, Vec m, uint64_t p) {
  Vec r0 = std::move(m), r1 = std::move(a);
  Vec s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1
    Vec q;
    Vec rem = r0;
    uint64_t lc_inv = invm(r1.back(), p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      uint64_t c = mulm(rem.back(), lc_inv, p);
      size_t k = rem.size() - r1.size();
      if (q.size() < k + 1) q.resize(k + 1, 0);
      q[k] = addm(q[k], c, p);
      for (size_t i = 0; i < r1.size(); ++i) rem[k + i] = subm(rem[k + i], mulm(c, r1[i], p), p);
      trim(rem);
    }
    Vec s2 = poly_sub(s0, poly_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // normalize r0 monic
  if (!r0.empty()) {
    uint64_t inv = invm(r0.back(), p);
    for (uint64_t& c : r0) c = mulm(c, inv, p);
    for (uint64_t& c : s0) c = mulm(c, inv, p);
  }
  return {r0, s0};
}

bool is_prime_u64(uint64_t p) {
  Int n(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

}  // namespace

bool is_irreducible_mod_p(uint64_t p, const std::vector<uint64_t>& poly) {
  Vec f = poly;
  trim(f);
  if (f.size() < 2) return false;
  size_t d = f.size() - 1;
  if (d == 1) return true;
  // x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) = 1 for prime l | d
  Vec x = {0, 1};
  Int P(static_cast<unsigned long>(p));
  Int pd;
  mpz_pow_ui(pd.get_mpz_t(), P.get_mpz_t(), d);
  Vec xp = poly_powmod(x, pd, f, p);
  if (xp != poly_rem(x, f, p)) return false;
  for (size_t l = 2; l <= d; ++l) {
    if (d % l != 0) continue;
    bool lprime = true;
    for (size_t t = 2; t * t <= l; ++t)
      if (l % t == 0) lprime = false;
    if (!lprime) continue;
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), P.get_mpz_t(), d / l);
    Vec xe = poly_powmod(x, pe, f, p);
    Vec diff = poly_sub(xe, x, p);
    Vec g = poly_gcd_fp(diff, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FqCtxPtr make_prime_field(uint64_t p) {
  if (p < 2 || p >= (1ull << 31) || !is_prime_u64(p))
    throw invalid_input("characteristic must be a prime below 2^31");
  auto ctx = std::make_shared<FqCtx>();
  ctx->p = p;
  ctx->modulus = {0, 1};  // F_p = F_p[x]/(x)
  return ctx;
}

FqCtxPtr make_extension_field(uint64_t p, const std::vector<uint64_t>& modulus) {
  if (p < 2 || p >= (1ull << 31) || !is_prime_u64(p))
    throw invalid_input("characteristic must be a prime below 2^31");
  Vec m = modulus;
  for (uint64_t& c : m) c %= p;
  trim(m);
  if (m.size() < 2) throw invalid_input("modulus must be nonconstant");
  if (m.back() != 1) throw invalid_input("modulus must be monic");
  if (m.size() > 2 && !is_irreducible_mod_p(p, m))
    throw invalid_input("modulus is not irreducible over F_p");
  auto ctx = std::make_shared<FqCtx>();
  ctx->p = p;
  ctx->modulus = std::move(m);
  return ctx;
}

FF::FF(FqCtxPtr ctx, std::vector<uint64_t> a) : ctx_(std::move(ctx)), a_(std::move(a)) {
  const uint64_t p = ctx_->p;
  for (uint64_t& c : a_) c %= p;
  a_ = poly_rem(std::move(a_), ctx_->modulus, p);
  a_.resize(ctx_->deg(), 0);
}

FF FF::zero(const FqCtxPtr& ctx) { return FF(ctx, {}); }
FF FF::one(const FqCtxPtr& ctx) { return FF(ctx, {1}); }

FF FF::from_int(const FqCtxPtr& ctx, const Int& n) {
  Int r = n % Int(static_cast<unsigned long>(ctx->p));
  if (sgn(r) < 0) r += Int(static_cast<unsigned long>(ctx->p));
  return FF(ctx, {r.get_ui()});
}

FF FF::from_coeffs(const FqCtxPtr& ctx, const std::vector<Int>& cs) {
  std::vector<uint64_t> v;
  Int P(static_cast<unsigned long>(ctx->p));
  for (const Int& c : cs) {
    Int r = c % P;
    if (sgn(r) < 0) r += P;
    v.push_back(r.get_ui());
  }
  return FF(ctx, std::move(v));
}

bool FF::is_zero() const {
  for (uint64_t c : a_)
    if (c) return false;
  return true;
}

void FF::check_same(const FF& o) const {
  if (!ctx_ || !o.ctx_) throw std::logic_error("null finite field element");
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) throw invalid_input("finite field mismatch");
}

FF FF::operator+(const FF& o) const {
  check_same(o);
  FF r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = addm(a_[i], o.a_[i], ctx_->p);
  return r;
}
FF FF::operator-(const FF& o) const {
  check_same(o);
  FF r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = subm(a_[i], o.a_[i], ctx_->p);
  return r;
}
FF FF::operator-() const {
  FF r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = subm(0, a_[i], ctx_->p);
  return r;
}
FF FF::operator*(const FF& o) const {
  check_same(o);
  Vec prod = poly_mul(a_, o.a_, ctx_->p);
  prod = poly_rem(std::move(prod), ctx_->modulus, ctx_->p);
  prod.resize(ctx_->deg(), 0);
  FF r;
  r.ctx_ = ctx_;
  r.a_ = std::move(prod);
  return r;
}
FF FF::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_q");
  Vec a = a_;
  trim(a);
  auto [g, u] = poly_half_xgcd(a, ctx_->modulus, ctx_->p);
  if (g.size() != 1) throw std::logic_error("modulus not irreducible (gcd found)");
  // g == 1 after normalization, so u is the inverse
  Vec v = poly_rem(std::move(u), ctx_->modulus, ctx_->p);
  v.resize(ctx_->deg(), 0);
  FF r;
  r.ctx_ = ctx_;
  r.a_ = std::move(v);
  return r;
}
FF FF::operator/(const FF& o) const { return *this * o.inverse(); }

FF FF::pow(const Int& e) const {
  if (sgn(e) < 0) return inverse().pow(-e);
  FF r = one();
  FF b = *this;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * b;
  }
  return r;
}

FF FF::frobenius() const { return pow(Int(static_cast<unsigned long>(ctx_->p))); }

FF FF::inv_frobenius() const {
  size_t k = ctx_->deg();
  Int e(1);
  Int P(static_cast<unsigned long>(ctx_->p));
  for (size_t i = 0; i + 1 < k; ++i) e *= P;
  return pow(e);
}

bool FF::operator==(const FF& o) const {
  if (!ctx_ || !o.ctx_) return !ctx_ && !o.ctx_;
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) return false;
  return a_ == o.a_;
}

Int FF::field_size() const {
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(ctx_->p), ctx_->deg());
  return q;
}

uint64_t FF::index() const {
  uint64_t idx = 0;
  for (size_t i = a_.size(); i-- > 0;) idx = idx * ctx_->p + a_[i];
  return idx;
}

FF FF::from_index(const FqCtxPtr& ctx, uint64_t idx) {
  std::vector<uint64_t> v(ctx->deg(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = idx % ctx->p;
    idx /= ctx->p;
  }
  return FF(ctx, std::move(v));
}

std::string FF::to_string() const {
  if (ctx_->deg() == 1) return std::to_string(a_.empty() ? 0 : a_[0]);
  std::string s = "[";
  for (size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a_[i]);
  }
  return s + "]";
}

}  // namespace belyi
