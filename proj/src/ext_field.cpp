#include "belyi/ext_field.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace belyi {

namespace {

Poly<FF> powmod_fq(Poly<FF> base, const Int& e, const Poly<FF>& mod) {
  Poly<FF> r = Poly<FF>::constant(FF::one(mod.unit().ctx()));
  if (sgn(e) == 0) return r;
  base = base % mod;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = (r * r) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % mod;
  }
  return r;
}

Poly<Ext> powmod_ext(Poly<Ext> base, const Int& e, const Poly<Ext>& mod) {
  Poly<Ext> r = Poly<Ext>::constant(ring::one_like(mod.unit()));
  if (sgn(e) == 0) return r;
  base = base % mod;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = (r * r) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % mod;
  }
  return r;
}

}  // namespace

bool is_irreducible_over_fq(const Poly<FF>& h) {
  if (h.degree() < 1) return false;
  if (h.degree() == 1) return true;
  size_t m = static_cast<size_t>(h.degree());
  Int q = h.unit().field_size();
  Poly<FF> x = Poly<FF>::x(h.unit().one());
  Int qm;
  mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), m);
  if (powmod_fq(x, qm, h) != x % h) return false;
  for (size_t l = 2; l <= m; ++l) {
    if (m % l) continue;
    bool lprime = true;
    for (size_t t = 2; t * t <= l; ++t)
      if (l % t == 0) lprime = false;
    if (!lprime) continue;
    Int qe;
    mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), m / l);
    Poly<FF> d = powmod_fq(x, qe, h) - (x % h);
    if (poly_gcd(d, h).degree() != 0) return false;
  }
  return true;
}

Poly<FF> find_irreducible_over_fq(const FqCtxPtr& base, size_t m) {
  FF one = FF::one(base);
  if (m == 0) throw invalid_input("extension degree must be positive");
  if (m == 1) return Poly<FF>::x(one);
  uint64_t q = 1;
  for (size_t i = 0; i < base->deg(); ++i) q *= base->p;
  // enumerate lower coefficient vectors in mixed radix
  std::vector<uint64_t> digits(m, 0);
  for (;;) {
    std::vector<FF> cs;
    cs.reserve(m + 1);
    for (size_t i = 0; i < m; ++i) cs.push_back(FF::from_index(base, digits[i]));
    cs.push_back(one);
    Poly<FF> h(one, std::move(cs));
    if (is_irreducible_over_fq(h)) return h;
    size_t i = 0;
    while (i < m && ++digits[i] == q) digits[i++] = 0;
    if (i == m) throw std::logic_error("no irreducible polynomial found");
  }
}

namespace {

std::vector<Ext> roots_exhaustive(const Poly<Ext>& g, const ExtCtxPtr& E, uint64_t total) {
  std::vector<Ext> roots;
#if defined(_OPENMP)
  std::vector<std::vector<Ext>> shards;
#pragma omp parallel
  {
#pragma omp single
    shards.resize(static_cast<size_t>(omp_get_num_threads()));
    std::vector<Ext>& mine = shards[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(total); ++i) {
      Ext t = Ext::from_index(E, static_cast<uint64_t>(i));
      if (g.eval(t).is_zero()) mine.push_back(t);
    }
  }
  for (auto& s : shards)
    for (auto& r : s) roots.push_back(std::move(r));
#else
  for (uint64_t i = 0; i < total; ++i) {
    Ext t = Ext::from_index(E, i);
    if (g.eval(t).is_zero()) roots.push_back(t);
  }
#endif
  std::sort(roots.begin(), roots.end(),
            [](const Ext& a, const Ext& b) { return a.fp_coords() < b.fp_coords(); });
  return roots;
}

// Serial reference for tests and the benchmark harness.
std::vector<Ext> roots_exhaustive_serial(const Poly<Ext>& g, const ExtCtxPtr& E, uint64_t total) {
  std::vector<Ext> roots;
  for (uint64_t i = 0; i < total; ++i) {
    Ext t = Ext::from_index(E, i);
    if (g.eval(t).is_zero()) roots.push_back(t);
  }
  return roots;
}

void split_linear(const Poly<Ext>& g, const ExtCtxPtr& E, const Int& Q, uint64_t& counter,
                  std::vector<Ext>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    // monic y + c  ->  root -c
    Poly<Ext> f = monic(g);
    out.push_back(-f.coeff(0));
    return;
  }
  const Ext one = Ext::one(E);
  const Poly<Ext> gm = monic(g);
  uint64_t p = E->base()->p;
  for (;;) {
    ++counter;
    Ext a = Ext::from_index(E, counter);
    Poly<Ext> d(one);
    if (p == 2) {
      // trace polynomial of a*y splits the roots into the two trace classes
      size_t s = mpz_sizeinbase(Q.get_mpz_t(), 2) - 1;  // Q = 2^s
      Poly<Ext> t = Poly<Ext>(one, {Ext::zero(E), a}) % gm;
      Poly<Ext> acc = t;
      for (size_t i = 1; i < s; ++i) {
        t = (t * t) % gm;
        acc = acc + t;
      }
      d = poly_gcd(acc, gm);
    } else {
      Poly<Ext> shifted(one, {a, one});  // y + a
      Poly<Ext> h = powmod_ext(shifted, (Q - 1) / 2, gm) - Poly<Ext>::constant(one);
      d = poly_gcd(h, gm);
    }
    if (d.degree() > 0 && d.degree() < gm.degree()) {
      split_linear(d, E, Q, counter, out);
      split_linear(gm / d, E, Q, counter, out);
      return;
    }
  }
}

}  // namespace

std::vector<Ext> roots_in_ext(const Poly<FF>& g, const ExtCtxPtr& E, uint64_t enum_cap) {
  if (g.is_zero()) throw invalid_input("roots of the zero polynomial");
  // lift to Ext coefficients
  std::vector<Ext> cs;
  for (const FF& c : g.coeffs()) cs.push_back(Ext::embed(E, c));
  Poly<Ext> G(Ext::one(E), std::move(cs));
  if (G.degree() <= 0) return {};
  Int Q = Ext::one(E).field_size();
  if (Q <= Int(static_cast<unsigned long>(enum_cap))) {
    return roots_exhaustive(G, E, Q.get_ui());
  }
  // keep only the part that splits into linear factors over Ext
  Poly<Ext> x = Poly<Ext>::x(Ext::one(E));
  Poly<Ext> xq = powmod_ext(x, Q, monic(G));
  Poly<Ext> lin = poly_gcd(xq - x, G);
  std::vector<Ext> roots;
  uint64_t counter = 0;
  split_linear(lin, E, Q, counter, roots);
  std::sort(roots.begin(), roots.end(),
            [](const Ext& a, const Ext& b) { return a.fp_coords() < b.fp_coords(); });
  return roots;
}

std::vector<Ext> roots_in_ext_serial_reference(const Poly<FF>& g, const ExtCtxPtr& E) {
  std::vector<Ext> cs;
  for (const FF& c : g.coeffs()) cs.push_back(Ext::embed(E, c));
  Poly<Ext> G(Ext::one(E), std::move(cs));
  Int Q = Ext::one(E).field_size();
  return roots_exhaustive_serial(G, E, Q.get_ui());
}

}  // namespace belyi
