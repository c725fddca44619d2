#include "qcmc/circulant.hpp"

namespace qcmc {

Circulant circ_identity(size_t p, unsigned deg) {
  Circulant c(p, deg);
  c.first_row[0] = 1;
  return c;
}

Mat circ_expand(const Circulant& c) {
  size_t p = c.p();
  Mat m(p, p, c.deg);
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j) m.at(i, j) = c.first_row[(j + p - i) % p];
  return m;
}

Circulant circ_add(const Circulant& a, const Circulant& b) {
  if (a.p() != b.p() || a.deg != b.deg) fail_param("circulant shape mismatch in add");
  Circulant r(a.p(), a.deg);
  for (size_t i = 0; i < a.p(); ++i) r.first_row[i] = a.first_row[i] ^ b.first_row[i];
  return r;
}

Circulant circ_mul(const Circulant& a, const Circulant& b) {
  if (a.p() != b.p() || a.deg != b.deg) fail_param("circulant shape mismatch in multiply");
  const Field& f = Field::get(a.deg);
  size_t p = a.p();
  Circulant r(p, a.deg);
  for (size_t i = 0; i < p; ++i) {
    if (a.first_row[i] == 0) continue;
    for (size_t j = 0; j < p; ++j) {
      if (b.first_row[j] == 0) continue;
      size_t k = i + j >= p ? i + j - p : i + j;
      r.first_row[k] ^= f.mul(a.first_row[i], b.first_row[j]);
    }
  }
  return r;
}

size_t circ_weight(const Circulant& c) {
  size_t w = 0;
  for (uint16_t x : c.first_row)
    if (x) ++w;
  return w;
}

bool circ_is_invertible(const Circulant& c) {
  size_t p = c.p();
  if (p == 1) return c.first_row[0] != 0;
  // x^p - 1 = (x - 1) * phi_p(x); when 2 generates (Z/p)* and l = 1, phi_p is
  // irreducible over GF(2), so the ring splits into two fields and a row
  // polynomial is a unit iff it is nonzero in both factors: odd weight and
  // not the all-ones row (the only nonzero multiple of phi_p below degree p)
  if (c.deg == 1 && is_prime(p) && p > 2 && is_primitive_root(2, p)) {
    size_t w = circ_weight(c);
    return (w % 2 == 1) && w != p;
  }
  return rank(circ_expand(c)) == p;
}

namespace {

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
  unsigned __int128 acc = 1, b = base % mod;
  while (exp) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<uint64_t>(acc);
}

}  // namespace

bool is_primitive_root(uint64_t g, uint64_t p) {
  if (!is_prime(p)) fail_param("modulus must be prime");
  g %= p;
  if (g == 0) return false;
  if (p == 2) return g == 1;
  uint64_t n = p - 1;
  uint64_t rest = n;
  for (uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q) continue;
    if (mod_pow(g, n / q, p) == 1) return false;
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1 && mod_pow(g, n / rest, p) == 1) return false;
  return true;
}

uint64_t find_special_prime(uint64_t min) {
  if (min < 5) fail_param("search start must be at least 5");
  for (uint64_t p = min; p < min + 1000000; ++p) {
    if (p % 4 != 1) continue;
    if (!is_prime(p)) continue;
    if (is_prime((p - 1) / 4)) return p;
  }
  fail_bound("no prime of the form 4q+1 with q prime in search window");
}

}  // namespace qcmc
