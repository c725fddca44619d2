#include "qcmc/bigmath.hpp"

#include <cmath>

#include "qcmc/common.hpp"

namespace qcmc {

bigint binom(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  bigint r = 1;
  for (uint64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

bigint ipow(const bigint& base, uint64_t e) {
  bigint r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

double log2_big(const bigint& x) {
  if (x <= 0) fail_param("log of non-positive value");
  unsigned bits = boost::multiprecision::msb(x);  // index of highest set bit
  if (bits <= 62) return std::log2(x.convert_to<double>());
  unsigned shift = bits - 62;
  bigint top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double log2_big(const bigrat& x) {
  return log2_big(boost::multiprecision::numerator(x)) -
         log2_big(boost::multiprecision::denominator(x));
}

}  // namespace qcmc
