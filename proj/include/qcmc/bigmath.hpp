#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcmc {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

bigint binom(uint64_t n, uint64_t k);
bigint ipow(const bigint& base, uint64_t e);

// log base 2 with ~1e-15 relative accuracy
double log2_big(const bigint& x);
double log2_big(const bigrat& x);

}  // namespace qcmc
