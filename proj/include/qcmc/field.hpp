#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcmc/common.hpp"

namespace qcmc {

inline constexpr unsigned kMaxDegree = 16;

// element of GF(2^l), polynomial basis, bit i = coefficient of x^i
struct FieldElem {
  uint16_t bits = 0;
  uint8_t deg = 1;

  bool operator==(const FieldElem&) const = default;
};

// arithmetic context for one extension degree; immutable after construction
class Field {
public:
  static const Field& get(unsigned deg);

  unsigned degree() const { return deg_; }
  uint32_t order() const { return uint32_t{1} << deg_; }  // 2^l
  uint32_t modulus() const { return modulus_; }
  uint16_t generator() const { return generator_; }

  uint16_t mul(uint16_t a, uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t s = log_[a] + log_[b];
    uint32_t g = order() - 1;
    return antilog_[s >= g ? s - g : s];
  }

  uint16_t inv(uint16_t a) const {
    if (a == 0) fail_param("inverse of zero field element");
    uint32_t g = order() - 1;
    return antilog_[(g - log_[a]) % g];
  }

  uint16_t pow(uint16_t a, uint64_t e) const;

  // table-free reference multiply (carry-less product, reduce by modulus)
  uint16_t mul_schoolbook(uint16_t a, uint16_t b) const;

private:
  explicit Field(unsigned deg);

  unsigned deg_;
  uint32_t modulus_;
  uint16_t generator_;
  std::vector<uint16_t> log_;      // index: element bits, valid for nonzero
  std::vector<uint16_t> antilog_;  // index: exponent in [0, 2^l - 1)
};

FieldElem fe(uint16_t bits, unsigned deg);
FieldElem fe_add(FieldElem a, FieldElem b);
FieldElem fe_mul(FieldElem a, FieldElem b);
FieldElem fe_inv(FieldElem a);

// lowercase hex, fixed width ceil(l/4) digits
std::string fe_to_hex(FieldElem a);
FieldElem fe_from_hex(const std::string& s, unsigned deg);
unsigned fe_hex_width(unsigned deg);

}  // namespace qcmc
