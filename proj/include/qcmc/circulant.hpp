#pragma once

#include <cstdint>
#include <vector>

#include "qcmc/linalg.hpp"

namespace qcmc {

// p x p circulant over GF(2^l), stored by its first row; row i is the i-step
// right cyclic shift of row 0
struct Circulant {
  std::vector<uint16_t> first_row;
  uint8_t deg = 1;

  Circulant() = default;
  Circulant(size_t p, unsigned degree)
      : first_row(p, 0), deg(static_cast<uint8_t>(degree)) {
    if (p == 0) fail_param("circulant size must be positive");
  }

  size_t p() const { return first_row.size(); }
  // expanded entry (i, j) without materializing the matrix
  uint16_t entry(size_t i, size_t j) const { return first_row[(j + p() - i % p()) % p()]; }
  bool operator==(const Circulant&) const = default;
};

Circulant circ_identity(size_t p, unsigned deg);
Mat circ_expand(const Circulant& c);
Circulant circ_add(const Circulant& a, const Circulant& b);
// polynomial product mod x^p - 1
Circulant circ_mul(const Circulant& a, const Circulant& b);
size_t circ_weight(const Circulant& c);
bool circ_is_invertible(const Circulant& c);

// multiplicative order of g mod p equals p - 1
bool is_primitive_root(uint64_t g, uint64_t p);

// smallest prime p >= min with p = 4q + 1, q prime
uint64_t find_special_prime(uint64_t min);

}  // namespace qcmc
