#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcmc/circulant.hpp"

namespace qcmc {

// binary stack construction: generator M = [I_{(m-1)p} | Stack(C_1..C_{m-1})]
struct StackSpec {
  uint64_t p = 0;
  unsigned m = 0;
  unsigned t_r = 0;
  std::vector<Circulant> circulants;  // m-1 blocks over GF(2)

  Mat stack() const;      // (m-1)p x p
  Mat generator() const;  // (m-1)p x mp
};

// array construction over GF(2^l): parity H = [I_p | C_1 | ... | C_{m-1}]
struct ArraySpec {
  uint64_t p = 0;
  unsigned m = 0;
  unsigned l = 0;
  uint16_t a = 0, b = 0;  // marked pair, placed exactly once per column of C_1
  std::vector<Circulant> circulants;  // m-1 blocks over GF(2^l)

  Mat parity() const;  // p x mp
};

struct StackReport {
  bool p_prime = false;        // p is prime
  bool has_invertible = false; // at least one block is invertible
  bool overlap_ok = false;     // any two stack columns share at most one 1-position
  bool weight_ok = false;      // t * t_r <= p - 1 for measured column weight t
  size_t column_weight = 0;    // measured max column weight of the stack

  bool all() const { return p_prime && has_invertible && overlap_ok && weight_ok; }
};

struct ArrayReport {
  bool params_ok = false;     // p prime, 2 <= m <= p^2, marked pair distinct nonzero
  bool dims_ok = false;       // m - 1 blocks of size p x p over GF(2^l)
  bool extension_ok = false;  // every column of every block has an entry outside {0, 1}
  bool marked_ok = false;     // a, b exactly once per column of C_1; no other block has both
  bool distinct_ok = false;   // no two of the mp parity columns are identical
  // non-2-transitivity of the row-permutation group: implied by the marked-pair
  // condition, and checked directly by group enumeration when p is small
  std::optional<bool> not_two_transitive_direct;

  bool all() const {
    return params_ok && dims_ok && extension_ok && marked_ok && distinct_ok &&
           not_two_transitive_direct.value_or(true);
  }
};

// build m-1 binary circulants whose pooled within-block support differences
// never repeat, so stacked columns overlap in at most one position
StackSpec generate_c(uint64_t p, unsigned m, unsigned t_r, Rng& rng);
StackReport check_stack_conditions(const StackSpec& s);

ArraySpec generate_h(uint64_t p, unsigned m, unsigned l, Rng& rng);
ArrayReport check_array_conditions(const ArraySpec& s);

}  // namespace qcmc
