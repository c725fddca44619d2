#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcmc/qcgen.hpp"

namespace qcmc {

// result of the brute-force permutation sweep over one construction
struct AutReport {
  std::string orientation;  // "stack" or "array"
  uint64_t p = 0;
  unsigned m = 0, l = 0;
  // p-point side of each matched pair: row permutations for arrays, column
  // permutations of the circulant part for stacks
  std::vector<Perm> t_group;
  // the same members assembled as mp-point column permutations of the public
  // matrix shape [I | blocks]
  std::vector<Perm> full_perms;
  size_t aut_size = 0;
  size_t min_moved = 0;      // minimal degree over non-identity full_perms, 0 if none
  bool two_transitive = false;
  bool bound_ok = false;     // aut_size <= p(p-1)
  bool contains_shift = false;   // the p-cycle i -> i+1 is in t_group
  bool block_diagonal = false;   // every member fixes the identity-block column range
  uint64_t k_size = 0;           // 2 * aut_size^2
};

// premise evaluation for quantum Fourier sampling resistance
struct QuantumPremise {
  uint64_t p = 0;
  unsigned m = 0, l = 0;
  double main_rhs = 0;        // 0.25 * m * (log2 m + log2 p)
  bool main_holds = false;    // p <= main_rhs
  double chain_lhs_exp = 0;   // p^2,            exponent of 2^(p^2)
  double chain_rhs_exp = 0;   // 0.25*mp*log2(mp), exponent of (mp)^(mp/4)
  bool chain_holds = false;
  double delta = 1.0;
  double log2_info_bound = 0;  // log2 of 4 p^8 exp(-delta p)
};

// sweep all p! candidate permutations on the p-point side and match the other
// side exactly; errors out beyond max_p or when duplicate rows/columns break
// matching uniqueness
AutReport enumerate_t_group(const ArraySpec& s, unsigned max_p = 8);
AutReport enumerate_t_group(const StackSpec& s, unsigned max_p = 8);

// single orbit on ordered distinct pairs; input must be composition-closed
bool is_two_transitive(const std::vector<Perm>& perms);

// fewest points moved by any non-identity member
size_t min_degree(const std::vector<Perm>& perms);

QuantumPremise quantum_premise(uint64_t p, unsigned m, unsigned l, double delta = 1.0);

// key: value lines for the audit command
std::string audit_report_text(const AutReport& rep, const QuantumPremise& qp);

}  // namespace qcmc
