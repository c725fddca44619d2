#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qcmc/autgroup.hpp"

#include <algorithm>

using namespace qcmc;

namespace {

Perm perm_of(std::vector<uint32_t> images) {
  Perm p;
  p.images = std::move(images);
  return p;
}

// brute-force recount: how many row permutations of h extend to a column
// permutation, matching columns by direct search instead of a lookup map
size_t recount_row_matches(const Mat& h) {
  size_t p = h.rows(), n = h.cols();
  Perm r = Perm::identity(p);
  size_t count = 0;
  do {
    bool all_cols = true;
    for (size_t j = 0; j < n && all_cols; ++j) {
      bool found = false;
      for (size_t j2 = 0; j2 < n && !found; ++j2) {
        bool same = true;
        for (size_t i = 0; i < p && same; ++i) same = h.at(r.images[i], j) == h.at(i, j2);
        found = same;
      }
      all_cols = found;
    }
    if (all_cols) ++count;
  } while (std::next_permutation(r.images.begin(), r.images.end()));
  return count;
}

}  // namespace

TEST_CASE("array sweep yields genuine matched pairs") {
  Rng rng(5);
  ArraySpec s = generate_h(5, 2, 3, rng);
  Mat h = s.parity();
  AutReport rep = enumerate_t_group(s);
  CHECK(rep.orientation == "array");
  CHECK(rep.aut_size == rep.t_group.size());
  CHECK(rep.aut_size == rep.full_perms.size());
  CHECK(rep.aut_size == recount_row_matches(h));
  for (size_t g = 0; g < rep.aut_size; ++g) {
    const Perm& r = rep.t_group[g];
    const Perm& full = rep.full_perms[g];
    REQUIRE(perm_valid(r));
    REQUIRE(perm_valid(full));
    CHECK(r.size() == 5);
    CHECK(full.size() == 10);
    // permuting rows by r then columns by the matched map restores h
    CHECK(apply_cols(apply_rows(r, h), full) == h);
  }
}

TEST_CASE("array audits stay within the derived bounds") {
  for (uint64_t p : {uint64_t{5}, uint64_t{7}}) {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
      Rng rng(seed);
      ArraySpec s = generate_h(p, 2, 3, rng);
      AutReport rep = enumerate_t_group(s);
      CHECK(rep.aut_size >= p);  // all cyclic shifts match
      CHECK(rep.aut_size <= p * (p - 1));
      CHECK(rep.bound_ok);
      CHECK(rep.min_moved >= p - 1);
      CHECK(rep.contains_shift);
      CHECK(rep.block_diagonal);
      CHECK_FALSE(rep.two_transitive);
      CHECK(rep.k_size == 2 * rep.aut_size * rep.aut_size);
    }
  }
}

TEST_CASE("stack sweep matches rows to shifted columns") {
  Rng rng(2);
  StackSpec s = generate_c(13, 2, 1, rng);
  // p = 13 exceeds the sweep cap
  CHECK_THROWS_AS(enumerate_t_group(s), error);

  // weight-1 blocks at p = 5 make the circulant a permutation matrix, so every
  // column permutation extends and the group is the full symmetric group
  Rng rng2(4);
  StackSpec tiny = generate_c(5, 2, 1, rng2);
  AutReport rep = enumerate_t_group(tiny);
  CHECK(rep.orientation == "stack");
  CHECK(rep.aut_size == 120);
  CHECK(rep.two_transitive);
  CHECK_FALSE(rep.bound_ok);  // 120 > p(p-1): the weight-1 stack is degenerate
  CHECK(rep.contains_shift);
  CHECK(rep.min_moved == 4);
  Mat m = tiny.generator();
  Mat cs = tiny.stack();
  for (size_t g = 0; g < rep.aut_size; ++g) {
    const Perm& pi2 = rep.t_group[g];
    const Perm& full = rep.full_perms[g];
    REQUIRE(perm_valid(full));
    CHECK(full.size() == 10);
    Perm rho = perm_of({full.images[0], full.images[1], full.images[2], full.images[3],
                        full.images[4]});
    REQUIRE(perm_valid(rho));
    // defining relation on the circulant part
    CHECK(apply_rows(rho, cs) == apply_cols(cs, pi2));
    // and the assembled pair really fixes the generator
    CHECK(apply_cols(apply_rows(perm_inverse(rho), m), full) == m);
  }
}

TEST_CASE("two-transitivity detection") {
  std::vector<Perm> s3;
  Perm r = Perm::identity(3);
  do s3.push_back(r);
  while (std::next_permutation(r.images.begin(), r.images.end()));
  CHECK(is_two_transitive(s3));

  std::vector<Perm> shifts;
  for (uint32_t k = 0; k < 5; ++k) {
    Perm g = Perm::identity(5);
    for (uint32_t i = 0; i < 5; ++i) g.images[i] = (i + k) % 5;
    shifts.push_back(g);
  }
  CHECK_FALSE(is_two_transitive(shifts));

  // a set that is not closed under composition is rejected
  std::vector<Perm> open{perm_of({0, 1, 2}), perm_of({1, 2, 0})};
  CHECK_THROWS_AS(is_two_transitive(open), error);
  CHECK_THROWS_AS(is_two_transitive({}), error);
}

TEST_CASE("minimal degree") {
  std::vector<Perm> ps{Perm::identity(4), perm_of({1, 0, 2, 3}), perm_of({1, 2, 3, 0})};
  CHECK(min_degree(ps) == 2);
  CHECK_THROWS_AS(min_degree({Perm::identity(4)}), error);
}

TEST_CASE("quantum premise at the published block counts") {
  QuantumPremise q = quantum_premise(101, 35, 3);
  CHECK(q.main_rhs == doctest::Approx(103.140577).epsilon(1e-8));
  CHECK(q.main_holds);
  CHECK(q.chain_lhs_exp == doctest::Approx(10201.0));
  CHECK(q.chain_rhs_exp == doctest::Approx(10417.198264).epsilon(1e-8));
  CHECK(q.chain_holds);
  CHECK(q.log2_info_bound == doctest::Approx(-90.446507).epsilon(1e-6));

  QuantumPremise q34 = quantum_premise(101, 34, 3);
  CHECK_FALSE(q34.main_holds);

  QuantumPremise q2 = quantum_premise(211, 62, 3);
  CHECK(q2.main_rhs == doctest::Approx(211.967080).epsilon(1e-8));
  CHECK(q2.main_holds);
  CHECK(q2.log2_info_bound == doctest::Approx(-240.639860).epsilon(1e-6));
  CHECK_FALSE(quantum_premise(211, 61, 3).main_holds);

  CHECK_THROWS_AS(quantum_premise(1, 35, 3), error);
  CHECK_THROWS_AS(quantum_premise(101, 1, 3), error);
}

TEST_CASE("audit report carries every key") {
  Rng rng(6);
  ArraySpec s = generate_h(5, 2, 3, rng);
  AutReport rep = enumerate_t_group(s);
  QuantumPremise qp = quantum_premise(s.p, s.m, s.l);
  std::string text = audit_report_text(rep, qp);
  for (const char* key :
       {"orientation: array", "aut_size:", "aut_size_bound: 20", "min_degree:",
        "two_transitive: false", "contains_cyclic_shift: true", "block_diagonal: true",
        "k_size:", "qfs_main_holds:", "qfs_chain_holds:", "qfs_log2_info_bound:"})
    CHECK(text.find(key) != std::string::npos);
}
