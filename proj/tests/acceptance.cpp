// acceptance gate: ten criteria, one verdict line each.  criterion 4 carries a
// parameter point that is mathematically unattainable (the weight-1 stack has
// minimum distance 2, which cannot certify a 1-error budget); the expected
// outcome there is a refusal, reported as FAIL (expected) with the analysis
// printed.  the process exits 0 only when every criterion behaves as expected,
// including that documented refusal.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qcmc/autgroup.hpp"
#include "qcmc/cryptanalysis.hpp"
#include "qcmc/serialize.hpp"

using namespace qcmc;

namespace {

// pinned tolerances and budgets
constexpr double kRateTol = 0.01;          // criterion 3: published rates carry 2 digits
constexpr double kW2Log2Tol = 1.4427e-9;   // criterion 9: 1e-9 relative on W_2, in log2
constexpr double kRoundtripBudget = 60.0;  // criterion 4 seconds
constexpr double kAuditBudget = 300.0;     // criterion 5 seconds
constexpr double kConditionBudget = 60.0;  // criterion 6 seconds
constexpr double kAttackBudget = 120.0;    // criterion 8 seconds

struct Verdict {
  bool as_expected = false;
  std::string line;       // one-line summary after PASS/FAIL
  std::string detail;     // indented block, may be empty
  bool documented_red = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Circulant circ_of(std::vector<uint16_t> row, unsigned deg) {
  Circulant c;
  c.first_row = std::move(row);
  c.deg = static_cast<uint8_t>(deg);
  return c;
}

Verdict criterion_keysizes() {
  Verdict v;
  struct Anchor { uint64_t n, k, bits; };
  const Anchor anchors[] = {{1632, 1269, 460647}, {2048, 1751, 520047}, {2960, 2288, 1537536}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& a : anchors) {
    uint64_t got = mceliece_keysize_bits(a.n, a.k);
    if (got != a.bits) {
      ok = false;
      d << "    (" << a.n << ", " << a.k << ") gave " << got << ", published " << a.bits << "\n";
    }
  }
  v.as_expected = ok;
  v.line = "public key sizes k(n-k) match the three published anchors exactly";
  v.detail = d.str();
  return v;
}

Verdict criterion_quantum_floor() {
  Verdict v;
  bool ok = min_blocks_quantum(101) == 35 && min_blocks_quantum(211) == 62 &&
            !quantum_premise(101, 34, 3).main_holds && !quantum_premise(211, 61, 3).main_holds &&
            quantum_premise(101, 35, 3).main_holds && quantum_premise(211, 62, 3).main_holds;
  v.as_expected = ok;
  v.line = "quantum block floors are 35 (p=101) and 62 (p=211), failing one block lower";
  if (!ok) {
    std::ostringstream d;
    d << "    got m_Q(101) = " << min_blocks_quantum(101) << ", m_Q(211) = "
      << min_blocks_quantum(211) << "\n";
    v.detail = d.str();
  }
  return v;
}

Verdict criterion_rates() {
  Verdict v;
  struct Row { uint64_t p; unsigned m, t; double published; };
  const Row rows[] = {{101, 35, 15, 0.60}, {101, 35, 20, 0.77}, {211, 62, 35, 0.71},
                      {211, 62, 40, 0.80}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& r : rows) {
    double got = info_rate(r.p, r.m, 3, r.t);
    if (std::fabs(got - r.published) > kRateTol) {
      ok = false;
      d << "    rate(p=" << r.p << ", m=" << r.m << ", t=" << r.t << ") = " << got
        << " vs published " << r.published << " (tol " << kRateTol << ")\n";
    }
  }
  v.as_expected = ok;
  v.line = "information rates at l=3 match 0.60 / 0.77 / 0.71 / 0.80 within 0.01";
  v.detail = d.str();
  return v;
}

Verdict criterion_roundtrips() {
  Verdict v;
  v.documented_red = true;
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream d;
  bool legs_ok = true;

  // pinned stack leg: must refuse, and for the documented reason
  bool refused = false;
  std::string refusal;
  try {
    Rng rng(1);
    StackSpec s = generate_c(13, 2, 1, rng);
    MeKeyPair kp = me_keygen(s, 1, rng);
    (void)kp;
  } catch (const error& e) {
    refused = e.kind() == errc::param;
    refusal = e.what();
  }
  if (refused) {
    d << "    stack (p=13, m=2, t_r=1) with a 1-error budget: refused as predicted\n";
    d << "      weight-1 blocks make the generator rows weight-2, so the code distance\n";
    d << "      is 2; unique correction of 1 error needs distance >= 3\n";
    d << "      keygen said: " << refusal << "\n";
  } else {
    legs_ok = false;
    d << "    stack (p=13, m=2, t_r=1): expected a capacity refusal but keygen accepted;\n";
    d << "      the distance-2 analysis no longer matches the implementation\n";
  }

  // array grid, one accepted instance per combination, 200 roundtrips each
  size_t grid_total = 0, grid_ok = 0;
  for (uint64_t p : {uint64_t{5}, uint64_t{7}})
    for (unsigned m : {2u, 3u})
      for (unsigned l : {2u, 3u}) {
        NrKeyPair kp;
        bool have_key = false;
        for (uint64_t seed = 1; seed <= 50 && !have_key; ++seed) {
          try {
            Rng rng(seed);
            ArraySpec spec = generate_h(p, m, l, rng);
            kp = nr_keygen(spec, 1, rng);
            have_key = true;
          } catch (const error&) {
          }
        }
        if (!have_key) {
          legs_ok = false;
          d << "    no accepted key at (p=" << p << ", m=" << m << ", l=" << l
            << ") within 50 seeds\n";
          continue;
        }
        NrPublicKey pub = nr_public(kp);
        Rng draw(7000 + p * 100 + m * 10 + l);
        size_t n = m * p;
        uint64_t q = uint64_t{1} << l;
        for (int rep = 0; rep < 200; ++rep) {
          Vec pt(n, l);
          pt.v[draw.below(n)] = static_cast<uint16_t>(1 + draw.below(q - 1));
          ++grid_total;
          if (nr_decrypt(kp, nr_encrypt(pub, pt)) == pt) ++grid_ok;
        }
      }
  d << "    array grid (p in {5,7}, m in {2,3}, l in {2,3}, t=1): " << grid_ok << "/"
    << grid_total << " roundtrips ok\n";
  if (grid_ok != grid_total || grid_total != 1600) legs_ok = false;

  // exhaustive weight-1 leg at (5, 2, 3)
  size_t exh_total = 0, exh_ok = 0;
  {
    Rng rng(3);
    ArraySpec spec = generate_h(5, 2, 3, rng);
    NrKeyPair kp = nr_keygen(spec, 1, rng);
    NrPublicKey pub = nr_public(kp);
    for (size_t pos = 0; pos < 10; ++pos)
      for (uint16_t val = 1; val < 8; ++val) {
        Vec pt(10, 3);
        pt.v[pos] = val;
        ++exh_total;
        if (nr_decrypt(kp, nr_encrypt(pub, pt)) == pt) ++exh_ok;
      }
  }
  d << "    exhaustive weight-1 blocks at (p=5, m=2, l=3): " << exh_ok << "/" << exh_total
    << " ok\n";
  if (exh_ok != exh_total || exh_total != 70) legs_ok = false;

  // attainable stack demonstration: weight-3 blocks give distance >= 3
  size_t me_ok = 0;
  {
    MeKeyPair kp;
    bool have_key = false;
    for (uint64_t seed = 1; seed <= 50 && !have_key; ++seed) {
      try {
        Rng rng(seed);
        StackSpec spec = generate_c(29, 2, 3, rng);
        kp = me_keygen(spec, 1, rng);
        have_key = true;
      } catch (const error&) {
      }
    }
    if (have_key) {
      MePublicKey pub = me_public(kp);
      Rng draw(991);
      for (int rep = 0; rep < 200; ++rep) {
        Vec pt(29, 1);
        for (auto& x : pt.v) x = static_cast<uint16_t>(draw.below(2));
        if (me_decrypt(kp, me_encrypt(pub, pt, draw)) == pt) ++me_ok;
      }
    }
  }
  d << "    supplementary stack (p=29, m=2, t_r=3, budget 1): " << me_ok
    << "/200 roundtrips ok\n";
  if (me_ok != 200) legs_ok = false;

  double secs = seconds_since(t0);
  d << "    elapsed " << secs << " s (budget " << kRoundtripBudget << " s)\n";
  if (secs > kRoundtripBudget) legs_ok = false;

  // the criterion as written is red: its pinned stack point cannot roundtrip
  v.as_expected = legs_ok && refused;
  v.line = "roundtrips: stack point (13, 2, t_r=1, budget 1) unattainable; all other legs hold";
  v.detail = d.str();
  return v;
}

Verdict criterion_audits() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream d;
  bool ok = true;
  size_t audited = 0;
  for (uint64_t p : {uint64_t{5}, uint64_t{7}}) {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
      unsigned m = seed <= 25 ? 2 : 3;
      unsigned l = seed <= 25 ? 3 : 2;
      Rng rng(seed);
      ArraySpec s = generate_h(p, m, l, rng);
      AutReport rep = enumerate_t_group(s);
      ++audited;
      if (!(rep.aut_size <= p * (p - 1))) {
        ok = false;
        d << "    aut bound broken at p=" << p << " seed " << seed << ": " << rep.aut_size << "\n";
      }
      if (!(rep.min_moved >= p - 1)) {
        ok = false;
        d << "    min degree " << rep.min_moved << " below " << p - 1 << " at p=" << p
          << " seed " << seed << "\n";
      }
      if (!rep.contains_shift) {
        ok = false;
        d << "    cyclic shift missing at p=" << p << " seed " << seed << "\n";
      }
      if (!rep.block_diagonal) {
        ok = false;
        d << "    non-block-diagonal member at p=" << p << " seed " << seed << "\n";
      }
      if (rep.two_transitive) {
        ok = false;
        d << "    two-transitive group at p=" << p << " seed " << seed << "\n";
      }
    }
  }
  double secs = seconds_since(t0);
  d << "    " << audited << " instances audited, elapsed " << secs << " s (budget "
    << kAuditBudget << " s)\n";
  if (secs > kAuditBudget) ok = false;
  v.as_expected = ok && audited == 100;
  v.line = "group audits: bound, degree floor, shift, block shape, no 2-transitivity";
  v.detail = d.str();
  return v;
}

Verdict criterion_conditions() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream d;
  bool ok = true;

  size_t stack_pass = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    StackSpec s = seed % 2 ? generate_c(13, 2, 1, rng) : generate_c(29, 3, 3, rng);
    if (check_stack_conditions(s).all()) ++stack_pass;
  }
  if (stack_pass != 100) {
    ok = false;
    d << "    " << stack_pass << "/100 generated stacks satisfy their conditions\n";
  }

  size_t array_pass = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    ArraySpec s = seed % 2 ? generate_h(5, 2, 3, rng) : generate_h(7, 3, 2, rng);
    if (check_array_conditions(s).all()) ++array_pass;
  }
  if (array_pass != 100) {
    ok = false;
    d << "    " << array_pass << "/100 generated arrays satisfy their conditions\n";
  }

  // mutations must flip exactly the matching verdicts
  {
    StackSpec s;
    s.p = 13;
    s.m = 2;
    s.t_r = 4;
    std::vector<uint16_t> row(13, 0);
    for (size_t i : {0, 1, 4, 5}) row[i] = 1;  // difference 1 repeats
    s.circulants.push_back(circ_of(row, 1));
    if (check_stack_conditions(s).overlap_ok) {
      ok = false;
      d << "    repeated-difference support not caught\n";
    }
  }
  {
    StackSpec s;
    s.p = 13;
    s.m = 3;
    s.t_r = 3;
    std::vector<uint16_t> row(13, 0);
    row[0] = row[1] = row[4] = 1;
    s.circulants.push_back(circ_of(row, 1));
    s.circulants.push_back(circ_of(row, 1));
    if (check_stack_conditions(s).overlap_ok) {
      ok = false;
      d << "    cross-block column overlap not caught\n";
    }
  }
  {
    Rng rng(11);
    ArraySpec base = generate_h(5, 3, 3, rng);
    ArraySpec dup = base;
    dup.circulants[1] = dup.circulants[0];
    if (check_array_conditions(dup).distinct_ok) {
      ok = false;
      d << "    duplicated block not caught\n";
    }
    ArraySpec marked = base;
    marked.circulants[1].first_row[0] = marked.a;
    marked.circulants[1].first_row[1] = marked.b;
    if (check_array_conditions(marked).marked_ok) {
      ok = false;
      d << "    marked pair outside the first block not caught\n";
    }
    ArraySpec binary = base;
    binary.circulants[1] = circ_of({1, 0, 1, 1, 0}, 3);
    if (check_array_conditions(binary).extension_ok) {
      ok = false;
      d << "    binary-only block not caught\n";
    }
    ArraySpec equal_pair = base;
    equal_pair.b = equal_pair.a;
    if (check_array_conditions(equal_pair).params_ok) {
      ok = false;
      d << "    equal marked values not caught\n";
    }
  }

  double secs = seconds_since(t0);
  d << "    elapsed " << secs << " s (budget " << kConditionBudget << " s)\n";
  if (secs > kConditionBudget) ok = false;
  v.as_expected = ok;
  v.line = "condition checks: 100+100 generated instances sound, mutations flip verdicts";
  v.detail = d.str();
  return v;
}

Verdict criterion_circulant_ring() {
  Verdict v;
  std::ostringstream d;
  bool ok = true;

  auto poly_mul = [](const Circulant& a, const Circulant& b) {
    size_t p = a.p();
    Circulant r;
    r.first_row.assign(p, 0);
    r.deg = a.deg;
    for (size_t i = 0; i < p; ++i)
      for (size_t j = 0; j < p; ++j) {
        FieldElem prod = fe_mul(fe(a.first_row[i], a.deg), fe(b.first_row[j], b.deg));
        size_t k = (i + j) % p;
        r.first_row[k] = fe_add(fe(r.first_row[k], r.deg), prod).bits;
      }
    return r;
  };

  size_t exhaustive_ok = 0;
  for (uint32_t abits = 0; abits < 32; ++abits)
    for (uint32_t bbits = 0; bbits < 32; ++bbits) {
      std::vector<uint16_t> ra(5), rb(5);
      for (int i = 0; i < 5; ++i) {
        ra[i] = (abits >> i) & 1;
        rb[i] = (bbits >> i) & 1;
      }
      Circulant a = circ_of(ra, 1), b = circ_of(rb, 1);
      if (circ_mul(a, b).first_row == poly_mul(a, b).first_row) ++exhaustive_ok;
    }
  d << "    exhaustive p=5 binary: " << exhaustive_ok << "/1024 products match the"
    << " convolution oracle\n";
  if (exhaustive_ok != 1024) ok = false;

  size_t random_ok = 0;
  Rng rng(77);
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<uint16_t> ra(13), rb(13);
    for (auto& x : ra) x = static_cast<uint16_t>(rng.below(8));
    for (auto& x : rb) x = static_cast<uint16_t>(rng.below(8));
    Circulant a = circ_of(ra, 3), b = circ_of(rb, 3);
    if (circ_mul(a, b).first_row == poly_mul(a, b).first_row) ++random_ok;
  }
  d << "    random p=13 over GF(8): " << random_ok << "/1000 products match\n";
  if (random_ok != 1000) ok = false;

  v.as_expected = ok;
  v.line = "circulant products agree with polynomial convolution mod x^p - 1";
  v.detail = d.str();
  return v;
}

Verdict criterion_attack_rate() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream d;
  bool ok = true;

  WorkFactorReport wf = lee_brickell_workfactor(26, 13, 1, 1);
  if (wf.t_j != bigrat(1)) {
    ok = false;
    d << "    expected T_1 = 1 exactly, got " << wf.t_j.convert_to<double>() << "\n";
  }

  // iterations are invertible information-set draws; the weight-1 circulant
  // duplicates public columns pairwise, so most raw draws are singular and a
  // generous draw budget is needed to collect each counted iteration
  const size_t instances = 10, per_instance = 1000;
  uint64_t successes = 0, iterations = 0;
  for (uint64_t inst = 1; inst <= instances; ++inst) {
    Rng rng(inst);
    StackSpec spec = generate_c(13, 2, 1, rng);
    MeKeyPair kp = me_keygen(spec, 0, rng);
    MePublicKey pub = me_public(kp);
    Rng draw(5000 + inst);
    for (size_t rep = 0; rep < per_instance; ++rep) {
      Vec pt(13, 1);
      for (auto& x : pt.v) x = static_cast<uint16_t>(draw.below(2));
      Vec c = vec_mat(pt, pub.m_pub);
      c.v[draw.below(26)] ^= 1;
      Rng atk(90000 + inst * 1000 + rep);
      AttackOutcome out = lee_brickell_attack(pub.m_pub, c, 1, 1, atk, 50);
      iterations += out.iterations;
      if (out.success) ++successes;
    }
  }
  double rate = static_cast<double>(successes) / static_cast<double>(iterations);
  double predicted = 1.0 / wf.t_j.convert_to<double>();
  double sigma = std::sqrt(predicted * (1.0 - predicted) / static_cast<double>(iterations));
  d << "    " << successes << " successes over " << iterations << " iterations, empirical "
    << rate << ", predicted 1/T_1 = " << predicted << ", 3 sigma = " << 3.0 * sigma << "\n";
  if (iterations < instances * per_instance) ok = false;
  if (std::fabs(rate - predicted) > 3.0 * sigma) ok = false;

  double secs = seconds_since(t0);
  d << "    elapsed " << secs << " s (budget " << kAttackBudget << " s)\n";
  if (secs > kAttackBudget) ok = false;
  v.as_expected = ok;
  v.line = "planted-error attack succeeds per iteration at the predicted 1/T_1 rate";
  v.detail = d.str();
  return v;
}

Verdict criterion_closed_form() {
  Verdict v;
  std::ostringstream d;
  bool ok = true;
  struct Row { uint64_t p; unsigned m; uint64_t t; };
  const Row rows[] = {{101, 17, 15}, {101, 9, 20}, {211, 4, 35}, {211, 3, 40}};
  for (const auto& r : rows) {
    uint64_t n = r.m * r.p, k = (r.m - 1) * r.p;
    WorkFactorReport wf = lee_brickell_workfactor(n, k, r.t, 2);

    // closed form in terms of (m-1) and p
    bigrat qsum = 0;
    for (unsigned i = 0; i <= 2; ++i)
      qsum += bigrat(binom(r.t, i) * binom(n - r.t, k - i), binom(n, k));
    bigint n2 = bigint(1) + k + binom(k, 2);
    bigint m1 = r.m - 1;
    bigrat closed = bigrat(m1 * m1 * m1 * ipow(bigint(r.p), 3) + m1 * bigint(r.p) * n2, 1) / qsum;
    if (wf.w_j != closed) {
      ok = false;
      d << "    symbolic mismatch at (p=" << r.p << ", m=" << r.m << ", t=" << r.t << ")\n";
    }

    // independent float evaluation through lgamma
    auto log2c = [](uint64_t nn, uint64_t kk) {
      return (std::lgamma(static_cast<double>(nn) + 1.0) -
              std::lgamma(static_cast<double>(kk) + 1.0) -
              std::lgamma(static_cast<double>(nn - kk) + 1.0)) / std::log(2.0);
    };
    double qf = 0.0;
    for (unsigned i = 0; i <= 2; ++i)
      qf += std::exp2(log2c(r.t, i) + log2c(n - r.t, k - i) - log2c(n, k));
    double numf = std::pow(static_cast<double>(k), 3.0) +
                  (1.0 + static_cast<double>(k) + 0.5 * k * (k - 1.0)) * k;
    double log2w_float = std::log2(numf) - std::log2(qf);
    double diff = std::fabs(wf.log2_w - log2w_float);
    d << "    (p=" << r.p << ", m=" << r.m << ", t=" << r.t << "): log2 W = " << wf.log2_w
      << ", float check diff " << diff << "\n";
    if (diff > kW2Log2Tol) {
      ok = false;
      d << "      exceeds the pinned tolerance " << kW2Log2Tol << "\n";
    }
  }
  v.as_expected = ok;
  v.line = "j=2 cost: closed form matches symbolically, float check within 1e-9 relative";
  v.detail = d.str();
  return v;
}

Verdict criterion_classical_floor() {
  Verdict v;
  std::ostringstream d;
  bool ok = true;
  struct Row { uint64_t p; unsigned t, published; };
  const Row rows[] = {{101, 15, 17}, {101, 20, 9}, {211, 35, 4}, {211, 40, 3}};
  for (const auto& r : rows) {
    unsigned got = min_blocks_classical(r.p, r.t, 80);
    if (got != r.published) {
      ok = false;
      double at_ref = lee_brickell_workfactor(uint64_t{r.published} * r.p,
                                              uint64_t{r.published - 1} * r.p, r.t, 2).log2_w;
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "    DEVIATION at (p=%llu, t=%u): computed m_c = %u, published %u, "
                    "log2 cost at published m_c = %.4f\n",
                    static_cast<unsigned long long>(r.p), r.t, got, r.published, at_ref);
      d << buf;
    }
  }
  // the analyze report must carry the same verdicts
  std::string report = reference_check_text(check_reference_rows());
  bool clean = report.find("no deviations from the published table") != std::string::npos;
  if (ok && !clean) {
    ok = false;
    d << "    floors match here but the analyze report disagrees:\n" << report;
  }
  if (!ok && clean) {
    d << "    analyze report failed to emit the deviation\n";
  }
  if (!ok && !clean) {
    d << report;
  }
  v.as_expected = ok;
  v.line = "classical block floors at 80 bits are 17 / 9 / 4 / 3, analyze report concurs";
  v.detail = d.str();
  return v;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Verdict()> fn;
  };
  const Entry entries[] = {
      {"key size anchors", criterion_keysizes},
      {"quantum block floor", criterion_quantum_floor},
      {"information rates", criterion_rates},
      {"encryption roundtrips", criterion_roundtrips},
      {"automorphism audits", criterion_audits},
      {"condition soundness", criterion_conditions},
      {"circulant arithmetic", criterion_circulant_ring},
      {"attack success rate", criterion_attack_rate},
      {"cost closed form", criterion_closed_form},
      {"classical block floor", criterion_classical_floor},
  };

  int unexpected = 0;
  size_t passed = 0, documented = 0;
  for (size_t i = 0; i < sizeof entries / sizeof entries[0]; ++i) {
    Verdict v;
    try {
      v = entries[i].fn();
    } catch (const std::exception& e) {
      v.as_expected = false;
      v.line = std::string("threw: ") + e.what();
    }
    bool print_pass = v.as_expected && !v.documented_red;
    const char* tag = print_pass ? "PASS" : "FAIL";
    const char* note = (!print_pass && v.documented_red && v.as_expected) ? " (expected)" : "";
    std::printf("criterion %2zu: %s%s  %s\n", i + 1, tag, note, v.line.c_str());
    if (!v.detail.empty()) std::fputs(v.detail.c_str(), stdout);
    if (v.as_expected) {
      if (v.documented_red)
        ++documented;
      else
        ++passed;
    } else {
      ++unexpected;
    }
  }
  std::printf("summary: %zu passed, %zu red as documented, %d unexpected\n", passed, documented,
              unexpected);
  return unexpected == 0 ? 0 : 1;
}
