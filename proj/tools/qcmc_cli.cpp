#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "qcmc.h"

namespace {

uint64_t fresh_seed() {
  std::random_device rd;
  return (uint64_t{rd()} << 32) ^ rd();
}

int report_failure(int rc) {
  std::fprintf(stderr, "error: %s\n", qcmc_last_error());
  return rc;
}

void print_owned(char* s) {
  if (s) {
    std::fputs(s, stdout);
    qcmc_string_free(s);
  }
}

struct SpecArgs {
  std::string path;
  uint64_t p = 0;
  unsigned m = 0, t_r = 0, l = 0;
  bool have_tr = false, have_l = false;
};

// loads --spec when given, otherwise generates from parameters; the caller
// owns the handle.  returns -1 after printing a usage error itself.
int obtain_spec(const SpecArgs& a, uint64_t seed, qcmc_spec** out) {
  if (!a.path.empty()) return qcmc_spec_read(a.path.c_str(), out);
  if (a.have_tr == a.have_l) {
    std::fprintf(stderr, "error: pass exactly one of --t-r (stack) or --l (array)\n");
    return -1;
  }
  return a.have_tr ? qcmc_stack_generate(a.p, a.m, a.t_r, seed, out)
                   : qcmc_array_generate(a.p, a.m, a.l, seed, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-cyclic code-based cryptosystem workbench"};
  app.require_subcommand(1);

  // construct
  auto* c_cmd = app.add_subcommand(
      "construct", "generate a structured matrix spec and report its conditions");
  uint64_t c_p = 0, c_seed = 0;
  unsigned c_m = 0, c_tr = 0, c_l = 0;
  std::string c_out;
  c_cmd->add_option("--p", c_p, "block size, prime")->required();
  c_cmd->add_option("--m", c_m, "number of blocks")->required();
  auto* c_tr_opt = c_cmd->add_option("--t-r", c_tr, "row weight per stack block (stack form)");
  auto* c_l_opt = c_cmd->add_option("--l", c_l, "field degree (array form)");
  auto* c_seed_opt = c_cmd->add_option("--seed", c_seed, "rng seed");
  c_cmd->add_option("--out", c_out, "spec file to write");

  // keygen
  auto* k_cmd = app.add_subcommand("keygen", "derive a keypair from a spec file");
  std::string k_spec, k_priv, k_pub;
  unsigned k_t = 0;
  uint64_t k_seed = 0;
  k_cmd->add_option("--spec", k_spec, "spec file")->required();
  k_cmd->add_option("--t", k_t, "correctable weight / error budget")->required();
  auto* k_seed_opt = k_cmd->add_option("--seed", k_seed, "rng seed");
  k_cmd->add_option("--private-out", k_priv, "private key file to write");
  k_cmd->add_option("--public-out", k_pub, "public key file to write");

  // encrypt
  auto* e_cmd = app.add_subcommand("encrypt", "encrypt a message file");
  std::string e_key, e_in, e_out;
  uint64_t e_seed = 0;
  e_cmd->add_option("--key", e_key, "public (or private) key file")->required();
  e_cmd->add_option("--in", e_in, "message file")->required();
  e_cmd->add_option("--out", e_out, "ciphertext file to write")->required();
  auto* e_seed_opt = e_cmd->add_option("--seed", e_seed, "rng seed for error sampling");

  // decrypt
  auto* d_cmd = app.add_subcommand("decrypt", "decrypt a ciphertext file");
  std::string d_key, d_in, d_out;
  d_cmd->add_option("--key", d_key, "private key file")->required();
  d_cmd->add_option("--in", d_in, "ciphertext file")->required();
  d_cmd->add_option("--out", d_out, "message file to write")->required();

  // audit
  auto* a_cmd = app.add_subcommand(
      "audit", "enumerate the automorphism side of a spec and test the sampling premise");
  SpecArgs a_args;
  uint64_t a_seed = 0;
  double a_delta = 1.0;
  a_cmd->add_option("--spec", a_args.path, "spec file (alternative to generation)");
  a_cmd->add_option("--p", a_args.p, "block size, prime");
  a_cmd->add_option("--m", a_args.m, "number of blocks");
  auto* a_tr_opt = a_cmd->add_option("--t-r", a_args.t_r, "row weight (stack form)");
  auto* a_l_opt = a_cmd->add_option("--l", a_args.l, "field degree (array form)");
  auto* a_seed_opt = a_cmd->add_option("--seed", a_seed, "rng seed");
  a_cmd->add_option("--delta", a_delta, "distinguishability exponent");

  // attack
  auto* t_cmd = app.add_subcommand(
      "attack", "run an information-set-decoding demo against a public key");
  std::string t_pub, t_ct, t_out, t_method = "lb";
  unsigned t_j = 1, t_window = 2;
  uint64_t t_seed = 0, t_iters = 100000;
  t_cmd->add_option("--public", t_pub, "public key file")->required();
  t_cmd->add_option("--ct", t_ct, "ciphertext file")->required();
  t_cmd->add_option("--out", t_out, "recovered message file");
  t_cmd->add_option("--method", t_method, "lb or stern");
  t_cmd->add_option("--j", t_j, "errors allowed inside the set (lb) / subset size (stern)");
  t_cmd->add_option("--window", t_window, "filter rows (stern)");
  auto* t_seed_opt = t_cmd->add_option("--seed", t_seed, "rng seed");
  t_cmd->add_option("--max-iters", t_iters, "iteration budget");

  // analyze
  auto* n_cmd = app.add_subcommand("analyze", "parameter analysis and key sizes");
  bool n_table = false, n_csv = false, n_keysize = false;
  unsigned n_sec = 0, n_t = 0, n_l = 3, n_j = 2;
  uint64_t n_p = 0, n_n = 0, n_k = 0;
  n_cmd->add_flag("--table1", n_table, "recompute the stored reference table");
  n_cmd->add_flag("--csv", n_csv, "emit machine-readable csv");
  n_cmd->add_flag("--keysize", n_keysize, "report k(n-k) public key bits");
  auto* n_sec_opt = n_cmd->add_option("--security", n_sec, "target security in bits");
  auto* n_p_opt = n_cmd->add_option("--p", n_p, "block size, prime");
  auto* n_t_opt = n_cmd->add_option("--t", n_t, "error weight");
  n_cmd->add_option("--l", n_l, "field degree for the rate column");
  n_cmd->add_option("--j", n_j, "information-set error allowance");
  auto* n_n_opt = n_cmd->add_option("--n", n_n, "code length (with --keysize)");
  auto* n_k_opt = n_cmd->add_option("--k", n_k, "code dimension (with --keysize)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  if (*c_cmd) {
    bool have_tr = c_tr_opt->count() > 0, have_l = c_l_opt->count() > 0;
    if (have_tr == have_l) {
      std::fprintf(stderr, "error: pass exactly one of --t-r (stack) or --l (array)\n");
      return 1;
    }
    uint64_t seed = c_seed_opt->count() ? c_seed : fresh_seed();
    std::printf("seed: %" PRIu64 "\n", seed);
    qcmc_spec* spec = nullptr;
    int rc = have_tr ? qcmc_stack_generate(c_p, c_m, c_tr, seed, &spec)
                     : qcmc_array_generate(c_p, c_m, c_l, seed, &spec);
    if (rc) return report_failure(rc);
    char* report = nullptr;
    rc = qcmc_spec_conditions(spec, nullptr, &report);
    if (!rc) print_owned(report);
    if (!rc && !c_out.empty()) {
      rc = qcmc_spec_write(spec, c_out.c_str());
      if (!rc) std::printf("spec: %s\n", c_out.c_str());
    }
    qcmc_spec_free(spec);
    return rc ? report_failure(rc) : 0;
  }

  if (*k_cmd) {
    if (k_priv.empty() && k_pub.empty()) {
      std::fprintf(stderr, "error: pass --private-out and/or --public-out\n");
      return 1;
    }
    uint64_t seed = k_seed_opt->count() ? k_seed : fresh_seed();
    std::printf("seed: %" PRIu64 "\n", seed);
    qcmc_spec* spec = nullptr;
    int rc = qcmc_spec_read(k_spec.c_str(), &spec);
    if (rc) return report_failure(rc);
    qcmc_keypair* kp = nullptr;
    rc = qcmc_keygen(spec, k_t, seed, &kp);
    qcmc_spec_free(spec);
    if (rc) return report_failure(rc);
    rc = qcmc_keypair_write(kp, k_priv.empty() ? nullptr : k_priv.c_str(),
                            k_pub.empty() ? nullptr : k_pub.c_str());
    qcmc_keypair_free(kp);
    if (rc) return report_failure(rc);
    if (!k_priv.empty()) std::printf("private: %s\n", k_priv.c_str());
    if (!k_pub.empty()) std::printf("public: %s\n", k_pub.c_str());
    return 0;
  }

  if (*e_cmd) {
    uint64_t seed = e_seed_opt->count() ? e_seed : fresh_seed();
    std::printf("seed: %" PRIu64 "\n", seed);
    qcmc_pubkey* pk = nullptr;
    int rc = qcmc_pubkey_read(e_key.c_str(), &pk);
    if (rc) return report_failure(rc);
    rc = qcmc_encrypt_file(pk, e_in.c_str(), e_out.c_str(), seed);
    qcmc_pubkey_free(pk);
    if (rc) return report_failure(rc);
    std::printf("ciphertext: %s\n", e_out.c_str());
    return 0;
  }

  if (*d_cmd) {
    qcmc_keypair* kp = nullptr;
    int rc = qcmc_keypair_read(d_key.c_str(), &kp);
    if (rc) return report_failure(rc);
    rc = qcmc_decrypt_file(kp, d_in.c_str(), d_out.c_str());
    qcmc_keypair_free(kp);
    if (rc) return report_failure(rc);
    std::printf("message: %s\n", d_out.c_str());
    return 0;
  }

  if (*a_cmd) {
    a_args.have_tr = a_tr_opt->count() > 0;
    a_args.have_l = a_l_opt->count() > 0;
    uint64_t seed = a_seed_opt->count() ? a_seed : fresh_seed();
    if (a_args.path.empty()) std::printf("seed: %" PRIu64 "\n", seed);
    qcmc_spec* spec = nullptr;
    int rc = obtain_spec(a_args, seed, &spec);
    if (rc == -1) return 1;
    if (rc) return report_failure(rc);
    char* report = nullptr;
    rc = qcmc_audit(spec, a_delta, &report);
    qcmc_spec_free(spec);
    if (rc) return report_failure(rc);
    print_owned(report);
    return 0;
  }

  if (*t_cmd) {
    uint64_t seed = t_seed_opt->count() ? t_seed : fresh_seed();
    std::printf("seed: %" PRIu64 "\n", seed);
    char* report = nullptr;
    int rc = qcmc_attack_file(t_pub.c_str(), t_ct.c_str(), t_out.empty() ? nullptr : t_out.c_str(),
                              t_method.c_str(), t_j, t_window, seed, t_iters, &report);
    print_owned(report);
    if (rc) return report_failure(rc);
    if (!t_out.empty()) std::printf("recovered message: %s\n", t_out.c_str());
    return 0;
  }

  if (*n_cmd) {
    char* out = nullptr;
    if (n_keysize) {
      if (!n_n_opt->count() || !n_k_opt->count()) {
        std::fprintf(stderr, "error: --keysize needs --n and --k\n");
        return 1;
      }
      uint64_t bits = 0;
      int rc = qcmc_keysize(n_n, n_k, &bits);
      if (rc) return report_failure(rc);
      std::printf("keysize_bits: %" PRIu64 "\n", bits);
      return 0;
    }
    if (n_table) {
      int rc = qcmc_analyze_table(n_l, n_j, n_csv ? 1 : 0, &out);
      if (rc) return report_failure(rc);
      print_owned(out);
      return 0;
    }
    if (!n_sec_opt->count() || !n_p_opt->count() || !n_t_opt->count()) {
      std::fprintf(stderr, "error: pass --table1, --keysize, or --security/--p/--t\n");
      return 1;
    }
    int rc = qcmc_analyze_query(n_sec, n_p, n_t, n_l, n_j, n_csv ? 1 : 0, &out);
    if (rc) return report_failure(rc);
    print_owned(out);
    return 0;
  }

  return 1;
}
