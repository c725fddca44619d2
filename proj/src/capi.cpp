#include "qcmc.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "qcmc/autgroup.hpp"
#include "qcmc/cryptanalysis.hpp"
#include "qcmc/serialize.hpp"

struct qcmc_spec {
  qcmc::LoadedSpec s;
};
struct qcmc_keypair {
  std::optional<qcmc::NrKeyPair> nr;
  std::optional<qcmc::MeKeyPair> me;
};
struct qcmc_pubkey {
  std::optional<qcmc::NrPublicKey> nr;
  std::optional<qcmc::MePublicKey> me;
};

namespace {

thread_local std::string g_last_error;

void set_last(const std::string& msg) { g_last_error = msg; }

int code_for(qcmc::errc kind) {
  switch (kind) {
    case qcmc::errc::param:
      return QCMC_EPARAM;
    case qcmc::errc::crypto:
      return QCMC_ECRYPTO;
    case qcmc::errc::bound:
      return QCMC_EBOUND;
    case qcmc::errc::io:
      return QCMC_EIO;
  }
  return QCMC_EIO;
}

template <typename F>
int wrap(F&& body) {
  try {
    return body();
  } catch (const qcmc::error& e) {
    set_last(e.what());
    return code_for(e.kind());
  } catch (const std::bad_alloc&) {
    set_last("out of memory");
    return QCMC_EBOUND;
  } catch (const std::exception& e) {
    set_last(e.what());
    return QCMC_EIO;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int need(bool ok, const char* msg) {
  if (!ok) {
    set_last(msg);
    return QCMC_EPARAM;
  }
  return QCMC_OK;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string sniff_header(const std::string& content) {
  std::istringstream is(content);
  std::string tok;
  is >> tok;
  return tok;
}

std::string stack_conditions_text(const qcmc::StackSpec& s, const qcmc::StackReport& r) {
  std::ostringstream os;
  os << "orientation: stack\n";
  os << "p: " << s.p << "\nm: " << s.m << "\nt_r: " << s.t_r << '\n';
  os << "p_prime: " << yesno(r.p_prime) << '\n';
  os << "block_invertible: " << yesno(r.has_invertible) << '\n';
  os << "column_overlap_ok: " << yesno(r.overlap_ok) << '\n';
  os << "column_weight: " << r.column_weight << '\n';
  os << "weight_ok: " << yesno(r.weight_ok) << '\n';
  os << "all: " << yesno(r.all()) << '\n';
  return os.str();
}

std::string array_conditions_text(const qcmc::ArraySpec& s, const qcmc::ArrayReport& r) {
  std::ostringstream os;
  os << "orientation: array\n";
  os << "p: " << s.p << "\nm: " << s.m << "\nl: " << s.l << '\n';
  os << "marked_pair: " << qcmc::fe_to_hex(qcmc::fe(s.a, s.l)) << ' '
     << qcmc::fe_to_hex(qcmc::fe(s.b, s.l)) << '\n';
  os << "params_ok: " << yesno(r.params_ok) << '\n';
  os << "dims_ok: " << yesno(r.dims_ok) << '\n';
  os << "extension_ok: " << yesno(r.extension_ok) << '\n';
  os << "marked_pair_ok: " << yesno(r.marked_ok) << '\n';
  os << "columns_distinct: " << yesno(r.distinct_ok) << '\n';
  os << "not_two_transitive: "
     << (r.not_two_transitive_direct ? yesno(*r.not_two_transitive_direct) : "unchecked")
     << '\n';
  os << "all: " << yesno(r.all()) << '\n';
  return os.str();
}

}  // namespace

extern "C" {

const char* qcmc_last_error(void) { return g_last_error.c_str(); }

void qcmc_string_free(char* s) { std::free(s); }

int qcmc_stack_generate(uint64_t p, unsigned m, unsigned t_r, uint64_t seed, qcmc_spec** out) {
  if (int rc = need(out != nullptr, "null output handle")) return rc;
  return wrap([&] {
    qcmc::Rng rng(seed);
    auto spec = std::make_unique<qcmc_spec>();
    spec->s.stack = qcmc::generate_c(p, m, t_r, rng);
    *out = spec.release();
    return QCMC_OK;
  });
}

int qcmc_array_generate(uint64_t p, unsigned m, unsigned l, uint64_t seed, qcmc_spec** out) {
  if (int rc = need(out != nullptr, "null output handle")) return rc;
  return wrap([&] {
    qcmc::Rng rng(seed);
    auto spec = std::make_unique<qcmc_spec>();
    spec->s.array = qcmc::generate_h(p, m, l, rng);
    *out = spec.release();
    return QCMC_OK;
  });
}

int qcmc_spec_kind(const qcmc_spec* s) {
  if (!s) return -1;
  return s->s.array ? 1 : 0;
}

int qcmc_spec_conditions(const qcmc_spec* s, int* all_ok, char** report_out) {
  if (int rc = need(s && report_out, "null argument")) return rc;
  return wrap([&] {
    std::string text;
    bool ok = false;
    if (s->s.array) {
      auto r = qcmc::check_array_conditions(*s->s.array);
      ok = r.all();
      text = array_conditions_text(*s->s.array, r);
    } else if (s->s.stack) {
      auto r = qcmc::check_stack_conditions(*s->s.stack);
      ok = r.all();
      text = stack_conditions_text(*s->s.stack, r);
    } else {
      qcmc::fail_param("empty spec handle");
    }
    if (all_ok) *all_ok = ok ? 1 : 0;
    *report_out = dup_string(text);
    return QCMC_OK;
  });
}

int qcmc_spec_write(const qcmc_spec* s, const char* path) {
  if (int rc = need(s && path, "null argument")) return rc;
  return wrap([&] {
    if (s->s.array)
      qcmc::write_file(path, qcmc::array_spec_to_text(*s->s.array));
    else if (s->s.stack)
      qcmc::write_file(path, qcmc::stack_spec_to_text(*s->s.stack));
    else
      qcmc::fail_param("empty spec handle");
    return QCMC_OK;
  });
}

int qcmc_spec_read(const char* path, qcmc_spec** out) {
  if (int rc = need(path && out, "null argument")) return rc;
  return wrap([&] {
    std::istringstream is(qcmc::read_file(path));
    auto spec = std::make_unique<qcmc_spec>();
    spec->s = qcmc::spec_from_text(is);
    *out = spec.release();
    return QCMC_OK;
  });
}

void qcmc_spec_free(qcmc_spec* s) { delete s; }

int qcmc_keygen(const qcmc_spec* s, unsigned t, uint64_t seed, qcmc_keypair** out) {
  if (int rc = need(s && out, "null argument")) return rc;
  return wrap([&] {
    qcmc::Rng rng(seed);
    auto kp = std::make_unique<qcmc_keypair>();
    if (s->s.array)
      kp->nr = qcmc::nr_keygen(*s->s.array, t, rng);
    else if (s->s.stack)
      kp->me = qcmc::me_keygen(*s->s.stack, t, rng);
    else
      qcmc::fail_param("empty spec handle");
    *out = kp.release();
    return QCMC_OK;
  });
}

int qcmc_keypair_write(const qcmc_keypair* kp, const char* private_path,
                       const char* public_path) {
  if (int rc = need(kp != nullptr, "null key handle")) return rc;
  return wrap([&] {
    if (private_path) {
      if (kp->nr)
        qcmc::write_file(private_path, qcmc::nr_private_to_text(*kp->nr));
      else if (kp->me)
        qcmc::write_file(private_path, qcmc::me_private_to_text(*kp->me));
      else
        qcmc::fail_param("empty key handle");
    }
    if (public_path) {
      if (kp->nr)
        qcmc::write_file(public_path, qcmc::nr_public_to_text(qcmc::nr_public(*kp->nr)));
      else if (kp->me)
        qcmc::write_file(public_path, qcmc::me_public_to_text(qcmc::me_public(*kp->me)));
      else
        qcmc::fail_param("empty key handle");
    }
    return QCMC_OK;
  });
}

int qcmc_keypair_read(const char* path, qcmc_keypair** out) {
  if (int rc = need(path && out, "null argument")) return rc;
  return wrap([&] {
    std::string content = qcmc::read_file(path);
    std::string magic = sniff_header(content);
    std::istringstream is(content);
    auto kp = std::make_unique<qcmc_keypair>();
    if (magic == "QCNR") {
      auto loaded = qcmc::nr_key_from_text(is);
      if (!loaded.priv) qcmc::fail_io("file does not contain a private key");
      kp->nr = std::move(loaded.priv);
    } else if (magic == "QCME") {
      auto loaded = qcmc::me_key_from_text(is);
      if (!loaded.priv) qcmc::fail_io("file does not contain a private key");
      kp->me = std::move(loaded.priv);
    } else {
      qcmc::fail_io("unrecognized key file header");
    }
    *out = kp.release();
    return QCMC_OK;
  });
}

void qcmc_keypair_free(qcmc_keypair* kp) { delete kp; }

int qcmc_pubkey_read(const char* path, qcmc_pubkey** out) {
  if (int rc = need(path && out, "null argument")) return rc;
  return wrap([&] {
    std::string content = qcmc::read_file(path);
    std::string magic = sniff_header(content);
    std::istringstream is(content);
    auto pk = std::make_unique<qcmc_pubkey>();
    if (magic == "QCNR")
      pk->nr = qcmc::nr_key_from_text(is).pub;
    else if (magic == "QCME")
      pk->me = qcmc::me_key_from_text(is).pub;
    else
      qcmc::fail_io("unrecognized key file header");
    *out = pk.release();
    return QCMC_OK;
  });
}

void qcmc_pubkey_free(qcmc_pubkey* pk) { delete pk; }

int qcmc_encrypt_file(const qcmc_pubkey* pk, const char* message_path,
                      const char* cipher_path, uint64_t seed) {
  if (int rc = need(pk && message_path && cipher_path, "null argument")) return rc;
  return wrap([&] {
    auto data = qcmc::read_file_bytes(message_path);
    qcmc::CiphertextFile ct;
    ct.msg_bytes = data.size();
    if (pk->nr) {
      const auto& pub = *pk->nr;
      size_t n = pub.p * pub.m;
      ct.system = "nr";
      ct.p = pub.p;
      ct.m = pub.m;
      ct.l = pub.l;
      ct.t = pub.t;
      for (const auto& pt : qcmc::nr_frame(data, n, pub.t, pub.l))
        ct.blocks.push_back(qcmc::nr_encrypt(pub, pt));
    } else if (pk->me) {
      const auto& pub = *pk->me;
      size_t k = pub.p * (pub.m - 1);
      ct.system = "me";
      ct.p = pub.p;
      ct.m = pub.m;
      ct.l = 1;
      ct.t = pub.e_budget;
      qcmc::Rng rng(seed);
      for (const auto& pt : qcmc::me_frame(data, k))
        ct.blocks.push_back(qcmc::me_encrypt(pub, pt, rng));
    } else {
      qcmc::fail_param("empty key handle");
    }
    qcmc::write_file(cipher_path, qcmc::ciphertext_to_text(ct));
    return QCMC_OK;
  });
}

int qcmc_decrypt_file(const qcmc_keypair* kp, const char* cipher_path,
                      const char* message_path) {
  if (int rc = need(kp && cipher_path && message_path, "null argument")) return rc;
  return wrap([&] {
    std::istringstream is(qcmc::read_file(cipher_path));
    qcmc::CiphertextFile ct = qcmc::ciphertext_from_text(is);
    std::vector<qcmc::Vec> pts;
    std::vector<uint8_t> data;
    if (kp->nr) {
      const auto& key = *kp->nr;
      if (ct.system != "nr" || ct.p != key.p || ct.m != key.m || ct.l != key.l ||
          ct.t != key.t)
        qcmc::fail_crypto("ciphertext parameters do not match the key");
      for (const auto& c : ct.blocks) pts.push_back(qcmc::nr_decrypt(key, c));
      data = qcmc::nr_unframe(pts, ct.msg_bytes, key.t);
    } else if (kp->me) {
      const auto& key = *kp->me;
      if (ct.system != "me" || ct.p != key.p || ct.m != key.m || ct.t != key.e_budget)
        qcmc::fail_crypto("ciphertext parameters do not match the key");
      for (const auto& c : ct.blocks) pts.push_back(qcmc::me_decrypt(key, c));
      data = qcmc::me_unframe(pts, ct.msg_bytes);
    } else {
      qcmc::fail_param("empty key handle");
    }
    qcmc::write_file_bytes(message_path, data);
    return QCMC_OK;
  });
}

int qcmc_audit(const qcmc_spec* s, double delta, char** report_out) {
  if (int rc = need(s && report_out, "null argument")) return rc;
  return wrap([&] {
    qcmc::AutReport rep;
    qcmc::QuantumPremise qp;
    if (s->s.array) {
      rep = qcmc::enumerate_t_group(*s->s.array);
      qp = qcmc::quantum_premise(s->s.array->p, s->s.array->m, s->s.array->l, delta);
    } else if (s->s.stack) {
      rep = qcmc::enumerate_t_group(*s->s.stack);
      qp = qcmc::quantum_premise(s->s.stack->p, s->s.stack->m, 1, delta);
    } else {
      qcmc::fail_param("empty spec handle");
    }
    *report_out = dup_string(qcmc::audit_report_text(rep, qp));
    return QCMC_OK;
  });
}

int qcmc_attack_file(const char* public_path, const char* cipher_path,
                     const char* message_out_path, const char* method, unsigned j,
                     unsigned window, uint64_t seed, uint64_t max_iters, char** report_out) {
  if (int rc = need(public_path && cipher_path && method, "null argument")) return rc;
  return wrap([&] {
    std::string m(method);
    if (m != "lb" && m != "stern") qcmc::fail_param("method must be 'lb' or 'stern'");
    std::string content = qcmc::read_file(public_path);
    if (sniff_header(content) != "QCME")
      qcmc::fail_param("the attack demo targets generator-matrix public keys");
    std::istringstream ks(content);
    qcmc::MePublicKey pub = qcmc::me_key_from_text(ks).pub;
    std::istringstream cs(qcmc::read_file(cipher_path));
    qcmc::CiphertextFile ct = qcmc::ciphertext_from_text(cs);
    if (ct.system != "me" || ct.p != pub.p || ct.m != pub.m || ct.t != pub.e_budget)
      qcmc::fail_crypto("ciphertext parameters do not match the public key");
    qcmc::Rng rng(seed);
    std::ostringstream os;
    os << "method: " << m << "\nblocks: " << ct.blocks.size() << "\nmax_iters: " << max_iters
       << '\n';
    std::vector<qcmc::Vec> pts;
    uint64_t total_iters = 0, total_singular = 0;
    bool all_ok = true;
    for (size_t i = 0; i < ct.blocks.size(); ++i) {
      qcmc::AttackOutcome o;
      if (m == "lb")
        o = qcmc::lee_brickell_attack(pub.m_pub, ct.blocks[i], pub.e_budget, j, rng,
                                      max_iters);
      else
        o = qcmc::stern_attack(pub.m_pub, ct.blocks[i], pub.e_budget, {j, window}, rng,
                               max_iters);
      os << "block " << i << ": success=" << yesno(o.success)
         << " iterations=" << o.iterations << " singular_draws=" << o.singular_draws << '\n';
      total_iters += o.iterations;
      total_singular += o.singular_draws;
      if (!o.success) {
        all_ok = false;
        break;
      }
      pts.push_back(o.plaintext);
    }
    os << "total_iterations: " << total_iters << '\n';
    os << "total_singular_draws: " << total_singular << '\n';
    os << "recovered: " << yesno(all_ok) << '\n';
    if (all_ok && message_out_path)
      qcmc::write_file_bytes(message_out_path, qcmc::me_unframe(pts, ct.msg_bytes));
    if (report_out) *report_out = dup_string(os.str());
    if (!all_ok) {
      set_last("attack exhausted its iteration budget");
      return QCMC_ECRYPTO;
    }
    return QCMC_OK;
  });
}

int qcmc_analyze_query(unsigned security_bits, uint64_t p, unsigned t, unsigned l,
                       unsigned j, int csv, char** out) {
  if (int rc = need(out != nullptr, "null output argument")) return rc;
  return wrap([&] {
    auto rows = qcmc::param_report({{security_bits, p, t, l}}, j);
    *out = dup_string(csv ? qcmc::param_rows_csv(rows) : qcmc::param_rows_text(rows));
    return QCMC_OK;
  });
}

int qcmc_analyze_table(unsigned l, unsigned j, int csv, char** out) {
  if (int rc = need(out != nullptr, "null output argument")) return rc;
  return wrap([&] {
    auto checks = qcmc::check_reference_rows(l, j);
    std::vector<qcmc::ParamRow> rows;
    for (const auto& c : checks) rows.push_back(c.computed);
    if (csv) {
      *out = dup_string(qcmc::param_rows_csv(rows));
    } else {
      std::string text = qcmc::param_rows_text(rows);
      text += '\n';
      text += qcmc::reference_check_text(checks);
      *out = dup_string(text);
    }
    return QCMC_OK;
  });
}

int qcmc_keysize(uint64_t n, uint64_t k, uint64_t* bits_out) {
  if (int rc = need(bits_out != nullptr, "null output argument")) return rc;
  return wrap([&] {
    *bits_out = qcmc::mceliece_keysize_bits(n, k);
    return QCMC_OK;
  });
}

}  // extern "C"
