#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qcmc.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

namespace {

struct owned {
  char* s = nullptr;
  ~owned() { qcmc_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

void write_bytes(const char* path, const std::string& data) {
  std::ofstream os(path, std::ios::binary);
  os.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::string read_bytes(const char* path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("spec lifecycle through the c boundary") {
  qcmc_spec* spec = nullptr;
  REQUIRE(qcmc_array_generate(5, 2, 3, 42, &spec) == QCMC_OK);
  REQUIRE(spec != nullptr);
  CHECK(qcmc_spec_kind(spec) == 1);

  int all_ok = 0;
  owned report;
  CHECK(qcmc_spec_conditions(spec, &all_ok, &report.s) == QCMC_OK);
  CHECK(all_ok == 1);
  CHECK(report.str().find("all: yes") != std::string::npos);
  CHECK(report.str().find("orientation: array") != std::string::npos);

  CHECK(qcmc_spec_write(spec, "capi_spec.tmp") == QCMC_OK);
  qcmc_spec* back = nullptr;
  CHECK(qcmc_spec_read("capi_spec.tmp", &back) == QCMC_OK);
  CHECK(qcmc_spec_kind(back) == 1);
  qcmc_spec_free(back);
  qcmc_spec_free(spec);
  std::remove("capi_spec.tmp");
}

TEST_CASE("stack specs come out as kind zero") {
  qcmc_spec* spec = nullptr;
  REQUIRE(qcmc_stack_generate(13, 2, 1, 7, &spec) == QCMC_OK);
  CHECK(qcmc_spec_kind(spec) == 0);
  int all_ok = 0;
  owned report;
  CHECK(qcmc_spec_conditions(spec, &all_ok, &report.s) == QCMC_OK);
  CHECK(all_ok == 1);
  CHECK(report.str().find("orientation: stack") != std::string::npos);
  qcmc_spec_free(spec);
  CHECK(qcmc_spec_kind(nullptr) == -1);
}

TEST_CASE("bad parameters surface as status codes with messages") {
  qcmc_spec* spec = nullptr;
  CHECK(qcmc_array_generate(4, 2, 3, 1, &spec) == QCMC_EPARAM);
  CHECK(spec == nullptr);
  CHECK(std::strlen(qcmc_last_error()) > 0);
  CHECK(qcmc_stack_generate(13, 2, 2, 1, &spec) == QCMC_EPARAM);
  CHECK(qcmc_array_generate(5, 2, 3, 1, nullptr) == QCMC_EPARAM);
  qcmc_spec* missing = nullptr;
  CHECK(qcmc_spec_read("definitely_not_here.tmp", &missing) == QCMC_EIO);
}

TEST_CASE("file encryption roundtrip") {
  qcmc_spec* spec = nullptr;
  REQUIRE(qcmc_array_generate(5, 2, 3, 11, &spec) == QCMC_OK);
  qcmc_keypair* kp = nullptr;
  REQUIRE(qcmc_keygen(spec, 1, 23, &kp) == QCMC_OK);
  REQUIRE(qcmc_keypair_write(kp, "capi_priv.tmp", "capi_pub.tmp") == QCMC_OK);

  std::string msg("handles cross the boundary\x00\xff ok", 31);
  write_bytes("capi_msg.tmp", msg);

  qcmc_pubkey* pk = nullptr;
  REQUIRE(qcmc_pubkey_read("capi_pub.tmp", &pk) == QCMC_OK);
  REQUIRE(qcmc_encrypt_file(pk, "capi_msg.tmp", "capi_ct.tmp", 31) == QCMC_OK);

  qcmc_keypair* kp2 = nullptr;
  REQUIRE(qcmc_keypair_read("capi_priv.tmp", &kp2) == QCMC_OK);
  REQUIRE(qcmc_decrypt_file(kp2, "capi_ct.tmp", "capi_out.tmp") == QCMC_OK);
  CHECK(read_bytes("capi_out.tmp") == msg);

  // a private key file also serves as a public key source
  qcmc_pubkey* pk2 = nullptr;
  CHECK(qcmc_pubkey_read("capi_priv.tmp", &pk2) == QCMC_OK);
  qcmc_pubkey_free(pk2);

  // corrupting the ciphertext must not produce plaintext output
  std::string ct = read_bytes("capi_ct.tmp");
  std::remove("capi_out.tmp");
  size_t digit = ct.find_last_of("0123456789abcdef");
  ct[digit] = ct[digit] == '1' ? '2' : '1';
  write_bytes("capi_ct.tmp", ct);
  int rc = qcmc_decrypt_file(kp2, "capi_ct.tmp", "capi_out.tmp");
  CHECK(rc != QCMC_OK);
  std::ifstream gone("capi_out.tmp");
  CHECK_FALSE(gone.good());

  qcmc_pubkey_free(pk);
  qcmc_keypair_free(kp2);
  qcmc_keypair_free(kp);
  qcmc_spec_free(spec);
  for (const char* f : {"capi_priv.tmp", "capi_pub.tmp", "capi_msg.tmp", "capi_ct.tmp"})
    std::remove(f);
}

TEST_CASE("determinism across identical seeds") {
  for (int round = 0; round < 2; ++round) {
    qcmc_spec* spec = nullptr;
    REQUIRE(qcmc_stack_generate(29, 2, 3, 5, &spec) == QCMC_OK);
    qcmc_keypair* kp = nullptr;
    REQUIRE(qcmc_keygen(spec, 1, 17, &kp) == QCMC_OK);
    std::string target = round == 0 ? "capi_det_a.tmp" : "capi_det_b.tmp";
    REQUIRE(qcmc_keypair_write(kp, target.c_str(), nullptr) == QCMC_OK);
    qcmc_keypair_free(kp);
    qcmc_spec_free(spec);
  }
  CHECK(read_bytes("capi_det_a.tmp") == read_bytes("capi_det_b.tmp"));
  std::remove("capi_det_a.tmp");
  std::remove("capi_det_b.tmp");
}

TEST_CASE("audit report travels through the boundary") {
  qcmc_spec* spec = nullptr;
  REQUIRE(qcmc_array_generate(5, 2, 3, 13, &spec) == QCMC_OK);
  owned report;
  CHECK(qcmc_audit(spec, 1.0, &report.s) == QCMC_OK);
  std::string text = report.str();
  CHECK(text.find("two_transitive: false") != std::string::npos);
  CHECK(text.find("aut_size:") != std::string::npos);
  CHECK(text.find("qfs_log2_info_bound:") != std::string::npos);
  qcmc_spec_free(spec);

  // p beyond the sweep cap
  qcmc_spec* wide = nullptr;
  REQUIRE(qcmc_stack_generate(13, 2, 1, 3, &wide) == QCMC_OK);
  owned rep2;
  CHECK(qcmc_audit(wide, 1.0, &rep2.s) == QCMC_EBOUND);
  qcmc_spec_free(wide);
}

TEST_CASE("attack demo through the boundary") {
  qcmc_spec* spec = nullptr;
  REQUIRE(qcmc_stack_generate(19, 2, 3, 21, &spec) == QCMC_OK);
  qcmc_keypair* kp = nullptr;
  REQUIRE(qcmc_keygen(spec, 1, 29, &kp) == QCMC_OK);
  REQUIRE(qcmc_keypair_write(kp, "capi_atk_priv.tmp", "capi_atk_pub.tmp") == QCMC_OK);
  write_bytes("capi_atk_msg.tmp", "attack me");
  qcmc_pubkey* pk = nullptr;
  REQUIRE(qcmc_pubkey_read("capi_atk_pub.tmp", &pk) == QCMC_OK);
  REQUIRE(qcmc_encrypt_file(pk, "capi_atk_msg.tmp", "capi_atk_ct.tmp", 37) == QCMC_OK);

  owned report;
  int rc = qcmc_attack_file("capi_atk_pub.tmp", "capi_atk_ct.tmp", "capi_atk_rec.tmp", "lb",
                            1, 0, 41, 100000, &report.s);
  CHECK(rc == QCMC_OK);
  CHECK(report.str().find("recovered: yes") != std::string::npos);
  CHECK(read_bytes("capi_atk_rec.tmp") == "attack me");

  // zero budget reports failure as a crypto error but still returns a report
  owned rep2;
  int rc2 = qcmc_attack_file("capi_atk_pub.tmp", "capi_atk_ct.tmp", "capi_atk_rec2.tmp", "lb",
                             1, 0, 41, 0, &rep2.s);
  CHECK(rc2 == QCMC_ECRYPTO);
  CHECK(rep2.str().find("recovered: no") != std::string::npos);
  std::ifstream gone("capi_atk_rec2.tmp");
  CHECK_FALSE(gone.good());

  qcmc_pubkey_free(pk);
  qcmc_keypair_free(kp);
  qcmc_spec_free(spec);
  for (const char* f : {"capi_atk_priv.tmp", "capi_atk_pub.tmp", "capi_atk_msg.tmp",
                        "capi_atk_ct.tmp", "capi_atk_rec.tmp"})
    std::remove(f);
}

TEST_CASE("analysis surfaces") {
  owned table;
  CHECK(qcmc_analyze_table(3, 2, 0, &table.s) == QCMC_OK);
  CHECK(table.str().find("no deviations from the published table") != std::string::npos);

  owned csv;
  CHECK(qcmc_analyze_query(80, 101, 15, 3, 2, 1, &csv.s) == QCMC_OK);
  CHECK(csv.str().rfind("security,p,t,l,m_c,m_Q,m,rate,rows,cols\n", 0) == 0);
  CHECK(csv.str().find("80,101,15,3,17,35,35,") != std::string::npos);

  uint64_t bits = 0;
  CHECK(qcmc_keysize(1632, 1269, &bits) == QCMC_OK);
  CHECK(bits == 460647);
  CHECK(qcmc_keysize(100, 200, &bits) == QCMC_EPARAM);
  CHECK(qcmc_analyze_query(80, 4, 15, 3, 2, 0, &csv.s) == QCMC_EPARAM);
}
