#include "qcmc/serialize.hpp"

#include <fstream>
#include <sstream>

namespace qcmc {

namespace {

uint64_t read_u64(std::istream& is, const char* what) {
  uint64_t v;
  if (!(is >> v)) fail_io(std::string("expected an integer for ") + what);
  return v;
}

std::string read_token(std::istream& is, const char* what) {
  std::string s;
  if (!(is >> s)) fail_io(std::string("expected a token for ") + what);
  return s;
}

unsigned read_deg(std::istream& is) {
  uint64_t l = read_u64(is, "the field degree");
  if (l < 1 || l > kMaxDegree) fail_io("field degree out of range");
  return static_cast<unsigned>(l);
}

uint16_t read_elem(std::istream& is, unsigned deg) {
  std::string tok = read_token(is, "a field element");
  try {
    return fe_from_hex(tok, deg).bits;
  } catch (const error&) {
    fail_io("malformed field element '" + tok + "'");
  }
}

void expect_magic(std::istream& is, const char* word1, const char* word2) {
  std::string a = read_token(is, "the header");
  std::string b = read_token(is, "the header");
  if (a != word1 || b != word2)
    fail_io(std::string("expected header '") + word1 + " " + word2 + "'");
}

Perm perm_from_tokens(std::istream& is, size_t n) {
  Perm p;
  p.images.resize(n);
  for (size_t i = 0; i < n; ++i) {
    uint64_t v = read_u64(is, "a permutation image");
    if (v >= n) fail_io("permutation image out of range");
    p.images[i] = static_cast<uint32_t>(v);
  }
  if (!perm_valid(p)) fail_io("image list is not a permutation");
  return p;
}

std::string perm_to_line(const Perm& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.images.size(); ++i) {
    if (i) os << ' ';
    os << p.images[i];
  }
  os << '\n';
  return os.str();
}

void append_params(std::ostringstream& os, uint64_t p, unsigned m, unsigned l, unsigned t) {
  os << p << ' ' << m << ' ' << l << ' ' << t << '\n';
}

struct KeyParams {
  uint64_t p;
  unsigned m, l, t;
};

KeyParams read_params(std::istream& is) {
  KeyParams kp{};
  kp.p = read_u64(is, "p");
  uint64_t m = read_u64(is, "m");
  kp.l = read_deg(is);
  uint64_t t = read_u64(is, "t");
  if (kp.p < 2 || m < 2 || m > 1u << 20) fail_io("parameter line out of range");
  kp.m = static_cast<unsigned>(m);
  kp.t = static_cast<unsigned>(t);
  return kp;
}

}  // namespace

std::string matrix_to_text(const Mat& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << unsigned{m.deg()} << '\n';
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << fe_to_hex(fe(m.at(r, c), m.deg()));
    }
    os << '\n';
  }
  return os.str();
}

Mat matrix_from_text(std::istream& is) {
  uint64_t rows = read_u64(is, "the row count");
  uint64_t cols = read_u64(is, "the column count");
  unsigned deg = read_deg(is);
  if (rows == 0 || cols == 0 || rows > 1u << 20 || cols > 1u << 20)
    fail_io("matrix dimensions out of range");
  Mat m(rows, cols, static_cast<uint8_t>(deg));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = read_elem(is, deg);
  return m;
}

std::string circulant_to_text(const Circulant& c) {
  std::ostringstream os;
  os << c.p() << ' ' << unsigned{c.deg} << '\n';
  for (size_t i = 0; i < c.p(); ++i) {
    if (i) os << ' ';
    os << fe_to_hex(fe(c.first_row[i], c.deg));
  }
  os << '\n';
  return os.str();
}

Circulant circulant_from_text(std::istream& is) {
  uint64_t p = read_u64(is, "the circulant size");
  unsigned deg = read_deg(is);
  if (p == 0 || p > 1u << 20) fail_io("circulant size out of range");
  Circulant c;
  c.deg = static_cast<uint8_t>(deg);
  c.first_row.resize(p);
  for (size_t i = 0; i < p; ++i) c.first_row[i] = read_elem(is, deg);
  return c;
}

std::string vec_to_line(const Vec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << fe_to_hex(fe(v.v[i], v.deg));
  }
  os << '\n';
  return os.str();
}

Vec vec_from_tokens(std::istream& is, size_t n, unsigned deg) {
  Vec v(n, static_cast<uint8_t>(deg));
  for (size_t i = 0; i < n; ++i) v.v[i] = read_elem(is, deg);
  return v;
}

std::string stack_spec_to_text(const StackSpec& s) {
  std::ostringstream os;
  os << "QCSPEC v1\n";
  os << "stack " << s.p << ' ' << s.m << " 1 " << s.t_r << " 0 0\n";
  for (const auto& c : s.circulants) os << circulant_to_text(c);
  return os.str();
}

std::string array_spec_to_text(const ArraySpec& s) {
  std::ostringstream os;
  os << "QCSPEC v1\n";
  os << "array " << s.p << ' ' << s.m << ' ' << s.l << " 0 " << fe_to_hex(fe(s.a, s.l)) << ' '
     << fe_to_hex(fe(s.b, s.l)) << '\n';
  for (const auto& c : s.circulants) os << circulant_to_text(c);
  return os.str();
}

LoadedSpec spec_from_text(std::istream& is) {
  expect_magic(is, "QCSPEC", "v1");
  std::string orientation = read_token(is, "the orientation");
  uint64_t p = read_u64(is, "p");
  uint64_t m = read_u64(is, "m");
  unsigned l = read_deg(is);
  uint64_t t_r = read_u64(is, "t_r");
  if (p < 2 || m < 2 || m > 1u << 20) fail_io("spec parameters out of range");
  LoadedSpec out;
  if (orientation == "stack") {
    uint16_t a = read_elem(is, 1), b = read_elem(is, 1);
    (void)a;
    (void)b;
    StackSpec s;
    s.p = p;
    s.m = static_cast<unsigned>(m);
    s.t_r = static_cast<unsigned>(t_r);
    for (unsigned i = 0; i + 1 < s.m; ++i) {
      Circulant c = circulant_from_text(is);
      if (c.p() != p || c.deg != 1) fail_io("stack block shape mismatch");
      s.circulants.push_back(std::move(c));
    }
    out.stack = std::move(s);
  } else if (orientation == "array") {
    uint16_t a = read_elem(is, l), b = read_elem(is, l);
    ArraySpec s;
    s.p = p;
    s.m = static_cast<unsigned>(m);
    s.l = l;
    s.a = a;
    s.b = b;
    for (unsigned i = 0; i + 1 < s.m; ++i) {
      Circulant c = circulant_from_text(is);
      if (c.p() != p || c.deg != l) fail_io("array block shape mismatch");
      s.circulants.push_back(std::move(c));
    }
    out.array = std::move(s);
  } else {
    fail_io("unknown spec orientation '" + orientation + "'");
  }
  return out;
}

std::string nr_private_to_text(const NrKeyPair& kp) {
  std::ostringstream os;
  os << "QCNR v1\n";
  append_params(os, kp.p, kp.m, kp.l, kp.t);
  os << matrix_to_text(kp.s) << matrix_to_text(kp.h) << perm_to_line(kp.perm)
     << matrix_to_text(kp.h_pub);
  return os.str();
}

std::string nr_public_to_text(const NrPublicKey& pk) {
  std::ostringstream os;
  os << "QCNR v1\n";
  append_params(os, pk.p, pk.m, pk.l, pk.t);
  os << matrix_to_text(pk.h_pub);
  return os.str();
}

std::string me_private_to_text(const MeKeyPair& kp) {
  std::ostringstream os;
  os << "QCME v1\n";
  append_params(os, kp.p, kp.m, kp.l, kp.e_budget);
  os << matrix_to_text(kp.s) << matrix_to_text(kp.mgen) << perm_to_line(kp.perm)
     << matrix_to_text(kp.m_pub);
  return os.str();
}

std::string me_public_to_text(const MePublicKey& pk) {
  std::ostringstream os;
  os << "QCME v1\n";
  append_params(os, pk.p, pk.m, pk.l, pk.e_budget);
  os << matrix_to_text(pk.m_pub);
  return os.str();
}

LoadedNrKey nr_key_from_text(std::istream& is) {
  expect_magic(is, "QCNR", "v1");
  KeyParams prm = read_params(is);
  size_t n = prm.p * prm.m;
  Mat first = matrix_from_text(is);
  if (first.deg() != prm.l) fail_io("matrix field degree does not match the parameter line");
  LoadedNrKey out;
  if (first.rows() == prm.p && first.cols() == n) {
    out.pub = NrPublicKey{prm.p, prm.m, prm.l, prm.t, std::move(first)};
    return out;
  }
  if (first.rows() != prm.p || first.cols() != prm.p) fail_io("scrambler shape mismatch");
  NrKeyPair kp;
  kp.p = prm.p;
  kp.m = prm.m;
  kp.l = prm.l;
  kp.t = prm.t;
  kp.s = std::move(first);
  kp.h = matrix_from_text(is);
  if (kp.h.rows() != prm.p || kp.h.cols() != n || kp.h.deg() != prm.l)
    fail_io("structured matrix shape mismatch");
  kp.perm = perm_from_tokens(is, n);
  kp.h_pub = matrix_from_text(is);
  if (kp.h_pub.rows() != prm.p || kp.h_pub.cols() != n || kp.h_pub.deg() != prm.l)
    fail_io("public matrix shape mismatch");
  if (apply_cols(mat_mul(kp.s, kp.h), kp.perm) != kp.h_pub)
    fail_io("stored public matrix does not match the private components");
  auto dec = std::make_shared<SyndromeDecoder>(kp.h, kp.t);
  if (!dec->unambiguous()) fail_io("stored key cannot uniquely correct its error weight");
  kp.decoder = std::move(dec);
  kp.s_inv = std::make_shared<const Mat>(inverse(kp.s));
  out.pub = NrPublicKey{kp.p, kp.m, kp.l, kp.t, kp.h_pub};
  out.priv = std::move(kp);
  return out;
}

LoadedMeKey me_key_from_text(std::istream& is) {
  expect_magic(is, "QCME", "v1");
  KeyParams prm = read_params(is);
  size_t n = prm.p * prm.m;
  size_t k = prm.p * (prm.m - 1);
  if (prm.l != 1) fail_io("binary key file carries a nontrivial field degree");
  Mat first = matrix_from_text(is);
  if (first.deg() != 1) fail_io("matrix field degree does not match the parameter line");
  LoadedMeKey out;
  if (first.rows() == k && first.cols() == n) {
    out.pub = MePublicKey{prm.p, prm.m, 1, prm.t, std::move(first)};
    return out;
  }
  if (first.rows() != k || first.cols() != k) fail_io("scrambler shape mismatch");
  MeKeyPair kp;
  kp.p = prm.p;
  kp.m = prm.m;
  kp.l = 1;
  kp.e_budget = prm.t;
  kp.s = std::move(first);
  kp.mgen = matrix_from_text(is);
  if (kp.mgen.rows() != k || kp.mgen.cols() != n || kp.mgen.deg() != 1)
    fail_io("structured matrix shape mismatch");
  kp.perm = perm_from_tokens(is, n);
  kp.m_pub = matrix_from_text(is);
  if (kp.m_pub.rows() != k || kp.m_pub.cols() != n || kp.m_pub.deg() != 1)
    fail_io("public matrix shape mismatch");
  if (apply_cols(mat_mul(kp.s, kp.mgen), kp.perm) != kp.m_pub)
    fail_io("stored public matrix does not match the private components");
  auto dec = std::make_shared<SyndromeDecoder>(parity_from_generator(kp.mgen), kp.e_budget);
  if (!dec->unambiguous()) fail_io("stored key cannot uniquely correct its error weight");
  kp.decoder = std::move(dec);
  kp.s_inv = std::make_shared<const Mat>(inverse(kp.s));
  out.pub = MePublicKey{kp.p, kp.m, 1, kp.e_budget, kp.m_pub};
  out.priv = std::move(kp);
  return out;
}

std::string ciphertext_to_text(const CiphertextFile& ct) {
  std::ostringstream os;
  os << "QCCT v1 " << ct.system << ' ' << ct.p << ' ' << ct.m << ' ' << ct.l << ' ' << ct.t
     << ' ' << ct.blocks.size() << ' ' << ct.msg_bytes << '\n';
  for (const auto& b : ct.blocks) os << vec_to_line(b);
  return os.str();
}

CiphertextFile ciphertext_from_text(std::istream& is) {
  expect_magic(is, "QCCT", "v1");
  CiphertextFile ct;
  ct.system = read_token(is, "the system tag");
  if (ct.system != "nr" && ct.system != "me") fail_io("unknown system tag '" + ct.system + "'");
  KeyParams prm = read_params(is);
  ct.p = prm.p;
  ct.m = prm.m;
  ct.l = prm.l;
  ct.t = prm.t;
  uint64_t blocks = read_u64(is, "the block count");
  ct.msg_bytes = read_u64(is, "the message length");
  if (blocks > 1u << 20) fail_io("block count out of range");
  size_t len = ct.system == "nr" ? ct.p : ct.p * ct.m;
  unsigned deg = ct.system == "nr" ? ct.l : 1;
  for (uint64_t i = 0; i < blocks; ++i) ct.blocks.push_back(vec_from_tokens(is, len, deg));
  return ct;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail_io("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << f.rdbuf();
  if (f.bad()) fail_io("read failure on '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail_io("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) fail_io("write failure on '" + path + "'");
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
  std::string s = read_file(path);
  return std::vector<uint8_t>(s.begin(), s.end());
}

void write_file_bytes(const std::string& path, const std::vector<uint8_t>& data) {
  write_file(path, std::string(data.begin(), data.end()));
}

}  // namespace qcmc
