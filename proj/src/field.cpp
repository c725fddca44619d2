#include "qcmc/field.hpp"

#include <memory>
#include <mutex>

namespace qcmc {

namespace {

// fixed irreducible modulus per degree; keys serialized under these are
// reproducible everywhere, so the table is part of the file-format contract
constexpr std::array<uint32_t, kMaxDegree + 1> kModuli = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,    0x89,  0x11B,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003,  0x1100B,
};

}  // namespace

uint16_t Field::mul_schoolbook(uint16_t a, uint16_t b) const {
  uint32_t acc = 0;
  uint32_t x = a;
  for (uint32_t y = b; y; y >>= 1) {
    if (y & 1) acc ^= x;
    x <<= 1;
  }
  for (int bit = 2 * static_cast<int>(deg_) - 2; bit >= static_cast<int>(deg_); --bit)
    if (acc >> bit & 1) acc ^= modulus_ << (bit - deg_);
  return static_cast<uint16_t>(acc);
}

uint16_t Field::pow(uint16_t a, uint64_t e) const {
  uint16_t r = 1;
  while (e) {
    if (e & 1) r = mul_schoolbook(r, a);
    a = mul_schoolbook(a, a);
    e >>= 1;
  }
  return r;
}

Field::Field(unsigned deg) : deg_(deg), modulus_(kModuli[deg]) {
  uint32_t n = order();
  log_.assign(n, 0);
  antilog_.assign(n - 1, 0);
  if (deg_ == 1) {
    // trivial multiplicative group
    antilog_[0] = 1;
    generator_ = 1;
    return;
  }
  // smallest multiplicative generator; the modulus need not be primitive
  // (the degree-8 one is not), so x itself cannot be assumed to generate
  for (uint32_t g = 2;; ++g) {
    uint16_t v = 1;
    uint32_t len = 0;
    bool full = true;
    do {
      antilog_[len] = v;
      log_[v] = static_cast<uint16_t>(len);
      v = mul_schoolbook(v, static_cast<uint16_t>(g));
      ++len;
      if (len == n - 1 && v != 1) { full = false; break; }
    } while (v != 1);
    if (full && len == n - 1) {
      generator_ = static_cast<uint16_t>(g);
      break;
    }
    if (g >= n) fail_param("no generator found; modulus table corrupt");
  }
}

const Field& Field::get(unsigned deg) {
  if (deg < 1 || deg > kMaxDegree) fail_param("field degree must be in [1,16]");
  static std::array<std::unique_ptr<Field>, kMaxDegree + 1> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  if (!cache[deg]) cache[deg] = std::unique_ptr<Field>(new Field(deg));
  return *cache[deg];
}

FieldElem fe(uint16_t bits, unsigned deg) {
  if (deg < 1 || deg > kMaxDegree) fail_param("field degree must be in [1,16]");
  if (deg < 16 && bits >> deg) fail_param("element bits exceed field degree");
  return FieldElem{bits, static_cast<uint8_t>(deg)};
}

FieldElem fe_add(FieldElem a, FieldElem b) {
  if (a.deg != b.deg) fail_param("field degree mismatch in add");
  return FieldElem{static_cast<uint16_t>(a.bits ^ b.bits), a.deg};
}

FieldElem fe_mul(FieldElem a, FieldElem b) {
  if (a.deg != b.deg) fail_param("field degree mismatch in mul");
  return FieldElem{Field::get(a.deg).mul(a.bits, b.bits), a.deg};
}

FieldElem fe_inv(FieldElem a) {
  return FieldElem{Field::get(a.deg).inv(a.bits), a.deg};
}

unsigned fe_hex_width(unsigned deg) { return (deg + 3) / 4; }

std::string fe_to_hex(FieldElem a) {
  static const char* digits = "0123456789abcdef";
  unsigned w = fe_hex_width(a.deg);
  std::string s(w, '0');
  uint16_t v = a.bits;
  for (unsigned i = 0; i < w; ++i) {
    s[w - 1 - i] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

FieldElem fe_from_hex(const std::string& s, unsigned deg) {
  if (s.empty() || s.size() > 4) fail_io("bad hex field element '" + s + "'");
  uint32_t v = 0;
  for (char c : s) {
    v <<= 4;
    if (c >= '0' && c <= '9') v |= static_cast<uint32_t>(c - '0');
    else if (c >= 'a' && c <= 'f') v |= static_cast<uint32_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') v |= static_cast<uint32_t>(c - 'A' + 10);
    else fail_io("bad hex digit in field element");
  }
  if (deg < 16 && v >> deg) fail_io("hex element out of range for degree " + std::to_string(deg));
  return FieldElem{static_cast<uint16_t>(v), static_cast<uint8_t>(deg)};
}

}  // namespace qcmc
