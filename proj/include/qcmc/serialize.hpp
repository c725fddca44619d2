#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcmc/crypto.hpp"

namespace qcmc {

// text formats, all whitespace separated:
//   matrix     "rows cols l" then one hex row per line
//   circulant  "p l" then the first row as one hex line
//   spec       "QCSPEC v1" then "orientation p m l t_r a b" (unused fields
//              zero, a and b in hex) then the circulant blocks
//   key        "QCNR v1" / "QCME v1", "p m l t", then S, structured matrix,
//              P as an image list line, and the public matrix; public-only
//              files carry just the public matrix (told apart by its shape)
//   ciphertext "QCCT v1 <nr|me> p m l t blocks msg_bytes" then one hex
//              vector line per block

std::string matrix_to_text(const Mat& m);
Mat matrix_from_text(std::istream& is);

std::string circulant_to_text(const Circulant& c);
Circulant circulant_from_text(std::istream& is);

std::string vec_to_line(const Vec& v);
Vec vec_from_tokens(std::istream& is, size_t n, unsigned deg);

std::string stack_spec_to_text(const StackSpec& s);
std::string array_spec_to_text(const ArraySpec& s);

struct LoadedSpec {
  std::optional<StackSpec> stack;
  std::optional<ArraySpec> array;
};
LoadedSpec spec_from_text(std::istream& is);

std::string nr_private_to_text(const NrKeyPair& kp);
std::string nr_public_to_text(const NrPublicKey& pk);
std::string me_private_to_text(const MeKeyPair& kp);
std::string me_public_to_text(const MePublicKey& pk);

// loaders accept both the private and the public layout; a private file is
// revalidated (decoder capacity, stored public matrix against S, H/M, P)
struct LoadedNrKey {
  std::optional<NrKeyPair> priv;
  NrPublicKey pub;
};
struct LoadedMeKey {
  std::optional<MeKeyPair> priv;
  MePublicKey pub;
};
LoadedNrKey nr_key_from_text(std::istream& is);
LoadedMeKey me_key_from_text(std::istream& is);

struct CiphertextFile {
  std::string system;  // "nr" or "me"
  uint64_t p = 0;
  unsigned m = 0, l = 0, t = 0;
  uint64_t msg_bytes = 0;
  std::vector<Vec> blocks;
};
std::string ciphertext_to_text(const CiphertextFile& ct);
CiphertextFile ciphertext_from_text(std::istream& is);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<uint8_t>& data);

}  // namespace qcmc
