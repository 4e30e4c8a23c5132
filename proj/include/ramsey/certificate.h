// Text certificates: a coloring recipe plus claimed clique counts.
//
//   RAMSEY-CERT v1
//   order: <n>
//   blue-lengths: <comma-separated ascending>
//   flip: <a> <b>                      (zero or more, a < b, application order)
//   delete: <v>                        (zero or more)
//   claim: mono-k<k> <red|blue> <count> (zero or more)
//
// ASCII, LF line endings, sections in the order shown. Verification
// recomputes every claim from the recipe; no clique lists are stored.

#ifndef RAMSEY_CERTIFICATE_H_
#define RAMSEY_CERTIFICATE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/coloring.h"

namespace ramsey {

struct Claim {
  EdgeColor color = EdgeColor::Red;
  int k = 5;
  std::int64_t count = 0;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Certificate {
  int version = 1;
  ColoringSpec spec;
  std::vector<Claim> claims;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateError : public std::runtime_error {
 public:
  CertificateError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

std::string encode_certificate(const Certificate& cert);
// Strict parser; throws CertificateError with the offending line number.
Certificate decode_certificate(std::string_view text);

Certificate read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const Certificate& cert);

enum class CountMethod { Engine, Oracle };

struct ClaimResult {
  Claim claim;
  std::int64_t actual = 0;
  bool holds = false;
  std::string error;  // set when the claim could not be evaluated
};

std::vector<ClaimResult> verify_claims(const Certificate& cert,
                                       CountMethod method);

// Certificate for spec carrying recomputed red and blue mono-k5 claims.
Certificate certify(const ColoringSpec& spec);

}  // namespace ramsey

#endif  // RAMSEY_CERTIFICATE_H_
