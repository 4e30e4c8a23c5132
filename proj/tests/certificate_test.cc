#include "ramsey/certificate.h"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "ramsey/oracle.h"
#include "test_util.h"

namespace ramsey {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string data_path(const std::string& name) {
  return std::string(RAMSEY_TEST_DATA_DIR) + "/" + name;
}

// The line number and message of the error raised by decoding text.
std::pair<int, std::string> decode_error(const std::string& text) {
  try {
    decode_certificate(text);
  } catch (const CertificateError& e) {
    return {e.line(), e.what()};
  }
  return {-1, ""};
}

const char kHeader[] = "RAMSEY-CERT v1\norder: 43\nblue-lengths: 3,4,5\n";

TEST(Certificate, Exoo42Encoding) {
  const std::string text = encode_certificate(certify(preset(Preset::Exoo42)));
  EXPECT_EQ(text.substr(0, 73),
            "RAMSEY-CERT v1\norder: 43\nblue-lengths: 3,4,5,6,8,9,11,15,17,19\n"
            "flip: 4 5\n");
  EXPECT_NE(text.find("flip: 11 32\ndelete: 0\n"), std::string::npos);
  EXPECT_NE(text.find("claim: mono-k5 red 0\nclaim: mono-k5 blue 0\n"),
            std::string::npos);
}

TEST(Certificate, Cyc43ClaimsFortyThreeRed) {
  const Certificate cert = certify(preset(Preset::Cyc43));
  ASSERT_EQ(cert.claims.size(), 2u);
  EXPECT_EQ(cert.claims[0], (Claim{EdgeColor::Red, 5, 43}));
  EXPECT_EQ(cert.claims[1], (Claim{EdgeColor::Blue, 5, 0}));
}

TEST(Certificate, GoldenFilesMatchPresets) {
  const std::pair<const char*, Preset> files[] = {
      {"cyc43.cert", Preset::Cyc43},
      {"exoo42.cert", Preset::Exoo42},
      {"varianta.cert", Preset::VariantA},
      {"variantb.cert", Preset::VariantB},
  };
  for (const auto& [name, p] : files) {
    const std::string text = slurp(data_path(name));
    ASSERT_FALSE(text.empty()) << name;
    const Certificate cert = decode_certificate(text);
    EXPECT_EQ(cert.spec, preset(p)) << name;
    EXPECT_EQ(encode_certificate(certify(preset(p))), text) << name;
    for (const ClaimResult& r : verify_claims(cert, CountMethod::Engine)) {
      EXPECT_TRUE(r.holds) << name;
    }
  }
}

TEST(Certificate, EmptyBlueLengths) {
  ColoringSpec spec;
  spec.order = 6;
  const std::string text = encode_certificate(Certificate{1, spec, {}});
  EXPECT_EQ(text, "RAMSEY-CERT v1\norder: 6\nblue-lengths:\n");
  EXPECT_EQ(decode_certificate(text).spec, spec);
  EXPECT_EQ(decode_certificate("RAMSEY-CERT v1\norder: 6\nblue-lengths: \n").spec, spec);
}

TEST(Certificate, RoundTripIsByteStable) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 63);
    const ColoringSpec spec = testing::random_spec(n, rng);
    Certificate cert{1, spec, {}};
    cert.claims.push_back(Claim{EdgeColor::Blue, 3, static_cast<std::int64_t>(rng() % 1000)});
    const std::string once = encode_certificate(cert);
    const Certificate back = decode_certificate(once);
    ASSERT_EQ(back, cert) << once;
    ASSERT_EQ(encode_certificate(back), once);
    ASSERT_EQ(build(back.spec), build(spec));
  }
}

TEST(Certificate, RejectsDegenerateFlip) {
  auto [line, what] = decode_error(std::string(kHeader) + "flip: 5 5\n");
  EXPECT_EQ(line, 4);
  EXPECT_NE(what.find("degenerate edge"), std::string::npos);
}

TEST(Certificate, RejectsLengthAboveHalfOrder) {
  auto [line, what] = decode_error("RAMSEY-CERT v1\norder: 43\nblue-lengths: 3,25\n");
  EXPECT_EQ(line, 3);
  EXPECT_NE(what.find("exceeds floor(n/2)"), std::string::npos);
}

TEST(Certificate, RejectsVersionMismatch) {
  auto [line, what] = decode_error("RAMSEY-CERT v2\norder: 5\nblue-lengths: 1\n");
  EXPECT_EQ(line, 1);
  EXPECT_NE(what.find("version mismatch"), std::string::npos);
}

TEST(Certificate, RejectsMalformedInput) {
  const std::string h = kHeader;
  const std::pair<std::string, int> cases[] = {
      {"", 1},
      {"RAMSEY-CERT v1\norder: 43\n", 3},
      {"RAMSEY-CERT\norder: 5\nblue-lengths: 1\n", 1},
      {"RAMSEY-CERT v1\norder: 1\nblue-lengths:\n", 2},
      {"RAMSEY-CERT v1\norder: 65\nblue-lengths:\n", 2},
      {"RAMSEY-CERT v1\norder: x\nblue-lengths:\n", 2},
      {"RAMSEY-CERT v1\norder: 43\nblue-lengths: 4,3\n", 3},
      {"RAMSEY-CERT v1\norder: 43\nblue-lengths: 0\n", 3},
      {"RAMSEY-CERT v1\norder: 43\nblue-lengths: 3,3\n", 3},
      {"RAMSEY-CERT v1\norder: 43\nblue-lengths: 3, 4\n", 3},
      {h + "flip: 1 2\nflip: 2 1\n", 5},
      {h + "flip: 1 43\n", 4},
      {h + "flip: -1 2\n", 4},
      {h + "flip: 1\n", 4},
      {h + "delete: 3\ndelete: 3\n", 5},
      {h + "delete: 3\nflip: 1 2\n", 5},
      {h + "claim: mono-k5 red 1\ndelete: 3\n", 5},
      {h + "claim: mono-k5 green 1\n", 4},
      {h + "claim: mono-k1 red 1\n", 4},
      {h + "claim: k5 red 1\n", 4},
      {h + "comment: hi\n", 4},
      {h + "flip: 1 2\r\n", 4},
      {h + "flip:  1 2\n", 4},
      {h + "delete: 3\xc3\xa9\n", 4},
  };
  for (const auto& [text, want_line] : cases) {
    EXPECT_EQ(decode_error(text).first, want_line) << text;
  }
  EXPECT_NE(decode_error(h + "flip: 1 2\nflip: 2 1\n").second.find("duplicate flip"),
            std::string::npos);
  EXPECT_NE(decode_error(h + "delete: 3\ndelete: 3\n").second.find("duplicate delete"),
            std::string::npos);
}

TEST(Certificate, FlipsKeepApplicationOrder) {
  const Certificate cert = decode_certificate(std::string(kHeader) +
                                              "flip: 9 2\nflip: 1 7\n");
  ASSERT_EQ(cert.spec.flips.size(), 2u);
  EXPECT_EQ(cert.spec.flips[0], Edge(2, 9));
  EXPECT_EQ(cert.spec.flips[1], Edge(1, 7));
}

TEST(Certificate, FileHelpers) {
  const std::string path = ::testing::TempDir() + "/roundtrip.cert";
  const Certificate cert = certify(preset(Preset::VariantA));
  write_certificate_file(path, cert);
  EXPECT_EQ(read_certificate_file(path), cert);
  EXPECT_THROW(read_certificate_file(path + ".missing"), CertificateError);
}

TEST(VerifyClaims, DetectsFalseClaims) {
  Certificate cert = certify(preset(Preset::Cyc43));
  cert.claims[0].count = 0;
  cert.claims.push_back(Claim{EdgeColor::Red, 50, 0});
  const auto results = verify_claims(cert, CountMethod::Engine);
  ASSERT_EQ(results.size(), 3u);
  EXPECT_FALSE(results[0].holds);
  EXPECT_EQ(results[0].actual, 43);
  EXPECT_TRUE(results[1].holds);
  EXPECT_FALSE(results[2].holds);
  EXPECT_FALSE(results[2].error.empty());
}

TEST(VerifyClaims, EngineAgreesWithOracleOnRandomSpecs) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 20);
    const ColoringSpec spec = testing::random_spec(n, rng);
    Certificate cert{1, spec, {}};
    for (int k = 3; k <= 5; ++k) {
      cert.claims.push_back(Claim{EdgeColor::Red, k, 0});
      cert.claims.push_back(Claim{EdgeColor::Blue, k, 0});
    }
    const auto fast = verify_claims(cert, CountMethod::Engine);
    const auto slow = verify_claims(cert, CountMethod::Oracle);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      ASSERT_EQ(fast[i].actual, slow[i].actual) << "trial " << trial << " claim " << i;
      ASSERT_EQ(fast[i].holds, slow[i].holds);
    }
  }
}

}  // namespace
}  // namespace ramsey
