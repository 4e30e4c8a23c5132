#include "ramsey/certificate.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "ramsey/clique_engine.h"
#include "ramsey/oracle.h"

namespace ramsey {

namespace {

constexpr std::string_view kMagic = "RAMSEY-CERT v";
constexpr int kVersion = 1;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename Int>
Int parse_int(std::string_view tok, int line, std::string_view what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || tok.front() == '-' || tok.front() == '+' ||
      ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw CertificateError(line, "malformed " + std::string(what) + " '" +
                                     std::string(tok) + "'");
  }
  return value;
}

// Fields of "<key>: <v1> <v2> ..." when line starts with "<key>:".
bool fields(std::string_view text, std::string_view key, int line,
            std::vector<std::string_view>& out) {
  if (text.substr(0, key.size()) != key || text.size() <= key.size() ||
      text[key.size()] != ':') {
    return false;
  }
  std::string_view rest = text.substr(key.size() + 1);
  out.clear();
  if (rest.empty()) return true;
  if (rest.front() != ' ') {
    throw CertificateError(line, "expected a space after '" + std::string(key) + ":'");
  }
  rest.remove_prefix(1);
  if (rest.empty()) return true;
  for (std::string_view tok : split(rest, ' ')) {
    if (tok.empty()) throw CertificateError(line, "malformed spacing");
    out.push_back(tok);
  }
  return true;
}

}  // namespace

std::string encode_certificate(const Certificate& cert) {
  std::ostringstream os;
  os << kMagic << cert.version << '\n';
  os << "order: " << cert.spec.order << '\n';
  os << "blue-lengths:";
  bool first = true;
  for (int len : cert.spec.blue_lengths) {
    os << (first ? " " : ",") << len;
    first = false;
  }
  os << '\n';
  for (const Edge& e : cert.spec.flips) os << "flip: " << e.a << ' ' << e.b << '\n';
  for (Vertex v : cert.spec.deletions) os << "delete: " << v << '\n';
  for (const Claim& c : cert.claims) {
    os << "claim: mono-k" << c.k << ' ' << color_name(c.color) << ' ' << c.count
       << '\n';
  }
  return os.str();
}

Certificate decode_certificate(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 3) {
    throw CertificateError(static_cast<int>(lines.size()) + 1,
                           "truncated certificate");
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (char ch : lines[i]) {
      if (ch == '\r' || static_cast<unsigned char>(ch) > 0x7e ||
          (static_cast<unsigned char>(ch) < 0x20)) {
        throw CertificateError(static_cast<int>(i) + 1,
                               "non-printable or non-ASCII character");
      }
    }
  }

  Certificate cert;
  if (lines[0].substr(0, kMagic.size()) != kMagic) {
    throw CertificateError(1, "missing RAMSEY-CERT header");
  }
  cert.version = parse_int<int>(lines[0].substr(kMagic.size()), 1, "version");
  if (cert.version != kVersion) {
    throw CertificateError(1, "version mismatch: expected v" +
                                  std::to_string(kVersion) + ", got v" +
                                  std::to_string(cert.version));
  }

  std::vector<std::string_view> f;
  if (!fields(lines[1], "order", 2, f) || f.size() != 1) {
    throw CertificateError(2, "expected 'order: <n>'");
  }
  const int n = parse_int<int>(f[0], 2, "order");
  if (n < 2 || n > kMaxOrder) {
    throw CertificateError(2, "order must be in [2, " + std::to_string(kMaxOrder) + "]");
  }
  cert.spec.order = n;

  if (!fields(lines[2], "blue-lengths", 3, f) || f.size() > 1) {
    throw CertificateError(3, "expected 'blue-lengths: <comma-separated>'");
  }
  if (!f.empty()) {
    int prev = 0;
    for (std::string_view tok : split(f[0], ',')) {
      const int len = parse_int<int>(tok, 3, "blue length");
      if (len < 1) throw CertificateError(3, "blue length must be positive");
      if (len > n / 2) {
        throw CertificateError(3, "length " + std::to_string(len) +
                                      " exceeds floor(n/2)");
      }
      if (len <= prev) throw CertificateError(3, "blue lengths not strictly ascending");
      prev = len;
      cert.spec.blue_lengths.insert(len);
    }
  }

  auto vertex = [n](std::string_view tok, int line) {
    const int v = parse_int<int>(tok, line, "vertex");
    if (v >= n) {
      throw CertificateError(line, "vertex " + std::to_string(v) +
                                       " exceeds order " + std::to_string(n));
    }
    return v;
  };

  enum Section { kFlips, kDeletes, kClaims } section = kFlips;
  std::set<Edge> seen_flips;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const std::string_view line = lines[i];
    if (fields(line, "flip", ln, f)) {
      if (section != kFlips) throw CertificateError(ln, "flip after delete or claim");
      if (f.size() != 2) throw CertificateError(ln, "expected 'flip: <a> <b>'");
      const Vertex a = vertex(f[0], ln);
      const Vertex b = vertex(f[1], ln);
      if (a == b) throw CertificateError(ln, "degenerate edge");
      const Edge e(a, b);
      if (!seen_flips.insert(e).second) throw CertificateError(ln, "duplicate flip");
      cert.spec.flips.push_back(e);
    } else if (fields(line, "delete", ln, f)) {
      if (section == kClaims) throw CertificateError(ln, "delete after claim");
      section = kDeletes;
      if (f.size() != 1) throw CertificateError(ln, "expected 'delete: <v>'");
      if (!cert.spec.deletions.insert(vertex(f[0], ln)).second) {
        throw CertificateError(ln, "duplicate delete");
      }
    } else if (fields(line, "claim", ln, f)) {
      section = kClaims;
      if (f.size() != 3 || f[0].substr(0, 6) != "mono-k") {
        throw CertificateError(ln, "expected 'claim: mono-k<k> <red|blue> <count>'");
      }
      Claim c;
      c.k = parse_int<int>(f[0].substr(6), ln, "clique size");
      if (c.k < 2) throw CertificateError(ln, "clique size must be at least 2");
      if (f[1] == "red") {
        c.color = EdgeColor::Red;
      } else if (f[1] == "blue") {
        c.color = EdgeColor::Blue;
      } else {
        throw CertificateError(ln, "unknown color '" + std::string(f[1]) + "'");
      }
      c.count = parse_int<std::int64_t>(f[2], ln, "count");
      cert.claims.push_back(c);
    } else {
      throw CertificateError(ln, "unknown line '" + std::string(line) + "'");
    }
  }
  return cert;
}

Certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CertificateError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_certificate(buf.str());
}

void write_certificate_file(const std::string& path, const Certificate& cert) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CertificateError(0, "cannot write " + path);
  out << encode_certificate(cert);
}

std::vector<ClaimResult> verify_claims(const Certificate& cert,
                                       CountMethod method) {
  const Coloring c = build(cert.spec);
  std::vector<ClaimResult> out;
  for (const Claim& claim : cert.claims) {
    ClaimResult r;
    r.claim = claim;
    try {
      r.actual = method == CountMethod::Engine
                     ? count_mono(c, claim.color, claim.k)
                     : oracle::naive_count(cert.spec, claim.color, claim.k);
      r.holds = r.actual == claim.count;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

Certificate certify(const ColoringSpec& spec) {
  Certificate cert;
  cert.spec = spec;
  const Coloring c = build(spec);
  for (EdgeColor color : {EdgeColor::Red, EdgeColor::Blue}) {
    cert.claims.push_back(Claim{color, 5, count_mono(c, color, 5)});
  }
  return cert;
}

}  // namespace ramsey
