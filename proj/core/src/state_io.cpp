#include "teleport/state_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace teleport {

namespace {

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;

  // Next whitespace-separated token, skipping '#' comments; empty at end.
  std::string_view next() {
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '\n') {
        ++line;
        ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else {
        break;
      }
    }
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r' && text[pos] != '\n' &&
           text[pos] != '#')
      ++pos;
    return text.substr(start, pos - start);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
  }
};

double to_double(Tokenizer& tok, std::string_view s) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto res = std::from_chars(first, s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) tok.fail("not a number: '" + std::string(s) + "'");
  return v;
}

} // namespace

ParsedState parse_state(std::string_view text) {
  Tokenizer tok{text};
  const std::string_view kind = tok.next();
  if (kind.empty()) tok.fail("empty state file");
  if (kind != "pure" && kind != "dm") tok.fail("header must be 'pure d' or 'dm d', got '" + std::string(kind) + "'");
  const std::string_view dim_token = tok.next();
  int d = 0;
  const auto res = std::from_chars(dim_token.data(), dim_token.data() + dim_token.size(), d);
  if (res.ec != std::errc() || res.ptr != dim_token.data() + dim_token.size() || d < 2 || d > 64)
    tok.fail("bad dimension '" + std::string(dim_token) + "'");

  const bool pure = kind == "pure";
  const long expected = pure ? static_cast<long>(d) * d : static_cast<long>(d) * d * d * d;
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(expected));
  for (std::string_view re = tok.next(); !re.empty(); re = tok.next()) {
    const std::string_view im = tok.next();
    if (im.empty()) tok.fail("dangling real part without imaginary part");
    entries.emplace_back(to_double(tok, re), to_double(tok, im));
  }
  if (static_cast<long>(entries.size()) != expected)
    tok.fail("expected " + std::to_string(expected) + " complex entries, got " + std::to_string(entries.size()));

  if (pure) {
    ComplexVector psi(expected);
    for (long i = 0; i < expected; ++i) psi(i) = entries[static_cast<std::size_t>(i)];
    return PureBipartiteState::from_vector(psi, d);
  }
  const int n = d * d;
  ComplexMatrix rho(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rho(r, c) = entries[static_cast<std::size_t>(r * n + c)];
  return DensityMatrix(rho, d);
}

ParsedState read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

void write_state(std::ostream& out, const PureBipartiteState& psi) {
  const ComplexVector v = psi.vector();
  out << "pure " << psi.dim() << '\n';
  for (Eigen::Index i = 0; i < v.size(); ++i) out << shortest(v(i).real()) << ' ' << shortest(v(i).imag()) << '\n';
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  out << "dm " << rho.dim() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << "  ";
      out << shortest(m(r, c).real()) << ' ' << shortest(m(r, c).imag());
    }
    out << '\n';
  }
}

} // namespace teleport
