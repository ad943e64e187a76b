#include "lts/io.hpp"

#include <set>
#include <sstream>
#include <vector>

#include "lts/errors.hpp"

namespace lts::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

std::size_t parse_count(const Line& line, const std::string& tok) {
  if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line.number, "expected a nonnegative integer, got '" + tok + "'");
  return std::stoul(tok);
}

std::size_t parse_index(const Line& line, const std::string& tok, std::size_t n) {
  const std::size_t i = parse_count(line, tok);
  if (i < 1 || i > n) throw ParseError(line.number, "index " + tok + " out of range 1.." + std::to_string(n));
  return i - 1;
}

Rational parse_coefficient(const Line& line, const std::string& tok) {
  try {
    return Rational::parse(tok);
  } catch (const std::exception& e) {
    throw ParseError(line.number, e.what());
  }
}

std::size_t parse_header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) throw ParseError(1, "missing '" + keyword + " n' header");
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != keyword)
    throw ParseError(h.number, "expected '" + keyword + " n' header");
  return parse_count(h, h.tokens[1]);
}

}  // namespace

std::string serialize_lts(const TripleSystem& t) {
  const std::size_t n = t.dim();
  std::string out = "LTS " + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& q = t.coeff(i, j, k, l);
          if (q.is_zero()) continue;
          out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + std::to_string(k + 1) + " " +
                 std::to_string(l + 1) + " " + q.str() + "\n";
        }
  return out;
}

TripleSystem parse_lts(std::string_view text) {
  const auto lines = content_lines(text);
  const std::size_t n = parse_header(lines, "LTS");
  TripleSystem::Builder b(n);
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens.size() != 5) throw ParseError(line.number, "expected 'i j k l q'");
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < 4; ++a) idx.push_back(parse_index(line, line.tokens[a], n));
    if (idx[0] >= idx[1]) throw ParseError(line.number, "i<j required");
    const Rational q = parse_coefficient(line, line.tokens[4]);
    if (!seen.insert(idx).second) throw ParseError(line.number, "duplicate entry");
    b.set(idx[0], idx[1], idx[2], idx[3], q);
  }
  return b.build();
}

std::string serialize_lie(const LieFile& f) {
  const LieAlgebra& g = f.algebra;
  const std::size_t m = g.dim();
  std::string out = "LIE " + std::to_string(m) + "\n";
  if (f.grading) {
    out += "GRADE";
    for (bool odd : f.grading->odd) out += odd ? " -" : " +";
    out += "\n";
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Rational& q = g.coeff(i, j, k);
        if (q.is_zero()) continue;
        out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + std::to_string(k + 1) + " " + q.str() +
               "\n";
      }
  return out;
}

LieFile parse_lie(std::string_view text) {
  const auto lines = content_lines(text);
  const std::size_t m = parse_header(lines, "LIE");
  LieFile f;
  LieAlgebra::Builder b(m);
  std::set<std::vector<std::size_t>> seen;
  std::size_t li = 1;
  if (li < lines.size() && lines[li].tokens[0] == "GRADE") {
    const Line& line = lines[li++];
    if (line.tokens.size() != m + 1) throw ParseError(line.number, "GRADE needs " + std::to_string(m) + " signs");
    Grading gr;
    for (std::size_t a = 1; a <= m; ++a) {
      if (line.tokens[a] != "+" && line.tokens[a] != "-")
        throw ParseError(line.number, "grade sign must be '+' or '-'");
      gr.odd.push_back(line.tokens[a] == "-");
    }
    f.grading = gr;
  }
  for (; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (line.tokens.size() != 4) throw ParseError(line.number, "expected 'i j k q'");
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < 3; ++a) idx.push_back(parse_index(line, line.tokens[a], m));
    if (idx[0] >= idx[1]) throw ParseError(line.number, "i<j required");
    const Rational q = parse_coefficient(line, line.tokens[3]);
    if (!seen.insert(idx).second) throw ParseError(line.number, "duplicate entry");
    b.set(idx[0], idx[1], idx[2], q);
  }
  f.algebra = b.build();
  return f;
}

}  // namespace lts::io
