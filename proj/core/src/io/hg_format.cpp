#include "shadowlab/io/hg_format.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "shadowlab/errors.hpp"

namespace shadowlab::io {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_number(std::string_view token, int line) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, found '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

UniformHypergraph parse_hypergraph(std::istream& in) {
  std::string raw;
  int line = 0;
  int n = 0;
  int r = 0;
  bool have_header = false;
  std::vector<Mask> edges;
  std::unordered_set<Mask> seen;
  while (std::getline(in, raw)) {
    ++line;
    const std::vector<std::string_view> tokens = split(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line, "header must be 'n r'");
      const long long hn = to_number(tokens[0], line);
      const long long hr = to_number(tokens[1], line);
      if (hn < 1 || hn > kMaxVertices) {
        throw ParseError(line, "vertex count must lie in 1.." + std::to_string(kMaxVertices));
      }
      if (hr < 1 || hr > hn) throw ParseError(line, "uniformity must lie in 1..n");
      n = static_cast<int>(hn);
      r = static_cast<int>(hr);
      have_header = true;
      continue;
    }
    if (static_cast<int>(tokens.size()) != r) {
      throw ParseError(line, "edge has " + std::to_string(tokens.size()) + " vertices, expected " + std::to_string(r));
    }
    Mask edge = 0;
    long long previous = 0;
    for (std::string_view token : tokens) {
      const long long v = to_number(token, line);
      if (v < 1 || v > n) throw ParseError(line, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (v <= previous) throw ParseError(line, "edge vertices must be strictly increasing");
      previous = v;
      edge |= vertex_bit(static_cast<Vertex>(v));
    }
    if (!seen.insert(edge).second) throw ParseError(line, "duplicate edge");
    edges.push_back(edge);
  }
  if (!have_header) throw ParseError(line + 1, "missing 'n r' header");
  return UniformHypergraph::from_masks(n, r, std::move(edges));
}

UniformHypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

UniformHypergraph read_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  return parse_hypergraph(in);
}

void serialize_hypergraph(const UniformHypergraph& h, std::ostream& out) {
  out << h.n() << ' ' << h.r() << '\n';
  for (Mask e : h.edges().masks()) {
    bool first = true;
    for (Vertex v : VertexSubset::from_mask(e)) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

std::string serialize_hypergraph(const UniformHypergraph& h) {
  std::ostringstream out;
  serialize_hypergraph(h, out);
  return out.str();
}

void write_hypergraph(const UniformHypergraph& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  serialize_hypergraph(h, out);
}

}  // namespace shadowlab::io
