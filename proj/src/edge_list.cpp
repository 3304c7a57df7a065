//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "qeclab/errors.hpp"

namespace qeclab {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i)
      tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool to_int(std::string_view tok, long long &out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  long long n = -1, m = -1;
  int line_no = 0;
  bool have_header = false;
  std::set<Edge> seen;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty())
      continue;

    if (!have_header) {
      if (tokens.size() != 2 || !to_int(tokens[0], n) || !to_int(tokens[1], m) ||
          n < 1 || m < 0 || n > (1 << 20))
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         "expected \"n m\" with n >= 1, m >= 0");
      have_header = true;
      continue;
    }

    long long u = 0, v = 0;
    if (tokens.size() != 2 || !to_int(tokens[0], u) || !to_int(tokens[1], v))
      throw ParseError(ParseErrorKind::kMalformedEdge, line_no,
                       "expected \"u v\"");
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                       "more than the " + std::to_string(m) +
                           " edges declared in the header");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(ParseErrorKind::kIndexOutOfRange, line_no,
                       "vertex ids must lie in [0," + std::to_string(n) + ")");
    if (u == v)
      throw ParseError(ParseErrorKind::kSelfLoop, line_no,
                       "vertex " + std::to_string(u));
    Edge e{static_cast<Vertex>(std::min(u, v)),
           static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second)
      throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                       std::to_string(e.first) + " " + std::to_string(e.second));
    edges.push_back(e);
  }

  if (!have_header)
    throw ParseError(ParseErrorKind::kMalformedHeader, 0, "empty input");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, 0,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_edge_list(const Graph &g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string canonicalize_edge_list(std::string_view text) {
  return serialize_edge_list(parse_edge_list(text));
}

Graph read_edge_list_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

} // namespace qeclab
