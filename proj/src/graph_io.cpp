#include "edgecut/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "edgecut/error.hpp"

namespace edgecut {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split_fields(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

long long parse_int(const Token& tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size() || value < 0) {
    throw ParseError(line_no, tok.column,
                     "expected a non-negative integer, found '" + std::string(tok.text) + "'");
  }
  return value;
}

// Keeps quadratic pair counts well inside long long.
constexpr long long kMaxEdgelistOrder = 1'000'000;

}  // namespace

Graph parse_edgelist(std::string_view text) {
  std::optional<long long> n;
  long long m = 0;
  std::vector<VertexPair> pairs;
  std::vector<std::size_t> pair_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw ParseError(line_no, fields.size() > 2 ? fields[2].column : 1,
                       n ? "expected an edge 'u v'" : "expected a header 'n m'");
    }
    long long a = parse_int(fields[0], line_no);
    long long b = parse_int(fields[1], line_no);
    if (!n) {
      if (a < 1 || a > kMaxEdgelistOrder) {
        throw ParseError(line_no, fields[0].column, "vertex count must be in 1.." +
                                                        std::to_string(kMaxEdgelistOrder));
      }
      if (b > a * (a - 1) / 2) {
        throw ParseError(line_no, fields[1].column, "edge count exceeds n(n-1)/2");
      }
      n = a;
      m = b;
      pairs.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(pairs.size()) == m) {
      throw ParseError(line_no, 1, "expected " + std::to_string(m) + " edges, found more");
    }
    if (a >= *n) throw ParseError(line_no, fields[0].column, "endpoint " + std::to_string(a) + " >= n");
    if (b >= *n) throw ParseError(line_no, fields[1].column, "endpoint " + std::to_string(b) + " >= n");
    if (a == b) throw ParseError(line_no, fields[0].column, "loop at vertex " + std::to_string(a));
    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    pair_lines.push_back(line_no);
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, 0, "missing header 'n m'");
  if (static_cast<long long>(pairs.size()) != m) {
    throw ParseError(line_no, 0, "expected " + std::to_string(m) + " edges, found " +
                                     std::to_string(pairs.size()));
  }
  // Duplicates are reported at their second occurrence.
  std::vector<std::pair<VertexPair, std::size_t>> seen;
  seen.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    seen.push_back({{std::min(u, v), std::max(u, v)}, pair_lines[i]});
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw ParseError(seen[i].second, 1, "duplicate edge (" + std::to_string(seen[i].first.first) +
                                              "," + std::to_string(seen[i].first.second) + ")");
    }
  }
  return Graph(static_cast<int>(*n), pairs);
}

std::string write_edgelist(const Graph& g) {
  std::string out = std::to_string(g.n()) + ' ' + std::to_string(g.m()) + '\n';
  for (auto [u, v] : g.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

Graph parse_graph6(std::string_view line, std::size_t line_number) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t offset = 0;
  if (line.substr(0, kHeader.size()) == kHeader) {
    line.remove_prefix(kHeader.size());
    offset = kHeader.size();
  }
  if (line.empty()) throw ParseError(line_number, offset + 1, "empty graph6 line");
  for (std::size_t i = 0; i < line.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw ParseError(line_number, offset + i + 1,
                       "invalid graph6 character code " + std::to_string(c));
    }
  }
  if (line[0] == '~') throw ParseError(line_number, offset + 1, "unsupported long-form graph6 (n >= 63)");
  const int n = line[0] - 63;
  if (n < 1) throw ParseError(line_number, offset + 1, "graph6 graph with no vertices");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - 1 < bytes) {
    throw ParseError(line_number, offset + line.size() + 1,
                     "truncated graph6 data: expected " + std::to_string(bytes) + " bytes, found " +
                         std::to_string(line.size() - 1));
  }
  if (line.size() - 1 > bytes) {
    throw ParseError(line_number, offset + bytes + 2, "trailing data after graph6 graph");
  }
  std::vector<VertexPair> pairs;
  std::size_t k = 0;
  auto bit = [&](std::size_t index) {
    int chunk = line[1 + index / 6] - 63;
    return (chunk >> (5 - index % 6)) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit(k)) pairs.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if (bit(k)) throw ParseError(line_number, offset + 2 + k / 6, "nonzero graph6 padding bits");
  }
  return Graph(n, pairs);
}

std::string write_graph6(const Graph& g) {
  const int n = g.n();
  if (n > kMaxGraph6Order) {
    throw PreconditionError("short-form graph6 supports at most " +
                            std::to_string(kMaxGraph6Order) + " vertices");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::vector<int> chunks((bits + 5) / 6, 0);
  for (auto [u, v] : g.edges()) {
    // Column-major upper triangle: (u, v) with u < v sits at v(v-1)/2 + u.
    std::size_t k = static_cast<std::size_t>(v) * static_cast<std::size_t>(v - 1) / 2 +
                    static_cast<std::size_t>(u);
    chunks[k / 6] |= 1 << (5 - k % 6);
  }
  std::string out(1, static_cast<char>(n + 63));
  for (int c : chunks) out += static_cast<char>(c + 63);
  return out;
}

}  // namespace edgecut
