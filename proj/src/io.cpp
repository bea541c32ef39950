// Copyright 2026 The distbal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distbal/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "distbal/error.hpp"

namespace distbal {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

[[noreturn]] void bad_graph6(std::size_t offset, const std::string& what) {
  throw Error(ErrorCode::MalformedGraph6, what + " at byte " + std::to_string(offset));
}

std::string_view trim_eol(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim_eol(line);
  std::size_t base = 0;
  if (line.starts_with(kGraph6Header)) {
    line.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }

  std::size_t pos = 0;
  auto take = [&](std::string_view what) -> std::uint64_t {
    if (pos >= line.size()) bad_graph6(base + pos, "missing " + std::string(what));
    const auto c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) bad_graph6(base + pos, "invalid character");
    ++pos;
    return c - 63U;
  };

  std::uint64_t n = 0;
  const std::uint64_t first = take("size header");
  if (first < 63) {
    n = first;
  } else {
    std::size_t groups = 3;
    if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126) {
      ++pos;
      groups = 6;
    }
    for (std::size_t i = 0; i < groups; ++i) n = (n << 6) | take("size header");
  }
  if (n >= kUnreachable) bad_graph6(base, "graph too large for this build");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (line.size() - pos < body) {
    bad_graph6(base + line.size(), "truncated body, expected " + std::to_string(body) + " bytes");
  }
  if (line.size() - pos > body) bad_graph6(base + pos + body, "trailing bytes");

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  Vertex row = 0;
  Vertex col = 1;
  for (std::uint64_t b = 0; b < body; ++b) {
    const std::size_t offset = pos;
    const std::uint64_t chunk = take("body");
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = ((chunk >> shift) & 1U) != 0;
      if (bit >= bits) {
        if (set) bad_graph6(base + offset, "nonzero padding bit");
        continue;
      }
      if (set) edges.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return build_graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kGraph6MaxOrder) throw Error(ErrorCode::TooLarge, "graph6 order " + std::to_string(n));

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    const int groups = n <= 258047 ? 3 : 6;
    out.push_back(static_cast<char>(126));
    if (groups == 6) out.push_back(static_cast<char>(126));
    for (int i = groups - 1; i >= 0; --i) {
      out.push_back(static_cast<char>(((n >> (6 * i)) & 63U) + 63));
    }
  }

  unsigned chunk = 0;
  int filled = 0;
  for (Vertex col = 1; col < n; ++col) {
    // Neighbours of `col` below it, walked in increasing order against rows.
    auto nb = g.neighbors(col);
    auto it = nb.begin();
    for (Vertex row = 0; row < col; ++row) {
      while (it != nb.end() && *it < row) ++it;
      chunk = (chunk << 1) | ((it != nb.end() && *it == row) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;

  auto fail = [&](ErrorCode code, const std::string& what) -> void {
    throw Error(code, what + " at line " + std::to_string(line_no));
  };
  auto parse_pair = [&](std::string_view s) {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    const char* p = s.data();
    const char* end = s.data() + s.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{}) fail(ErrorCode::Malformed, "expected two integers");
    p = r1.ptr;
    while (p != end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p == r1.ptr) fail(ErrorCode::Malformed, "expected two integers");
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{}) fail(ErrorCode::Malformed, "expected two integers");
    if (!trim(std::string_view(r2.ptr, end)).empty()) fail(ErrorCode::Malformed, "unexpected text");
    return std::pair{a, b};
  };

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto [a, b] = parse_pair(line);
    if (!header) {
      if (a >= kUnreachable) fail(ErrorCode::TooLarge, "vertex count");
      header.emplace(a, b);
      continue;
    }
    if (edges.size() == header->second) fail(ErrorCode::Malformed, "more edges than declared");
    if (a >= header->first || b >= header->first) {
      fail(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (a == b) fail(ErrorCode::SelfLoop, "vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!header) throw Error(ErrorCode::Malformed, "missing \"n m\" header");
  if (edges.size() != header->second) {
    throw Error(ErrorCode::Malformed, "declared " + std::to_string(header->second) +
                                          " edges, found " + std::to_string(edges.size()));
  }
  return build_graph(header->first, edges);
}

std::string write_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph_text(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    format = GraphFormat::Graph6;
    std::string_view rest = text;
    while (!rest.empty()) {
      const auto nl = rest.find('\n');
      std::string_view line = trim(rest.substr(0, nl));
      rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
      if (line.empty() || line.front() == '#') continue;
      if (std::isdigit(static_cast<unsigned char>(line.front()))) format = GraphFormat::EdgeList;
      break;
    }
  }
  if (format == GraphFormat::EdgeList) return parse_edgelist(text);

  // One graph per file: the first non-blank line.
  std::string_view rest = text;
  std::size_t skipped = 0;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    if (!trim(line).empty()) return parse_graph6(trim(line));
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
    skipped += nl + 1;
  }
  throw Error(ErrorCode::MalformedGraph6, "empty input at byte " + std::to_string(skipped));
}

std::string write_graph_text(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return write_edgelist(g);
  return write_graph6(g) + "\n";
}

}  // namespace distbal
