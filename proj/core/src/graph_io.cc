// Copyright 2026 The sierpack Authors
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

#include "sierpack/graph_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace sierpack {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Splits into non-empty, non-comment lines.
std::vector<std::string_view> ContentLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<long long> ParseInts(std::string_view line, int line_no) {
  std::vector<long long> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() ||
        (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected integers, got '" + std::string(line) + "'");
    }
    out.push_back(value);
    i = ptr - line.data();
  }
  return out;
}

bool LooksLikeGraph6(std::string_view s) {
  if (s.starts_with(kGraph6Header)) return true;
  if (s.empty() || s.find_first_of(" \t\n") != std::string_view::npos) {
    return false;
  }
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= 63 && c <= 126; });
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  auto lines = ContentLines(text);
  if (lines.empty()) throw ParseError("empty graph file");
  auto header = ParseInts(lines[0], 1);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw ParseError("malformed header: expected 'n m'");
  }
  const long long n = header[0];
  const long long m = header[1];
  if (n > 1'000'000) throw ParseError("graph order too large");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("header announces " + std::to_string(m) +
                     " edges but file has " +
                     std::to_string(lines.size() - 1));
  }
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto uv = ParseInts(lines[i], static_cast<int>(i + 1));
    if (uv.size() != 2) {
      throw ParseError("line " + std::to_string(i + 1) +
                       ": expected two endpoints");
    }
    long long u = uv[0], v = uv[1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("line " + std::to_string(i + 1) +
                       ": endpoint out of range");
    }
    if (u == v) {
      throw ParseError("line " + std::to_string(i + 1) + ": self-loop");
    }
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError("line " + std::to_string(i + 1) + ": duplicate edge");
    }
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph ParseGraph6(std::string_view text) {
  std::string_view s = Trim(text);
  if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw ParseError("graph6: truncated input");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
    return c - 63;
  };
  long long n = next();
  if (n == 63) {
    int b0 = next();
    if (b0 == 63) {
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = b0;
      for (int i = 0; i < 2; ++i) n = (n << 6) | next();
    }
  }
  if (n > 258047) throw ParseError("graph6: order too large");
  std::vector<Edge> edges;
  int bits_left = 0;
  int chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits_left == 0) {
        chunk = next();
        bits_left = 6;
      }
      --bits_left;
      if ((chunk >> bits_left) & 1) edges.emplace_back(i, j);
    }
  }
  if (pos != s.size()) throw ParseError("graph6: trailing characters");
  return Graph(static_cast<int>(n), edges);
}

std::string FormatGraph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int chunk = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((chunk << (6 - bits)) + 63));
  return out;
}

Graph ParseGraph(std::string_view text) {
  auto lines = ContentLines(text);
  if (lines.size() == 1 && LooksLikeGraph6(lines[0])) {
    return ParseGraph6(lines[0]);
  }
  return ParseEdgeList(text);
}

Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string FormatDot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (g.has_labels() && !g.label(v).empty()) {
      out << " [label=\"" << g.label(v) << "\"]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sierpack
