#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tricover/errors.hpp"
#include "tricover/graph.hpp"

// graph6 codec (B. McKay's format, as used by nauty/geng):
//   N(n) = n+63                      for 0 <= n <= 62
//        = 126, 3 bytes of 6 bits    for 63 <= n <= 258047
//        = 126, 126, 6 bytes         up to 2^36 - 1
//   R(x) = upper triangle bits x(i,j), i < j, ordered j-major
//          ((0,1),(0,2),(1,2),(0,3),...), packed six per byte, big-endian,
//          zero-padded, each byte + 63.
namespace tricover::graph6 {

namespace detail {

inline void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

inline int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: unexpected end of input", pos);
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
  return c - 63;
}

}  // namespace detail

inline std::string encode(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  detail::put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph decode(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t pos = 0;
  if (line.substr(0, header.size()) == header) pos = header.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  std::uint64_t n = 0;
  if (detail::sextet(line, pos) == 63) {
    ++pos;
    int width = 3;
    if (pos < line.size() && detail::sextet(line, pos) == 63) {
      ++pos;
      width = 6;
    }
    for (int i = 0; i < width; ++i) n = (n << 6) | static_cast<std::uint64_t>(detail::sextet(line, pos++));
  } else {
    n = static_cast<std::uint64_t>(detail::sextet(line, pos++));
  }
  if (n > (std::uint64_t{1} << 20)) throw ParseError("graph6: order too large", pos);

  const std::uint64_t bits = pair_count(n);
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < body) throw ParseError("graph6: unexpected end of input", line.size());
  if (line.size() - pos > body) throw ParseError("graph6: trailing bytes", pos + body);

  GraphBuilder b(n);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((detail::sextet(line, at) >> (5 - static_cast<int>(k % 6))) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad = 6 - static_cast<int>(bits % 6);
    if (detail::sextet(line, last) & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", last);
  }
  return std::move(b).build();
}

// One graph per non-empty line.
inline std::vector<Graph> read_all(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode(line));
  }
  return out;
}

inline void write(std::ostream& out, const Graph& g) { out << encode(g) << '\n'; }

}  // namespace tricover::graph6
