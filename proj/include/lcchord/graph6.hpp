#pragma once

// graph6 encoding, as emitted by the standard small-graph generators.
//
// Layout of one line:
//   N(n)  then  R(x)
// N(n): n < 63        -> one byte, n + 63
//       63 <= n <= 258047 -> byte 126, then n as 18 bits big-endian in three
//                        6-bit groups, each + 63
// R(x): the upper triangle read column by column,
//         x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3) ... x(n-2,n-1)
//       packed 6 bits per byte, most significant bit first, each byte + 63,
//       right-padded with zero bits to a multiple of 6.
//
// An optional ">>graph6<<" prefix is accepted on input and never emitted.
// The eight-byte size form (n > 258047) is rejected.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcchord/error.hpp"
#include "lcchord/graph.hpp"

namespace lcchord {

inline constexpr int kGraph6MaxOrder = 258047;

namespace detail {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

inline std::size_t g6_data_chars(std::size_t n) {
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view line) {
  using namespace detail;
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Error(Errc::graph6_truncated, "empty graph6 line");

  for (std::size_t i = 0; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kG6Lo || c > kG6Hi)
      throw Error(Errc::graph6_bad_char,
                  "byte " + std::to_string(c) + " at offset " + std::to_string(i) + " outside 63..126");
  }

  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(line[0]) < kG6Hi) {
    n = static_cast<std::size_t>(line[0] - kG6Lo);
    pos = 1;
  } else {
    if (line.size() < 4) throw Error(Errc::graph6_truncated, "truncated size prefix");
    if (static_cast<unsigned char>(line[1]) == kG6Hi)
      throw Error(Errc::graph6_too_large, "eight-byte size form (n > 258047) is not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(line[i] - kG6Lo);
    pos = 4;
  }

  const std::size_t need = g6_data_chars(n);
  const std::size_t have = line.size() - pos;
  if (have < need)
    throw Error(Errc::graph6_truncated,
                "expected " + std::to_string(need) + " data bytes, found " + std::to_string(have));
  if (have > need)
    throw Error(Errc::graph6_trailing, std::to_string(have - need) + " trailing bytes after edge data");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  const std::size_t total_bits = n > 0 ? n * (n - 1) / 2 : 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int byte = line[pos + bit / 6] - kG6Lo;
      if (byte & (0x20 >> (bit % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; bit < need * 6; ++bit) {
    const int byte = line[pos + bit / 6] - kG6Lo;
    if (byte & (0x20 >> (bit % 6)))
      throw Error(Errc::graph6_padding, "nonzero padding bit " + std::to_string(bit - total_bits));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string emit_graph6(const Graph& g) {
  using namespace detail;
  const auto n = static_cast<std::size_t>(g.order());
  if (n > static_cast<std::size_t>(kGraph6MaxOrder))
    throw Error(Errc::graph6_too_large, "n = " + std::to_string(n) + " exceeds 258047");

  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kG6Lo));
  } else {
    out.push_back(static_cast<char>(kG6Hi));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
  }

  std::vector<std::uint8_t> data(g6_data_chars(n), 0);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
        data[bit / 6] = static_cast<std::uint8_t>(data[bit / 6] | (0x20 >> (bit % 6)));
  for (auto b : data) out.push_back(static_cast<char>(b + kG6Lo));
  return out;
}

}  // namespace lcchord
