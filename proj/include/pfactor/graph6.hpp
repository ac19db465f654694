#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "pfactor/error.hpp"
#include "pfactor/graph.hpp"

namespace pfactor {

/// Largest order representable with the 4-byte graph6 size prefix.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

struct Graph6Options {
  /// Reject set padding bits in the last payload byte. When false they are ignored.
  bool strict_padding = true;
};

namespace detail {

inline std::uint8_t graph6_byte(char c, std::size_t pos) {
  const auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) {
    fail(ErrorCode::ByteOutOfRange, "byte " + std::to_string(b) + " at offset " + std::to_string(pos));
  }
  return static_cast<std::uint8_t>(b - 63);
}

inline std::size_t triangle_bits(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace detail

/// Decodes one graph6 record (no trailing newline). The upper triangle is read
/// column by column: x(0,1), x(0,2), x(1,2), x(0,3), ... six bits per byte,
/// most significant bit first.
inline Graph parse_graph6(std::string_view text, Graph6Options opts = {}) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) detail::fail(ErrorCode::TruncatedPayload, "empty graph6 string");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = detail::graph6_byte(text[0], 0);
    pos = 1;
  } else {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
      detail::fail(ErrorCode::TooLarge, "8-byte graph6 size prefix not supported");
    }
    if (text.size() < 4) detail::fail(ErrorCode::TruncatedPayload, "incomplete size prefix");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | detail::graph6_byte(text[i], i);
    pos = 4;
  }
  if (n == 0) detail::fail(ErrorCode::InvalidOrder, "graph6 encodes the null graph");
  if (n > kMaxOrder) detail::fail(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds cap");

  const std::size_t bits = detail::triangle_bits(n);
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) {
    detail::fail(ErrorCode::TruncatedPayload, "expected " + std::to_string(bytes) + " payload bytes, got " + std::to_string(text.size() - pos));
  }
  if (text.size() - pos > bytes) {
    detail::fail(ErrorCode::TrailingBytes, std::to_string(text.size() - pos - bytes) + " bytes after payload");
  }

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint8_t byte = detail::graph6_byte(text[pos + k / 6], pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) b.add_edge(i, j);
    }
  }
  if (bytes > 0) {
    const std::uint8_t last = detail::graph6_byte(text[pos + bytes - 1], pos + bytes - 1);
    const std::size_t pad = bytes * 6 - bits;
    if (opts.strict_padding && (last & ((1U << pad) - 1U)) != 0) {
      detail::fail(ErrorCode::NonzeroPadding, "padding bits set in final byte");
    }
  }
  return std::move(b).build();
}

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) detail::fail(ErrorCode::TooLarge, "order exceeds graph6 limit");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }

  std::uint8_t acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = static_cast<std::uint8_t>((acc << 1) | (g.adjacent(i, j) ? 1U : 0U));
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

// Edge-list text: first non-blank line is the order, then one "u v" pair per
// line. Lines starting with '#' are comments.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::size_t parse_count(std::string_view& s, std::size_t line) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data()) fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected integer");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<GraphBuilder> builder;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!builder) {
      const std::size_t n = detail::parse_count(line, line_no);
      if (!detail::trim(line).empty()) detail::fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": trailing text after order");
      builder.emplace(n);
      continue;
    }
    const std::size_t u = detail::parse_count(line, line_no);
    const std::size_t v = detail::parse_count(line, line_no);
    if (!detail::trim(line).empty()) detail::fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": trailing text after edge");
    if (u >= builder->order() || v >= builder->order()) {
      detail::fail(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (u == v) detail::fail(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop");
    if (builder->has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      detail::fail(ErrorCode::DuplicateEdge, "line " + std::to_string(line_no) + ": duplicate edge");
    }
    builder->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!builder) detail::fail(ErrorCode::ParseError, "edge list is empty");
  return std::move(*builder).build();
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace pfactor
