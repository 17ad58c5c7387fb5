#include "eqlab/graph6.hpp"

#include <istream>

namespace eqlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool in_range(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 63 && u <= 126;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  std::size_t end = line.size();
  if (end > pos && line[end - 1] == '\n') --end;
  if (end > pos && line[end - 1] == '\r') --end;

  auto byte_at = [&](std::size_t i) -> unsigned {
    if (i >= end) throw ParseError("graph6 input ends early", i);
    if (!in_range(line[i])) throw ParseError("byte outside the graph6 range 63-126", i);
    return static_cast<unsigned char>(line[i]) - kBias;
  };

  // N(n): one byte for 0-62, 126 + three bytes (18 bits) up to 258047,
  // 126 126 + six bytes (36 bits) beyond.
  std::uint64_t order = 0;
  if (pos >= end) throw ParseError("empty graph6 line", pos);
  if (byte_at(pos) != 63) {
    order = byte_at(pos);
    pos += 1;
  } else if (pos + 1 < end && static_cast<unsigned char>(line[pos + 1]) == 126) {
    for (std::size_t i = 0; i < 6; ++i) order = (order << 6) | byte_at(pos + 2 + i);
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) order = (order << 6) | byte_at(pos + 1 + i);
    pos += 4;
  }
  if (order > kMaxOrder) {
    throw CapacityError("graph6 order " + std::to_string(order) + " exceeds the limit of 64");
  }

  const auto n = static_cast<unsigned>(order);
  const std::size_t nbits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (end - pos < nbytes) throw ParseError("graph6 payload too short for order " + std::to_string(n), end);
  if (end - pos > nbytes) throw ParseError("trailing bytes after graph6 payload", pos + nbytes);

  Graph g(n);
  std::size_t t = 0;
  for (unsigned j = 1; j < n; ++j) {
    for (unsigned i = 0; i < j; ++i, ++t) {
      const unsigned chunk = byte_at(pos + t / 6);
      if ((chunk >> (5 - t % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const unsigned last = byte_at(pos + nbytes - 1);
    if ((last & ((1U << (6 - nbits % 6)) - 1)) != 0) {
      throw ParseError("nonzero padding bits in graph6 payload", pos + nbytes - 1);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const unsigned n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  }
  unsigned chunk = 0;
  unsigned filled = 0;
  for (unsigned j = 1; j < n; ++j) {
    for (unsigned i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace eqlab
