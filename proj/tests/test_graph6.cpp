#include <fstream>
#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "eqlab/enumeration.hpp"
#include "eqlab/graph6.hpp"
#include "eqlab/isomorphism.hpp"
#include "named_graphs.hpp"

using namespace eqlab;

namespace {

// Independent decoder for single-byte orders, bit by bit per the format.
Graph reference_decode(const std::string& s) {
  const unsigned n = static_cast<unsigned char>(s[0]) - 63;
  Graph g(n);
  std::size_t bit = 0;
  for (unsigned j = 1; j < n; ++j) {
    for (unsigned i = 0; i < j; ++i, ++bit) {
      const unsigned byte = static_cast<unsigned char>(s[1 + bit / 6]) - 63;
      if ((byte >> (5 - bit % 6)) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::size_t error_offset(const std::string& text) {
  try {
    (void)parse_graph6(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("graph6 examples", "[graph6]") {
  const Graph five = parse_graph6("D??");
  CHECK(five.order() == 5);
  CHECK(five.edge_count() == 0);

  CHECK(parse_graph6("A_") == named::complete(2));
  CHECK(parse_graph6("A?") == Graph(2));
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("?") == Graph(0));
  CHECK(parse_graph6("DQc") == new_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
  CHECK(parse_graph6("C~") == named::complete(4));
  CHECK(parse_graph6("D~{") == named::complete(5));
  CHECK(parse_graph6("G~~~~{") == named::complete(8));
  CHECK(are_isomorphic(parse_graph6("IheA@GUAo"), named::petersen()));

  CHECK(write_graph6(named::complete(2)) == "A_");
  CHECK(write_graph6(Graph(5)) == "D??");
  CHECK(write_graph6(named::complete(8)) == "G~~~~{");
}

TEST_CASE("graph6 header and line endings", "[graph6]") {
  CHECK(parse_graph6(">>graph6<<A_") == named::complete(2));
  CHECK(parse_graph6("A_\n") == named::complete(2));
  CHECK(parse_graph6("A_\r\n") == named::complete(2));
}

TEST_CASE("graph6 multi-byte orders", "[graph6]") {
  for (unsigned order : {62U, 63U, 64U}) {
    const Graph g = named::cycle(order);
    const std::string s = write_graph6(g);
    CHECK(s.front() == (order == 62 ? char(63 + 62) : '~'));
    CHECK(parse_graph6(s) == g);
  }
  const std::string empty63 = write_graph6(Graph(63));
  CHECK(empty63.substr(0, 4) == "~??~");
  CHECK(empty63.size() == 4 + (63 * 62 / 2 + 5) / 6);
  // Orders beyond 64 decode their size but are refused.
  CHECK_THROWS_AS(parse_graph6("~?@@"), CapacityError);
  // The eight-byte form for a small order is legal.
  CHECK(parse_graph6("~~?????@") == Graph(1));
}

TEST_CASE("graph6 round-trip over the fixture file", "[graph6][property]") {
  std::ifstream in(EQLAB_TEST_DATA "/small_graphs.g6");
  REQUIRE(in.good());
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const std::string body = line.rfind(">>graph6<<", 0) == 0 ? line.substr(10) : line;
    const Graph g = parse_graph6(line);
    CHECK(g == reference_decode(body));
    CHECK(write_graph6(g) == body);
    ++count;
  }
  CHECK(count == 22);

  std::ifstream again(EQLAB_TEST_DATA "/small_graphs.g6");
  CHECK(read_graph6_stream(again).size() == 22);
}

TEST_CASE("graph6 round-trip over the full catalog to order 8", "[graph6][property]") {
  for (unsigned order = 0; order <= 8; ++order) {
    for (const Graph& g : enumerate_all(order).graphs) {
      const std::string s = write_graph6(g);
      REQUIRE(parse_graph6(s) == g);
      REQUIRE(reference_decode(s) == g);
      REQUIRE(write_graph6(parse_graph6(s)) == s);
    }
  }
}

TEST_CASE("malformed graph6 reports byte offsets", "[graph6][errors]") {
  CHECK(error_offset("") == 0);
  CHECK(error_offset("D?") == 2);       // payload too short
  CHECK(error_offset("A_?") == 2);      // trailing byte
  CHECK(error_offset("A_x") == 2);
  CHECK(error_offset("D?\x7f") == 2);   // byte out of range
  CHECK(error_offset("D? ") == 2);
  CHECK(error_offset("A`") == 1);       // nonzero padding bits
  CHECK(error_offset("~?") == 2);       // truncated size prefix
  CHECK(error_offset(">>graph6<<D?") == 12);

  try {
    (void)parse_graph6("A_?");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("(at byte 2)") != std::string::npos);
  }
}

TEST_CASE("graph6 fuzzing never crashes", "[graph6][property]") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> printable(63, 126);
  for (int i = 0; i < 20000; ++i) {
    std::string s(static_cast<std::size_t>(len(rng)), '\0');
    for (char& c : s) c = static_cast<char>(i % 2 == 0 ? byte(rng) : printable(rng));
    try {
      const Graph g = parse_graph6(s);
      REQUIRE(parse_graph6(write_graph6(g)) == g);
    } catch (const ParseError& e) {
      REQUIRE(e.offset() <= s.size());
    } catch (const CapacityError&) {
    }
  }
}

TEST_CASE("read_graph6_stream skips blank lines", "[graph6]") {
  std::istringstream in(">>graph6<<A_\n\nC~\n\nD??\n");
  const auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[1] == named::complete(4));
}
