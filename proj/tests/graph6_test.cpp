#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "spectral_lab/graph6.hpp"

using namespace spectral_lab;

TEST(Graph6, FiveCycleInPathOrder) {
  // Cross-checked against networkx.to_graph6_bytes(nx.cycle_graph(5)).
  EXPECT_EQ(encode_graph6(cycle_graph(5)), "Dhc");
}

TEST(Graph6, DUWIsAFiveCycle) {
  const auto g = decode_graph6("DUW");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.regular_degree(), 2);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));
  EXPECT_EQ(encode_graph6(g), "DUW");
}

TEST(Graph6, SingleVertex) {
  EXPECT_EQ(encode_graph6(Graph(1, {})), "@");
  EXPECT_EQ(decode_graph6("@").order(), 1);
  EXPECT_EQ(encode_graph6(Graph(0, {})), "?");
}

TEST(Graph6, LongSizePrefix) {
  const auto p = path_graph(70);
  const auto s = encode_graph6(p);
  EXPECT_EQ(s.substr(0, 4), std::string("~?@E"));  // 70 = 0b000000'000001'000110
  EXPECT_EQ(decode_graph6(s), p);
}

TEST(Graph6, HeaderAndNewlineAccepted) { EXPECT_EQ(decode_graph6(">>graph6<<Dhc\n"), cycle_graph(5)); }

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(decode_graph6(""), Graph6Error);
  EXPECT_THROW(decode_graph6("Dh"), Graph6Error);     // too short
  EXPECT_THROW(decode_graph6("Dhcc"), Graph6Error);   // too long
  EXPECT_THROW(decode_graph6("D h"), Graph6Error);    // char below 63
  EXPECT_THROW(decode_graph6("D\x7fh"), Graph6Error); // char above 126
  EXPECT_THROW(decode_graph6("Bx"), Graph6Error);     // padding bit set (n=3 uses 3 bits)
  EXPECT_THROW(decode_graph6("~?"), Graph6Error);
}

TEST(Graph6, RoundTripCorpusAndRandom) {
  for (const auto& [name, g] : corpus::small_graphs()) EXPECT_EQ(decode_graph6(encode_graph6(g)), g) << name;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto g = oracle::random_graph(static_cast<int>(rng() % 17), 0.4, rng);
    ASSERT_EQ(decode_graph6(encode_graph6(g)), g);
  }
}
