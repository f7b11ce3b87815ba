#include "support.hpp"

#include <ade/io.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace ade {
namespace {

VectorSetFile read_vectors(const std::string& text) {
  std::istringstream in(text);
  return read_vector_set(in);
}

SignedGraph read_graph(const std::string& text) {
  std::istringstream in(text);
  return read_signed_graph(in);
}

std::size_t error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseRational, Accepts) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/2"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("+4/6"), make_rational(2, 3));
  EXPECT_EQ(parse_rational("0"), Rational(0));
}

TEST(ParseRational, Rejects) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "--1", "1/-2", "1 2", "0x10"})
    EXPECT_FALSE(parse_rational(bad).has_value()) << bad;
}

TEST(ToString, Format) {
  EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(7)), "7");
}

TEST(ReadVectorSet, CommentsBlankLinesAndLineNumbers) {
  const auto f = read_vectors("# header\n\n1 -1 0  # trailing\n1/2 1/2 -1\n");
  ASSERT_EQ(f.vectors.size(), 2u);
  EXPECT_EQ(f.lines, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(f.vectors[1][0], make_rational(1, 2));
}

TEST(ReadVectorSet, Errors) {
  EXPECT_EQ(error_line([] { read_vectors("1 -1 0\n0 1\n"); }), 2u);
  EXPECT_EQ(error_line([] { read_vectors("1 -1 0\n\n0 1 x\n"); }), 3u);
  EXPECT_TRUE(read_vectors("# nothing\n").vectors.empty());
}

TEST(WriteVectorSet, RoundTrip) {
  const std::vector<RatVector> vs{{make_rational(1, 2), Rational(-3), Rational(0)}, {Rational(1), make_rational(-5, 7), Rational(2)}};
  std::ostringstream out;
  write_vector_set(out, vs);
  EXPECT_EQ(out.str(), "1/2 -3 0\n1 -5/7 2\n");
  EXPECT_EQ(read_vectors(out.str()).vectors, vs);
}

TEST(ReadSignedGraph, Accepts) {
  const SignedGraph g = read_graph("# triangle\n3 3\n0 1 -\n1 2 -\n0 2 +\n");
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.sign(1, 0), -1);
  EXPECT_EQ(g.sign(2, 0), 1);
  EXPECT_EQ(read_graph("1 0\n").size(), 1u);
}

TEST(ReadSignedGraph, Errors) {
  EXPECT_EQ(error_line([] { read_graph(""); }), 1u);
  EXPECT_EQ(error_line([] { read_graph("3\n"); }), 1u);
  EXPECT_EQ(error_line([] { read_graph("3 x\n"); }), 1u);
  EXPECT_EQ(error_line([] { read_graph("3 1\n1 0 +\n"); }), 2u);   // u >= v
  EXPECT_EQ(error_line([] { read_graph("3 1\n0 3 +\n"); }), 2u);   // out of range
  EXPECT_EQ(error_line([] { read_graph("3 1\n0 1 *\n"); }), 2u);   // bad sign
  EXPECT_EQ(error_line([] { read_graph("3 1\n0 1\n"); }), 2u);     // short line
  EXPECT_EQ(error_line([] { read_graph("3 2\n0 1 +\n0 1 -\n"); }), 3u);  // duplicate
  EXPECT_EQ(error_line([] { read_graph("3 2\n0 1 +\n"); }), 3u);   // missing edge
  EXPECT_EQ(error_line([] { read_graph("3 1\n0 1 +\n1 2 +\n"); }), 3u);  // extra edge
}

TEST(SignedGraphFormat, RoundTripProperty) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    SignedGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v, rng() % 2 ? 1 : -1);
    std::ostringstream out;
    write_signed_graph(out, g);
    const SignedGraph h = read_graph(out.str());
    EXPECT_EQ(adjacency(h), adjacency(g));
    EXPECT_EQ(h.edges(), g.edges());
  }
}

}  // namespace
}  // namespace ade
