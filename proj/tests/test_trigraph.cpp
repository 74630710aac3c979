#include "oracles.hpp"

#include "twwkit/errors.hpp"
#include "twwkit/trigraph.hpp"
#include "twwkit/verify.hpp"

#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

using namespace twwkit;

namespace {

Graph cycle(int n) {
  GenParams p;
  p.n = n;
  return generate(GraphKind::cycle, p, 0);
}

ContractionSequence star_merges() {
  ContractionSequence seq;
  for (Vertex v = 1; v < 7; ++v) seq.merges.emplace_back(0, v);
  return seq;
}

/// Link between two vertex sets by counting cross edges.
Link reference_link(const Graph& g, const Part& x, const Part& y) {
  std::size_t edges = 0;
  for (Vertex u : x)
    for (Vertex v : y) edges += g.adjacent(u, v) ? 1 : 0;
  if (edges == 0) return Link::none;
  return edges == x.size() * y.size() ? Link::black : Link::red;
}

void check_against_definition(const Graph& g, const Trigraph& t) {
  for (int i = 0; i < t.part_count(); ++i) {
    CHECK(t.red_loop(i) == (t.part(i).size() >= 2));
    for (int j = 0; j < t.part_count(); ++j)
      if (i != j) CHECK(t.link(i, j) == reference_link(g, t.part(i), t.part(j)));
  }
}

/// Red components by a union-find over the red edges.
std::vector<std::vector<int>> reference_components(const Trigraph& t) {
  std::vector<int> root(t.part_count());
  for (int i = 0; i < t.part_count(); ++i) root[i] = i;
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (auto [i, j] : t.red_edges()) root[find(i)] = find(j);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < t.part_count(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [key, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("quotient of C4 by {0,2}") {
  const Graph c4 = cycle(4);
  const auto t = Trigraph::quotient(c4, {{0, 2}, {1}, {3}});
  REQUIRE(t.part_count() == 3);
  CHECK(t.link(0, 1) == Link::black);
  CHECK(t.link(0, 2) == Link::black);
  CHECK(t.link(1, 2) == Link::none);
  CHECK(t.red_loop(0));
  CHECK(t.red_edges().empty());
}

TEST_CASE("quotient of the singleton partition is the graph itself") {
  CorpusOptions options;
  options.max_n = 6;
  for (const auto& named : graph_corpus(options)) {
    const auto t = Trigraph::singletons(named.graph);
    CHECK(t.red_edges().empty());
    CHECK(t.black_edges() == named.graph.edges());
  }
}

TEST_CASE("quotient rejects non-partitions") {
  const Graph c4 = cycle(4);
  CHECK_THROWS_AS(Trigraph::quotient(c4, {{0, 1}, {1, 2, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Trigraph::quotient(c4, {{0, 1}, {2}}), InvalidArgument);
  CHECK_THROWS_AS(Trigraph::quotient(c4, {{0, 1}, {}, {2, 3}}), InvalidArgument);
}

TEST_CASE("every quotient satisfies the black/none homogeneity property") {
  for (int n = 1; n <= 5; ++n) {
    GenParams p;
    p.n = n;
    p.p = 0.5;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Graph g = generate(GraphKind::random, p, seed);
      oracle::for_each_partition(n, [&](const std::vector<std::vector<int>>& parts) {
        check_against_definition(g, Trigraph::quotient(g, parts));
      });
    }
  }
  // n = 6, one graph, all 203 partitions
  GenParams p;
  p.n = 6;
  p.p = 0.5;
  const Graph g = generate(GraphKind::random, p, 17);
  int partitions = 0;
  oracle::for_each_partition(6, [&](const std::vector<std::vector<int>>& parts) {
    ++partitions;
    check_against_definition(g, Trigraph::quotient(g, parts));
  });
  CHECK(partitions == 203);
}

TEST_CASE("contracting a and b in C7") {
  const Graph c7 = cycle(7);
  const auto t = contract(Trigraph::singletons(c7), {0}, {1});
  REQUIRE(t.part_count() == 6);
  const int ab = t.index_of({0, 1});
  CHECK(t.red_loop(ab));
  CHECK(t.link(ab, t.index_of({2})) == Link::red);
  CHECK(t.link(ab, t.index_of({6})) == Link::red);
  CHECK(t.red_edges().size() == 2);
  CHECK(t.black_edges().size() == 4);
  CHECK(trigraph_width(t, Width::tww) == 2);
  CHECK(trigraph_width(t, Width::ctww) == 3);
  CHECK(trigraph_width(t, Width::ttww) == 3);
  CHECK(trigraph_width(t, Width::tvtww) == 3);
  CHECK(t.red_components() == std::vector<std::vector<int>>{{0, 1, 5}, {2}, {3}, {4}});
  CHECK(t.red_components() == reference_components(t));
}

TEST_CASE("contracting two isolated vertices creates no red edge") {
  const Graph empty(4);
  const auto t = contract(Trigraph::singletons(empty), {1}, {3});
  CHECK(t.red_edges().empty());
  CHECK(t.red_loop(t.index_of({1, 3})));
}

TEST_CASE("contract rejects unknown or equal parts") {
  const auto t = Trigraph::singletons(cycle(5));
  CHECK_THROWS_AS(contract(t, {0}, {0}), InvalidArgument);
  CHECK_THROWS_AS(contract(t, {0, 1}, {2}), InvalidArgument);
}

TEST_CASE("incremental contraction equals the quotient recomputed from scratch") {
  Rng rng(7);
  for (int round = 0; round < 300; ++round) {
    GenParams p;
    p.n = 2 + static_cast<int>(rng.below(5));
    p.p = rng.unit();
    const Graph g = generate(GraphKind::random, p, rng.next());
    const auto seq = random_sequence(g, rng);
    Trigraph t = Trigraph::singletons(g);
    for (auto [u, v] : seq.merges) {
      t = contract(t, t.part(t.part_containing(u)), t.part(t.part_containing(v)));
      Partition parts = t.parts();
      CHECK(t == Trigraph::quotient(g, parts));
      CHECK(t.red_components() == reference_components(t));
    }
  }
}

TEST_CASE("replay of tiny graphs") {
  const auto k1 = replay(Graph(1), {});
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].part_count() == 1);
  CHECK_FALSE(k1[0].red_loop(0));
  CHECK(trigraph_width(k1[0], Width::tww) == 0);
  CHECK(trigraph_width(k1[0], Width::ctww) == 1);
  CHECK(trigraph_width(k1[0], Width::ttww) == 0);
  CHECK(trigraph_width(k1[0], Width::tvtww) == 0);

  const Graph k2 = parse_graph("n 2\ne 0 1\n");
  const auto steps = replay(k2, {{{0, 1}}});
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].link(0, 1) == Link::black);
  CHECK(steps[1].part_count() == 1);
  CHECK(steps[1].red_loop(0));
  CHECK(trigraph_width(steps[1], Width::ttww) == 1);
  CHECK(trigraph_width(steps[1], Width::tvtww) == 1);
  CHECK(trigraph_width(steps[1], Width::tww) == 0);
  CHECK(trigraph_width(steps[1], Width::ctww) == 1);
}

TEST_CASE("replay rejects invalid sequences") {
  const Graph c4 = cycle(4);
  CHECK_THROWS_AS(replay(c4, {{{0, 1}, {1, 2}}}), InvalidCertificate);
  CHECK_THROWS_AS(replay(c4, {{{0, 1}, {1, 0}, {2, 3}}}), InvalidCertificate);
  CHECK_THROWS_AS(replay(c4, {{{0, 1}, {2, 3}, {0, 4}}}), InvalidCertificate);
  CHECK_THROWS_AS(validate_sequence(c4, {{{0, 1}, {2, 3}, {1, 0}}}), InvalidCertificate);
  CHECK_NOTHROW(validate_sequence(c4, {{{0, 1}, {2, 3}, {1, 2}}}));
}

TEST_CASE("widths of the 7-cycle sequence") {
  const Graph c7 = cycle(7);
  const auto seq = star_merges();
  CHECK(sequence_width(c7, seq, Width::tww) == 2);
  CHECK(sequence_width(c7, seq, Width::ctww) == 3);
  CHECK(sequence_width(c7, seq, Width::tvtww) == 3);
  CHECK(sequence_width(c7, seq, Width::ttww) == 3);
  CHECK(replay(c7, seq).size() == 7);
}

TEST_CASE("the golden transcription matches the replay") {
  std::ifstream in(std::string(TWWKIT_FIXTURES) + "/c7_star_trigraphs.txt");
  REQUIRE(in);
  std::stringstream text;
  text << in.rdbuf();
  GoldenFixture fixture;
  fixture.graph = read_graph_file(std::string(TWWKIT_FIXTURES) + "/c7.gr");
  fixture.sequence = read_sequence_file(std::string(TWWKIT_FIXTURES) + "/c7_star.cs");
  fixture.trigraphs = text.str();
  fixture.tww = 2;
  fixture.ctww = 3;
  const auto report = check_golden(fixture);
  CHECK_MESSAGE(report.passed(), summary_line(report));
  CHECK(report.checks == 10);

  // the built-in copy used by the command line agrees with the file
  const auto builtin = builtin_golden();
  CHECK(builtin.graph == fixture.graph);
  CHECK(builtin.sequence == fixture.sequence);
}

TEST_CASE("a wrong transcription is detected") {
  auto fixture = builtin_golden();
  fixture.trigraphs.replace(fixture.trigraphs.find("red ab g"), 8, "red ab f");
  CHECK_FALSE(check_golden(fixture).passed());
}

TEST_CASE("twin merges on a cograph keep ctww at 1") {
  // K4: every pair is a pair of true twins
  const Graph k4 = parse_graph("n 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
  CHECK(sequence_width(k4, {{{0, 1}, {0, 2}, {0, 3}}}, Width::ctww) == 1);
  CHECK(sequence_width(k4, {{{0, 1}, {0, 2}, {0, 3}}}, Width::tww) == 0);
}

TEST_CASE("sequence files") {
  const auto seq = parse_sequence("# comment\n0 1\n\n2 3\n1 2\n");
  CHECK(seq.merges == std::vector<Edge>{{0, 1}, {2, 3}, {1, 2}});
  CHECK(parse_sequence(serialize_sequence(seq)) == seq);
  CHECK_THROWS_AS(parse_sequence("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_sequence("0\n"), ParseError);
  CHECK_THROWS_AS(parse_sequence("0 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_sequence("a b\n"), ParseError);
}

TEST_CASE("width names") {
  CHECK(parse_width("ctww") == Width::ctww);
  CHECK(width_name(Width::tvtww) == "tvtww");
  CHECK_THROWS_AS(parse_width("cw"), InvalidArgument);
}
