#include "oracles.hpp"

#include "twwkit/cwexpr.hpp"
#include "twwkit/errors.hpp"
#include "twwkit/trigraph.hpp"
#include "twwkit/verify.hpp"

#include <doctest.h>

#include <map>

using namespace twwkit;

namespace {

/// Labelled vertices and edges keyed by vertex name, built by following
/// the four operations literally.
struct Built {
  std::map<std::string, int> labels;
  std::set<std::pair<std::string, std::string>> edges;
};

Built reference_eval(const CwExpr& e) {
  switch (e.kind()) {
    case CwExpr::Kind::vertex:
      return {{{e.name(), e.label()}}, {}};
    case CwExpr::Kind::disjoint_union: {
      Built left = reference_eval(e.left());
      Built right = reference_eval(e.right());
      left.labels.insert(right.labels.begin(), right.labels.end());
      left.edges.insert(right.edges.begin(), right.edges.end());
      return left;
    }
    case CwExpr::Kind::relabel: {
      Built inner = reference_eval(e.child());
      for (auto& [name, label] : inner.labels)
        if (label == e.first()) label = e.second();
      return inner;
    }
    case CwExpr::Kind::add_edges: {
      Built inner = reference_eval(e.child());
      for (auto& [x, lx] : inner.labels)
        for (auto& [y, ly] : inner.labels)
          if (x < y && ((lx == e.first() && ly == e.second()) || (lx == e.second() && ly == e.first())))
            inner.edges.insert({x, y});
      return inner;
    }
  }
  return {};
}

CwExpr random_expr(Rng& rng, int leaves, int k, int& counter) {
  if (leaves == 1) {
    CwExpr leaf = CwExpr::vertex(1 + static_cast<int>(rng.below(k)), "x" + std::to_string(counter++));
    return leaf;
  }
  const int i = 1 + static_cast<int>(rng.below(k));
  int j = 1 + static_cast<int>(rng.below(k - 1));
  if (j >= i) ++j;
  switch (rng.below(4)) {
    case 0:
      return CwExpr::relabel(i, j, random_expr(rng, leaves, k, counter));
    case 1:
      return CwExpr::add_edges(i, j, random_expr(rng, leaves, k, counter));
    default: {
      const int left = 1 + static_cast<int>(rng.below(leaves - 1));
      CwExpr l = random_expr(rng, left, k, counter);
      return CwExpr::disjoint_union(std::move(l), random_expr(rng, leaves - left, k, counter));
    }
  }
}

void check_matches_reference(const CwExpr& e) {
  const auto lg = eval_expr(e);
  const auto expected = reference_eval(e);
  REQUIRE(static_cast<int>(expected.labels.size()) == lg.graph.order());
  std::map<std::string, Vertex> id;
  for (Vertex v = 0; v < lg.graph.order(); ++v) id[lg.names[v]] = v;
  for (auto& [name, label] : expected.labels) CHECK(lg.labels[id.at(name)] == label);
  std::set<std::pair<std::string, std::string>> got;
  for (auto [u, v] : lg.graph.edges()) {
    auto x = lg.names[u], y = lg.names[v];
    if (y < x) std::swap(x, y);
    got.insert({x, y});
  }
  CHECK(got == expected.edges);
}

Graph make(GraphKind kind, int n) {
  GenParams p;
  p.n = n;
  return generate(kind, p, 0);
}

}  // namespace

TEST_CASE("parse and evaluate a labelled edge") {
  const auto e = parse_expr("e(1,2,(v(1:a)+v(2:b)))");
  const auto lg = eval_expr(e);
  CHECK(lg.graph.order() == 2);
  CHECK(lg.graph.adjacent(0, 1));
  CHECK(lg.names == std::vector<std::string>{"a", "b"});
  CHECK(lg.labels == std::vector<int>{1, 2});
  CHECK(expr_width(e) == 2);
  CHECK(is_linear(e));
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_expr("r(1->1,v(1))"), ParseError);
  CHECK_THROWS_AS(parse_expr("e(2,2,v(1))"), ParseError);
  CHECK_THROWS_AS(parse_expr("(v(1:a)+v(2:a))"), ParseError);
  CHECK_THROWS_AS(parse_expr("(v(1)+v(2)"), ParseError);
  CHECK_THROWS_AS(parse_expr("v(0)"), ParseError);
  CHECK_THROWS_AS(parse_expr("v(1) v(2)"), ParseError);
  try {
    parse_expr("(v(1)+\n  q(2))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("factories enforce the label invariants") {
  CHECK_THROWS_AS(CwExpr::vertex(0), InvalidArgument);
  CHECK_THROWS_AS(CwExpr::relabel(2, 2, CwExpr::vertex(1)), InvalidArgument);
  CHECK_THROWS_AS(CwExpr::add_edges(1, 1, CwExpr::vertex(1)), InvalidArgument);
}

TEST_CASE("width and linearity") {
  const auto single = parse_expr("e(1,2,(v(1)+v(2)))");
  CHECK(expr_width(single) == 2);
  CHECK(is_linear(single));
  const auto doubled = parse_expr("(e(1,2,(v(1)+v(2))) + e(1,2,(v(1)+v(2))))");
  CHECK(expr_width(doubled) == 2);
  CHECK_FALSE(is_linear(doubled));
  CHECK(expr_width(parse_expr("r(1->3, (v(1) + v(2)))")) == 3);
}

TEST_CASE("canonical round trip and evaluation on random expressions") {
  Rng rng(11);
  for (int round = 0; round < 100; ++round) {
    int counter = 0;
    const int leaves = 1 + static_cast<int>(rng.below(8));
    const int k = 2 + static_cast<int>(rng.below(3));
    const CwExpr e = random_expr(rng, leaves, k, counter);
    const std::string text = serialize_expr(e);
    CAPTURE(text);
    CHECK(serialize_expr(parse_expr(text)) == text);
    // whitespace and comments do not matter
    std::string spaced;
    for (char c : text) {
      spaced += c;
      if (c == ',' || c == '+') spaced += " \n ";
    }
    CHECK(serialize_expr(parse_expr("# random\n" + spaced)) == text);
    check_matches_reference(e);
    CHECK(e.leaf_count() == leaves);
  }
}

TEST_CASE("vertex naming rules") {
  CHECK(leaf_vertex_ids(parse_expr("(v(1:2)+(v(1:0)+v(1:1)))")) == std::vector<Vertex>{2, 0, 1});
  CHECK(leaf_vertex_ids(parse_expr("(v(1:b)+(v(1:c)+v(1:a)))")) == std::vector<Vertex>{1, 2, 0});
  CHECK(leaf_vertex_ids(parse_expr("(v(1)+(v(1:c)+v(1)))")) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("relabelling only touches the relabelled subterm") {
  // the left vertex keeps label 1 although the right subterm renames 1 to 2
  const auto lg = eval_expr(parse_expr("e(1,2,(v(1:a)+r(1->2,v(1:b))))"));
  CHECK(lg.graph.adjacent(0, 1));
  CHECK(lg.labels == std::vector<int>{1, 2});
}

TEST_CASE("label renaming helpers") {
  const auto e = parse_expr("e(1,3,(v(1:a)+v(3:b)))");
  CHECK(labels_used(e) == std::vector<int>{1, 3});
  const auto renamed = rename_labels(e, {{3, 2}});
  CHECK(serialize_expr(renamed) == "e(1,2,(v(1:a)+v(2:b)))");
  const auto injective = rename_labels_injective(e, {{3, 1}});
  CHECK(labels_used(injective) == std::vector<int>{1, 2});
  CHECK(eval_expr(injective).graph == eval_expr(e).graph);
}

TEST_CASE("exact clique-width on known graphs") {
  CHECK(exact_cw(make(GraphKind::cycle, 7), 7).value == 4);
  CHECK(exact_cw(make(GraphKind::path, 4), 4).value == 3);
  CHECK(exact_cw(make(GraphKind::complete, 5), 5).value == 2);
  CHECK(exact_cw(Graph(3), 3).value == 1);
  CHECK(exact_lcw(Graph(1), 1).value == 1);
  CHECK(exact_lcw(make(GraphKind::cycle, 7), 7).value == 4);
}

TEST_CASE("clique-width 1 exactly on edgeless graphs and at most 2 exactly on cographs") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      const auto result = exact_cw(g, n);
      CHECK((result.value == 1) == (g.size() == 0));
      CHECK((result.value <= 2) == !oracle::has_induced_p4(g));
      CHECK(eval_expr(result.witness).graph == g);
      CHECK(expr_width(result.witness) == result.value);
    }
}

TEST_CASE("linear clique-width is at least clique-width, witnesses are valid") {
  CorpusOptions options;
  options.max_n = 6;
  for (const auto& named : graph_corpus(options)) {
    CAPTURE(named.name);
    const int n = named.graph.order();
    const auto cw = exact_cw(named.graph, n);
    const auto lcw = exact_lcw(named.graph, n);
    CHECK(cw.value <= lcw.value);
    CHECK(is_linear(lcw.witness));
    CHECK(eval_expr(lcw.witness).graph == named.graph);
    CHECK(expr_width(lcw.witness) == lcw.value);
  }
}

TEST_CASE("clique-width against component twin-width on the cograph class") {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    p.n = 2 + static_cast<int>(seed % 6);
    const Graph g = generate(GraphKind::cograph, p, seed);
    if (g.size() == 0) continue;
    CHECK(exact_cw(g, p.n).value == 2);
  }
}

TEST_CASE("exact search limits") {
  ExactCwLimits limits;
  limits.max_n = 4;
  CHECK_THROWS_AS(exact_cw(make(GraphKind::cycle, 5), 5, limits), BudgetExceeded);
  try {
    exact_cw(make(GraphKind::cycle, 7), 3);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.lower_bound().has_value());
    CHECK(*e.lower_bound() == 4);
  }
}
