#include "oracles.hpp"

#include "twwkit/errors.hpp"
#include "twwkit/transform.hpp"
#include "twwkit/verify.hpp"

#include <doctest.h>

using namespace twwkit;

namespace {

const std::string kFixtures = TWWKIT_FIXTURES;

Graph make(GraphKind kind, int n) {
  GenParams p;
  p.n = n;
  return generate(kind, p, 0);
}

ContractionSequence star_sequence(int n) {
  ContractionSequence seq;
  for (Vertex v = 1; v < n; ++v) seq.merges.emplace_back(0, v);
  return seq;
}

}  // namespace

TEST_CASE("expression from the 7-cycle sequence") {
  const Graph c7 = read_graph_file(kFixtures + "/c7.gr");
  const auto seq = read_sequence_file(kFixtures + "/c7_star.cs");
  const int ctww = sequence_width(c7, seq, Width::ctww);
  const auto e = seq_to_expr(c7, seq);
  CHECK(eval_expr(e).graph == c7);
  CHECK(expr_width(e) <= ctww + 1);
  CHECK(max_left_operand_labels(e) <= ctww);

  const auto t = expr_to_branch(e);
  CHECK_NOTHROW(validate_decomposition(c7, t));
  CHECK(decomposition_width(c7, t) <= ctww);
}

TEST_CASE("linear expression from the 7-cycle sequence") {
  const Graph c7 = read_graph_file(kFixtures + "/c7.gr");
  const auto seq = read_sequence_file(kFixtures + "/c7_star.cs");
  const auto e = seq_to_linexpr(c7, seq);
  CHECK(eval_expr(e).graph == c7);
  CHECK(is_linear(e));
  CHECK(singleton_labels_fresh(e));
  CHECK(expr_width(e) <= sequence_width(c7, seq, Width::tvtww) + 1);
}

TEST_CASE("twin merges on K4 give a 2-expression") {
  const Graph k4 = make(GraphKind::complete, 4);
  const auto e = seq_to_expr(k4, star_sequence(4));
  CHECK(eval_expr(e).graph == k4);
  CHECK(expr_width(e) <= 2);
}

TEST_CASE("one vertex gives one vertex node") {
  const Graph k1(1);
  for (const auto& e : {seq_to_expr(k1, {}), seq_to_linexpr(k1, {})}) {
    CHECK(e.kind() == CwExpr::Kind::vertex);
    CHECK(eval_expr(e).graph == k1);
  }
  const auto branch = expr_to_branch(CwExpr::vertex(1, "0"));
  CHECK(branch.leaf_count() == 1);
  CHECK(decomposition_width(k1, branch) == 0);
}

TEST_CASE("linear expression of the path on three vertices") {
  const Graph p3 = make(GraphKind::path, 3);
  const ContractionSequence seq{{{0, 1}, {0, 2}}};
  const auto e = seq_to_linexpr(p3, seq);
  CHECK(is_linear(e));
  CHECK(eval_expr(e).graph == p3);
  CHECK(expr_width(e) <= sequence_width(p3, seq, Width::tvtww) + 1);
}

TEST_CASE("the worked contraction example") {
  const Graph g = read_graph_file(kFixtures + "/worked_contraction.gr");
  const auto seq = read_sequence_file(kFixtures + "/worked_contraction.cs");
  CHECK(g.order() == 7);
  CHECK(g.size() == 13);
  const int ctww = sequence_width(g, seq, Width::ctww);
  CHECK(ctww == 3);
  const auto e = seq_to_expr(g, seq);
  CHECK(eval_expr(e).graph == g);
  CHECK(expr_width(e) <= 4);
  CHECK(max_left_operand_labels(e) <= ctww);
  const auto linear = seq_to_linexpr(g, seq);
  CHECK(eval_expr(linear).graph == g);
  CHECK(expr_width(linear) <= sequence_width(g, seq, Width::tvtww) + 1);
}

TEST_CASE("the worked expression example collapses into bounded parks") {
  const auto e = read_expr_file(kFixtures + "/worked_expression.expr");
  const auto lg = eval_expr(e);
  CHECK(lg.graph.order() == 10);
  CHECK(expr_width(e) == 3);
  const auto seq = expr_to_seq(lg.graph, e);
  CHECK_NOTHROW(validate_sequence(lg.graph, seq));
  CHECK(sequence_width(lg.graph, seq, Width::ctww) <= 2 * 3 - 1);
}

TEST_CASE("expression to sequence bounds") {
  // cograph from a 2-expression
  const auto cograph = parse_expr("e(1,2,((v(1:0)+v(1:1))+r(1->2,e(1,2,(v(1:2)+v(2:3))))))");
  const Graph g = eval_expr(cograph).graph;
  CHECK(is_cograph(g));
  CHECK(sequence_width(g, expr_to_seq(g, cograph), Width::ctww) <= 3);
  CHECK(exact_width(g, Width::ctww).value == 1);

  const auto k2 = parse_expr("e(1,2,(v(1:0)+v(2:1)))");
  const Graph edge = eval_expr(k2).graph;
  CHECK(sequence_width(edge, expr_to_seq(edge, k2), Width::ctww) <= 2);
}

TEST_CASE("expression to sequence needs the right graph") {
  const auto k2 = parse_expr("e(1,2,(v(1:0)+v(2:1)))");
  CHECK_THROWS_AS(expr_to_seq(Graph(2), k2), InvalidCertificate);
  CHECK_THROWS_AS(expr_to_seq(Graph(3), k2), InvalidCertificate);
}

TEST_CASE("branch decompositions to sequences") {
  const Graph k2 = make(GraphKind::complete, 2);
  const auto seq = branch_to_seq(k2, parse_decomposition("(0 1)"), 1);
  CHECK(sequence_width(k2, seq, Width::ctww) <= 3);

  const Graph c5 = make(GraphKind::cycle, 5);
  const auto rw = exact_rw(c5);
  BranchContractionStats stats;
  const auto c5_seq = branch_to_seq(c5, rw.witness, rw.value, &stats);
  CHECK(sequence_width(c5, c5_seq, Width::ctww) <= (2 << rw.value) - 1);
  CHECK(stats.row_searches + stats.free_merges == 4);

  GenParams star;
  star.a = 1;
  star.b = 4;
  const Graph k14 = generate(GraphKind::complete_bipartite, star, 0);
  for (const char* text : {"(0 (1 (2 (3 4))))", "((0 1) ((2 3) 4))", "(((0 4) 3) (1 2))"}) {
    const auto t = parse_decomposition(text);
    REQUIRE(decomposition_width(k14, t) == 1);
    CHECK(sequence_width(k14, branch_to_seq(k14, t, 1), Width::ctww) <= 3);
  }
}

TEST_CASE("branch_to_seq rejects a width bound below the decomposition width") {
  GenParams p;
  p.rows = 3;
  p.cols = 3;
  const Graph grid = generate(GraphKind::grid, p, 0);
  const auto rw = exact_rw(grid);
  REQUIRE(rw.value >= 2);
  CHECK_THROWS_AS(branch_to_seq(grid, rw.witness, rw.value - 1), InvalidCertificate);
  CHECK_THROWS_AS(branch_to_seq(grid, parse_decomposition("(0 1)"), 3), InvalidCertificate);
}

TEST_CASE("round trips on every graph with at most 5 vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      const auto ctww = exact_width(g, Width::ctww);
      const auto e = seq_to_expr(g, ctww.witness);
      CHECK(eval_expr(e).graph == g);
      CHECK(expr_width(e) <= ctww.value + 1);
      CHECK(max_left_operand_labels(e) <= ctww.value);
      CHECK(sequence_width(g, expr_to_seq(g, e), Width::ctww) <= 2 * (ctww.value + 1) - 1);
      CHECK(decomposition_width(g, expr_to_branch(e)) <= ctww.value);

      const auto tvtww = exact_width(g, Width::tvtww);
      const auto linear = seq_to_linexpr(g, tvtww.witness);
      CHECK(is_linear(linear));
      CHECK(singleton_labels_fresh(linear));
      CHECK(eval_expr(linear).graph == g);
      CHECK(expr_width(linear) <= tvtww.value + 1);
      const auto back = expr_to_seq(g, linear);
      CHECK(sequence_width(g, back, Width::tvtww) <= expr_width(linear));
      CHECK(sequence_width(g, back, Width::ctww) <= expr_width(linear));
    }
}

TEST_CASE("conversions along random sequences") {
  Rng rng(21);
  for (int round = 0; round < 200; ++round) {
    GenParams p;
    p.n = 1 + static_cast<int>(rng.below(8));
    p.p = rng.unit();
    const Graph g = generate(GraphKind::random, p, rng.next());
    const auto seq = random_sequence(g, rng);
    const int ctww = sequence_width(g, seq, Width::ctww);
    const auto e = seq_to_expr(g, seq);
    CHECK(eval_expr(e).graph == g);
    CHECK(expr_width(e) <= ctww + 1);
    CHECK(max_left_operand_labels(e) <= ctww);
    const auto linear = seq_to_linexpr(g, seq);
    CHECK(eval_expr(linear).graph == g);
    CHECK(singleton_labels_fresh(linear));
    CHECK(expr_width(linear) <= sequence_width(g, seq, Width::tvtww) + 1);
  }
}

TEST_CASE("claim checkers see violations") {
  // the left operand of the union carries three labels
  const auto wide = parse_expr("((v(1)+(v(2)+v(3)))+v(4))");
  CHECK(max_left_operand_labels(wide) == 3);
  CHECK(vertex_labels(wide) == std::set<int>{1, 2, 3, 4});
  CHECK_FALSE(singleton_labels_fresh(parse_expr("((v(1)+v(2))+v(1))")));
  CHECK(singleton_labels_fresh(parse_expr("((v(1)+v(2))+v(3))")));
}
