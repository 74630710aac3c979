#include "oracles.hpp"

#include "twwkit/cwexpr.hpp"
#include "twwkit/errors.hpp"
#include "twwkit/rankwidth.hpp"
#include "twwkit/verify.hpp"

#include <doctest.h>

#include <climits>
#include <map>
#include <numeric>

using namespace twwkit;

namespace {

Graph make(GraphKind kind, int n) {
  GenParams p;
  p.n = n;
  return generate(kind, p, 0);
}

std::vector<int> members(std::uint32_t set) {
  std::vector<int> out;
  for (int v = 0; set >> v; ++v)
    if (set >> v & 1) out.push_back(v);
  return out;
}

/// Widths of every rooted binary tree with leaf set `set`: each tree is
/// summarised by the maximum cut rank over its non-root nodes.
void all_rooted_trees(const Graph& g, std::uint32_t set, std::vector<int>& widths) {
  if ((set & (set - 1)) == 0) {
    widths.push_back(0);
    return;
  }
  const std::uint32_t lowest = set & (~set + 1);
  // unordered splits: the lowest vertex always goes left
  for (std::uint32_t left = (set - 1) & set; left; left = (left - 1) & set) {
    if (!(left & lowest)) continue;
    const std::uint32_t right = set & ~left;
    std::vector<int> left_widths, right_widths;
    all_rooted_trees(g, left, left_widths);
    all_rooted_trees(g, right, right_widths);
    const int here = std::max(oracle::cut_rank_by_span(g, members(left)), oracle::cut_rank_by_span(g, members(right)));
    for (int a : left_widths)
      for (int b : right_widths) widths.push_back(std::max({here, a, b}));
  }
}

/// Rank-width by trying every split of every subtree (memoised on subsets).
int best_subtree(const Graph& g, std::uint32_t set, std::map<std::uint32_t, int>& memo) {
  if ((set & (set - 1)) == 0) return 0;
  if (auto it = memo.find(set); it != memo.end()) return it->second;
  const std::uint32_t lowest = set & (~set + 1);
  int best = INT_MAX;
  for (std::uint32_t left = (set - 1) & set; left; left = (left - 1) & set) {
    if (!(left & lowest)) continue;
    const std::uint32_t right = set & ~left;
    const int here = std::max({oracle::cut_rank_by_span(g, members(left)), oracle::cut_rank_by_span(g, members(right)),
                               best_subtree(g, left, memo), best_subtree(g, right, memo)});
    best = std::min(best, here);
  }
  return memo[set] = best;
}

int reference_rw(const Graph& g) {
  if (g.order() < 2) return 0;
  std::map<std::uint32_t, int> memo;
  return best_subtree(g, (1u << g.order()) - 1, memo);
}

/// Linear rank-width over every vertex order.
int reference_lrw(const Graph& g) {
  const int n = g.order();
  if (n < 2) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = INT_MAX;
  do {
    int width = 0;
    for (int i = 1; i < n; ++i) {
      width = std::max(width, oracle::cut_rank_by_span(g, std::vector<int>(order.begin(), order.begin() + i)));
      width = std::max(width, oracle::cut_rank_by_span(g, {order[i]}));
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

TEST_CASE("cut rank examples") {
  const Graph k2 = make(GraphKind::complete, 2);
  CHECK(cut_rank(k2, std::vector<Vertex>{0}) == 1);
  const Graph c4 = make(GraphKind::cycle, 4);
  CHECK(cut_rank(c4, std::vector<Vertex>{0, 2}) == 1);
  CHECK(cut_rank(c4, std::vector<Vertex>{0, 1}) == 2);
  CHECK(cut_rank(c4, std::vector<Vertex>{}) == 0);
}

TEST_CASE("cut rank agrees with the row-space size and is symmetric") {
  Rng rng(5);
  for (int round = 0; round < 300; ++round) {
    GenParams p;
    p.n = 1 + static_cast<int>(rng.below(9));
    p.p = rng.unit();
    const Graph g = generate(GraphKind::random, p, rng.next());
    std::vector<Vertex> side, rest;
    for (Vertex v = 0; v < g.order(); ++v) (rng.chance(0.5) ? side : rest).push_back(v);
    const int rank = cut_rank(g, side);
    CHECK(rank == oracle::cut_rank_by_span(g, side));
    CHECK(rank == cut_rank(g, rest));
    VertexSet bits(g.order());
    for (Vertex v : side) bits.set(v);
    CHECK(cut_rank(g, bits) == rank);
  }
}

TEST_CASE("cut rank on more than 64 vertices") {
  GenParams p;
  p.n = 80;
  p.p = 0.5;
  const Graph g = generate(GraphKind::random, p, 4);
  std::vector<Vertex> side;
  for (Vertex v = 0; v < 80; v += 2) side.push_back(v);
  const int rank = cut_rank(g, side);
  CHECK(rank <= 40);
  CHECK(rank > 30);  // a random 40 x 40 matrix over GF(2) is nearly full rank
  std::vector<Vertex> rest;
  for (Vertex v = 1; v < 80; v += 2) rest.push_back(v);
  CHECK(cut_rank(g, rest) == rank);
}

TEST_CASE("decomposition widths") {
  const Graph k2 = make(GraphKind::complete, 2);
  CHECK(decomposition_width(k2, parse_decomposition("(0 1)")) == 1);
  const Graph c4 = make(GraphKind::cycle, 4);
  CHECK(decomposition_width(c4, order_to_linear_decomposition({0, 1, 2, 3})) == 2);
  CHECK(decomposition_width(c4, parse_decomposition("((0 2) (1 3))")) == 1);
  CHECK(decomposition_width(Graph(1), BranchDecomposition::leaf(0)) == 0);
}

TEST_CASE("linear decompositions are caterpillars") {
  const auto k2 = order_to_linear_decomposition({1, 0});
  CHECK(k2.nodes().size() == 3);
  CHECK(serialize_decomposition(k2) == "(1 0)");
  for (int n = 2; n <= 9; ++n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto t = order_to_linear_decomposition(order);
    int internal = 0;
    for (const auto& node : t.nodes()) internal += node.is_leaf() ? 0 : 1;
    CHECK(internal == n - 1);
    CHECK(t.leaves() == order);
  }
  CHECK_THROWS_AS(order_to_linear_decomposition({0, 0, 1}), InvalidArgument);
}

TEST_CASE("decomposition text format") {
  const auto t = parse_decomposition(" ( (0 1)\n (2 (3 4)) ) ");
  CHECK(serialize_decomposition(t) == "((0 1) (2 (3 4)))");
  CHECK(parse_decomposition(serialize_decomposition(t)) == t);
  CHECK(parse_decomposition("3").leaf_count() == 1);
  CHECK_THROWS_AS(parse_decomposition("(0 1"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("(0 1 2)"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("(0 x)"), ParseError);
  CHECK(parse_order("2 0 1\n") == std::vector<Vertex>{2, 0, 1});
  CHECK(serialize_order({2, 0, 1}) == "2 0 1\n");
}

TEST_CASE("decompositions are validated against the graph") {
  const Graph c4 = make(GraphKind::cycle, 4);
  CHECK_THROWS_AS(validate_decomposition(c4, parse_decomposition("((0 1) 2)")), InvalidCertificate);
  CHECK_THROWS_AS(validate_decomposition(c4, parse_decomposition("((0 1) (2 2))")), InvalidCertificate);
  CHECK_THROWS_AS(validate_decomposition(c4, parse_decomposition("((0 1) (2 4))")), InvalidCertificate);
  CHECK_NOTHROW(validate_decomposition(c4, parse_decomposition("((0 1) (2 3))")));
}

TEST_CASE("the rooted-tree enumeration has (2n-3)!! trees") {
  const Graph c5 = make(GraphKind::cycle, 5);
  std::vector<int> widths;
  all_rooted_trees(c5, 0b11111, widths);
  CHECK(widths.size() == 105);
  const int best = *std::min_element(widths.begin(), widths.end());
  const auto result = exact_rw(c5);
  CHECK(result.value == best);
  CHECK(decomposition_width(c5, result.witness) == best);
  CHECK(result.value == 2);
}

TEST_CASE("exact rank-width and linear rank-width against exhaustive oracles") {
  Rng rng(9);
  for (int round = 0; round < 60; ++round) {
    GenParams p;
    p.n = 1 + static_cast<int>(rng.below(7));
    p.p = rng.unit();
    const Graph g = generate(GraphKind::random, p, rng.next());
    CAPTURE(serialize_graph(g));
    const auto rw = exact_rw(g);
    CHECK(rw.value == reference_rw(g));
    CHECK_NOTHROW(validate_decomposition(g, rw.witness));
    CHECK(decomposition_width(g, rw.witness) == rw.value);
    const auto lrw = exact_lrw(g);
    CHECK(lrw.value == reference_lrw(g));
    if (g.order() >= 2) CHECK(decomposition_width(g, order_to_linear_decomposition(lrw.order)) == lrw.value);
    CHECK(rw.value <= lrw.value);
  }
}

TEST_CASE("rank-width is at most clique-width on cographs") {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    p.n = 2 + static_cast<int>(seed % 6);
    const Graph g = generate(GraphKind::cograph, p, seed);
    CHECK(exact_rw(g).value <= exact_cw(g, p.n).value);
    CHECK(exact_rw(g).value <= 1);
  }
  CHECK(exact_rw(make(GraphKind::complete, 2)).value == 1);
}

TEST_CASE("rank-width search limits") {
  ExactRankLimits limits;
  limits.max_n = 5;
  CHECK_THROWS_AS(exact_rw(make(GraphKind::cycle, 6), limits), BudgetExceeded);
  CHECK_THROWS_AS(exact_lrw(make(GraphKind::cycle, 6), limits), BudgetExceeded);
}
