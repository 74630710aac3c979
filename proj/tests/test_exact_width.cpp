#include "oracles.hpp"

#include "twwkit/errors.hpp"
#include "twwkit/trigraph.hpp"
#include "twwkit/verify.hpp"

#include <doctest.h>

#include <climits>

using namespace twwkit;

namespace {

Graph make(GraphKind kind, int n) {
  GenParams p;
  p.n = n;
  return generate(kind, p, 0);
}

/// Minimum width over every contraction sequence, by trying all merges at
/// every step and recomputing each quotient from scratch.
int brute_width(const Graph& g, const Partition& parts, Width w) {
  const int here = trigraph_width(Trigraph::quotient(g, parts), w);
  if (parts.size() == 1) return here;
  int best = INT_MAX;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      Partition next;
      for (std::size_t k = 0; k < parts.size(); ++k)
        if (k != i && k != j) next.push_back(parts[k]);
      Part merged = parts[i];
      merged.insert(merged.end(), parts[j].begin(), parts[j].end());
      std::sort(merged.begin(), merged.end());
      next.push_back(merged);
      std::sort(next.begin(), next.end());
      best = std::min(best, brute_width(g, next, w));
    }
  return std::max(here, best);
}

int brute_width(const Graph& g, Width w) {
  Partition singletons;
  for (Vertex v = 0; v < g.order(); ++v) singletons.push_back({v});
  return brute_width(g, singletons, w);
}

}  // namespace

TEST_CASE("known exact values") {
  CHECK(exact_width(make(GraphKind::cycle, 7), Width::ctww).value == 3);
  CHECK(exact_width(make(GraphKind::complete, 5), Width::ctww).value == 1);
  CHECK(exact_width(make(GraphKind::path, 4), Width::ctww).value == 2);
  CHECK(exact_width(make(GraphKind::cycle, 7), Width::tww).value == 2);

  const Graph k1(1);
  CHECK(exact_width(k1, Width::tww).value == 0);
  CHECK(exact_width(k1, Width::ctww).value == 1);
  CHECK(exact_width(k1, Width::ttww).value == 0);
  CHECK(exact_width(k1, Width::tvtww).value == 0);
  CHECK(exact_width(k1, Width::ctww).witness.merges.empty());
}

TEST_CASE("exact search agrees with enumeration of all sequences") {
  Rng rng(3);
  for (int round = 0; round < 40; ++round) {
    GenParams p;
    p.n = 1 + static_cast<int>(rng.below(5));
    p.p = rng.unit();
    const Graph g = generate(GraphKind::random, p, rng.next());
    CAPTURE(serialize_graph(g));
    for (auto w : {Width::tww, Width::ctww, Width::ttww, Width::tvtww}) {
      const auto result = exact_width(g, w);
      CHECK(result.value == brute_width(g, w));
      CHECK(sequence_width(g, result.witness, w) == result.value);
    }
  }
}

TEST_CASE("witnesses are valid and attain the value on the corpus") {
  CorpusOptions options;
  options.max_n = 7;
  for (const auto& named : graph_corpus(options)) {
    CAPTURE(named.name);
    for (auto w : {Width::tww, Width::ctww}) {
      const auto result = exact_width(named.graph, w);
      CHECK_NOTHROW(validate_sequence(named.graph, result.witness));
      CHECK(sequence_width(named.graph, result.witness, w) == result.value);
      CHECK(result.value <= greedy_width(named.graph, w).value);
    }
  }
}

TEST_CASE("twin-width 0 exactly on cographs, ctww at least 1") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      CHECK((exact_width(g, Width::tww).value == 0) == !oracle::has_induced_p4(g));
      CHECK(exact_width(g, Width::ctww).value >= 1);
    }
}

TEST_CASE("total vertex width against total width on all graphs up to 5 vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) {
      const int vertices = exact_width(g, Width::tvtww).value;
      const int edges = exact_width(g, Width::ttww).value;
      CHECK(vertices <= 2 * edges);
      CHECK(2 * edges <= vertices * (vertices + 1));
    }
}

TEST_CASE("the witness takes the lexicographically smallest optimal merge") {
  // every first merge of K4 is optimal, so the witness starts with (0, 1)
  const auto result = exact_width(make(GraphKind::complete, 4), Width::ctww);
  REQUIRE_FALSE(result.witness.merges.empty());
  CHECK(result.witness.merges.front() == Edge{0, 1});
  CHECK(exact_width(make(GraphKind::complete, 4), Width::ctww).witness == result.witness);
}

TEST_CASE("budget limits report bounds") {
  ExactWidthLimits limits;
  limits.max_n = 5;
  try {
    exact_width(make(GraphKind::cycle, 7), Width::ctww, limits);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.upper_bound().has_value());
    CHECK(*e.upper_bound() >= 3);
  }

  ExactWidthLimits tiny;
  tiny.budget.max_states = 3;
  GenParams p;
  p.n = 9;
  p.p = 0.5;
  try {
    exact_width(generate(GraphKind::random, p, 5), Width::ctww, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.lower_bound().has_value());
    REQUIRE(e.upper_bound().has_value());
    CHECK(*e.lower_bound() <= *e.upper_bound());
  }
}
