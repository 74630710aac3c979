#include "twwkit/verify.hpp"

#include "twwkit/cwexpr.hpp"
#include "twwkit/errors.hpp"
#include "twwkit/homcount.hpp"
#include "twwkit/rankwidth.hpp"
#include "twwkit/transform.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace twwkit {

namespace {

constexpr std::size_t kMaxViolationsKept = 5;

std::string part_name(const Part& part) {
  std::string out;
  for (Vertex v : part) out += static_cast<char>('a' + v);
  return out;
}

std::string pair_key(std::string x, std::string y) {
  if (y < x) std::swap(x, y);
  return x + " " + y;
}

struct EdgeSets {
  std::set<std::string> black, red, loops;
  bool operator==(const EdgeSets&) const = default;
};

EdgeSets edge_sets(const Trigraph& t) {
  EdgeSets out;
  for (auto [i, j] : t.black_edges()) out.black.insert(pair_key(part_name(t.part(i)), part_name(t.part(j))));
  for (auto [i, j] : t.red_edges()) out.red.insert(pair_key(part_name(t.part(i)), part_name(t.part(j))));
  for (int i = 0; i < t.part_count(); ++i)
    if (t.red_loop(i)) out.loops.insert(part_name(t.part(i)));
  return out;
}

std::vector<EdgeSets> parse_golden(const std::string& text) {
  std::vector<EdgeSets> out(1);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string kind, x, y;
    if (!(words >> kind) || kind[0] == '#') continue;
    if (kind == "---") {
      out.emplace_back();
    } else if (kind == "loop" && (words >> x)) {
      out.back().loops.insert(x);
    } else if ((kind == "black" || kind == "red") && (words >> x >> y)) {
      (kind == "black" ? out.back().black : out.back().red).insert(pair_key(x, y));
    } else {
      throw InvalidArgument("bad trigraph transcription line: " + line);
    }
  }
  return out;
}

std::string describe(const EdgeSets& sets) {
  std::string out;
  for (auto& e : sets.black) out += "black " + e + "; ";
  for (auto& e : sets.red) out += "red " + e + "; ";
  for (auto& e : sets.loops) out += "loop " + e + "; ";
  return out;
}

std::vector<std::pair<std::string, std::string>> graph_artifacts(const NamedGraph& g) {
  return {{g.name + ".gr", serialize_graph(g.graph)}};
}

std::vector<std::pair<std::string, std::string>> pair_artifacts(const GraphPair& pair) {
  return {{pair.input.name + ".gr", serialize_graph(pair.input.graph)},
          {pair.target.name + ".template.gr", serialize_graph(pair.target.graph)}};
}

int pow_int(int base, int exponent) {
  int out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

/// Runs `body`, turning library errors into violations for `instance`.
void guarded(CheckReport& report, const std::string& instance,
             const std::vector<std::pair<std::string, std::string>>& artifacts, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.fail({instance, std::string("exception: ") + e.what(), artifacts});
  }
}

void expect(CheckReport& report, bool condition, const std::string& instance, const std::string& message,
            const std::vector<std::pair<std::string, std::string>>& artifacts) {
  ++report.checks;
  if (!condition) report.fail({instance, message, artifacts});
}

std::string str(int value) { return std::to_string(value); }

}  // namespace

void CheckReport::fail(Violation v) {
  if (violations.size() < kMaxViolationsKept) violations.push_back(std::move(v));
}

std::vector<NamedGraph> graph_corpus(const CorpusOptions& options) {
  std::vector<NamedGraph> out;
  std::set<std::string> seen;
  auto add = [&](std::string name, const Graph& g) {
    if (seen.insert(serialize_graph(g)).second) out.push_back({std::move(name), g});
  };
  static constexpr double kDensities[] = {0.3, 0.5, 0.7};
  for (int n = std::max(options.min_n, 1); n <= options.max_n; ++n) {
    const std::string size = std::to_string(n);
    GenParams p;
    p.n = n;
    add("empty-" + size, generate(GraphKind::empty, p, 0));
    add("path-" + size, generate(GraphKind::path, p, 0));
    add("complete-" + size, generate(GraphKind::complete, p, 0));
    if (n >= 3) add("cycle-" + size, generate(GraphKind::cycle, p, 0));
    for (int a = 1; a <= n / 2; ++a) {
      GenParams q;
      q.a = a;
      q.b = n - a;
      add("biclique-" + std::to_string(a) + "-" + std::to_string(n - a), generate(GraphKind::complete_bipartite, q, 0));
    }
    for (int rows = 2; rows * 2 <= n; ++rows)
      if (n % rows == 0) {
        GenParams q;
        q.rows = rows;
        q.cols = n / rows;
        add("grid-" + std::to_string(rows) + "x" + std::to_string(n / rows), generate(GraphKind::grid, q, 0));
      }
    for (int i = 0; i < options.random_per_n; ++i) {
      const std::uint64_t seed = options.seed * 1000003 + static_cast<std::uint64_t>(n * 100 + i);
      p.p = kDensities[i % 3];
      add("random-" + size + "-s" + std::to_string(seed), generate(GraphKind::random, p, seed));
    }
    for (int i = 0; i < options.classes_per_n; ++i) {
      const std::uint64_t seed = options.seed * 1000003 + static_cast<std::uint64_t>(n * 100 + 50 + i);
      add("cograph-" + size + "-s" + std::to_string(seed), generate(GraphKind::cograph, p, seed));
      add("dh-" + size + "-s" + std::to_string(seed), generate(GraphKind::distance_hereditary, p, seed));
    }
    if (n <= options.exhaustive_max_n) {
      std::vector<Edge> slots;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
        Graph g(n);
        for (std::size_t k = 0; k < slots.size(); ++k)
          if (bits >> k & 1) g.add_edge(slots[k].first, slots[k].second);
        add("all-" + size + "-" + std::to_string(bits), g);
      }
    }
  }
  return out;
}

std::vector<GraphPair> pair_corpus(int max_input, int max_target, int count, std::uint64_t seed) {
  CorpusOptions in;
  in.max_n = max_input;
  in.seed = seed;
  CorpusOptions tg;
  tg.max_n = max_target;
  tg.seed = seed + 1;
  const auto inputs = graph_corpus(in);
  const auto targets = graph_corpus(tg);
  Rng rng(seed);
  std::vector<GraphPair> out;
  // every input at least once, then seeded draws
  for (int i = 0; i < count; ++i) {
    const auto& input = i < static_cast<int>(inputs.size()) ? inputs[i] : inputs[rng.below(inputs.size())];
    out.push_back({input, targets[rng.below(targets.size())]});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const GraphPair& a, const GraphPair& b) { return a.input.graph.order() < b.input.graph.order(); });
  return out;
}

ContractionSequence random_sequence(const Graph& g, Rng& rng) {
  std::vector<Vertex> representatives(g.order());
  for (Vertex v = 0; v < g.order(); ++v) representatives[v] = v;
  ContractionSequence seq;
  while (representatives.size() > 1) {
    const auto i = rng.below(representatives.size());
    auto j = rng.below(representatives.size() - 1);
    if (j >= i) ++j;
    seq.merges.emplace_back(representatives[i], representatives[j]);
    representatives.erase(representatives.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
  }
  return seq;
}

CheckReport check_oracle_g_side(const std::vector<GraphPair>& pairs) {
  CheckReport report("oracle-input-side");
  for (const auto& pair : pairs) {
    const auto artifacts = pair_artifacts(pair);
    const std::string instance = pair.input.name + " -> " + pair.target.name;
    guarded(report, instance, artifacts, [&] {
      const auto witness = exact_width(pair.input.graph, Width::ctww).witness;
      const auto expected = brute_count(pair.input.graph, pair.target.graph);
      const auto got = count_g_side(pair.input.graph, witness, pair.target.graph);
      auto with_sequence = artifacts;
      with_sequence.emplace_back(pair.input.name + ".cs", serialize_sequence(witness));
      expect(report, got == expected, instance, "dp " + got.str() + " != brute " + expected.str(), with_sequence);
    });
  }
  return report;
}

CheckReport check_oracle_h_side(const std::vector<GraphPair>& pairs) {
  CheckReport report("oracle-template-side");
  for (const auto& pair : pairs) {
    const auto artifacts = pair_artifacts(pair);
    const std::string instance = pair.input.name + " -> " + pair.target.name;
    guarded(report, instance, artifacts, [&] {
      const auto witness = exact_width(pair.target.graph, Width::ctww).witness;
      const auto expected = brute_count(pair.input.graph, pair.target.graph);
      const auto got = count_h_side(pair.input.graph, pair.target.graph, witness);
      auto with_sequence = artifacts;
      with_sequence.emplace_back(pair.target.name + ".template.cs", serialize_sequence(witness));
      expect(report, got == expected, instance, "dp " + got.str() + " != brute " + expected.str(), with_sequence);
      const bool exists = expected > 0;
      expect(report, exists_hom(pair.input.graph, pair.target.graph, CountAlgorithm::brute) == exists, instance,
             "brute existence disagrees with count", artifacts);
      expect(report, exists_hom(pair.input.graph, pair.target.graph, CountAlgorithm::h_side, witness) == exists,
             instance, "template-side existence disagrees with count", artifacts);
    });
  }
  return report;
}

CheckReport check_clique_width_bounds(const std::vector<NamedGraph>& corpus) {
  CheckReport report("clique-width-bounds");
  for (const auto& named : corpus) {
    const Graph& g = named.graph;
    const auto artifacts = graph_artifacts(named);
    guarded(report, named.name, artifacts, [&] {
      const auto ctww = exact_width(g, Width::ctww);
      const auto cw = exact_cw(g, std::max(g.order(), 1));
      const std::string values = "cw=" + str(cw.value) + " ctww=" + str(ctww.value);
      expect(report, cw.value <= ctww.value + 1, named.name, "cw > ctww + 1: " + values, artifacts);
      expect(report, ctww.value + 1 <= 2 * cw.value, named.name, "ctww + 1 > 2 cw: " + values, artifacts);
      expect(report, eval_expr(cw.witness).graph == g, named.name, "cw witness does not evaluate to the graph",
             artifacts);

      const auto expr = seq_to_expr(g, ctww.witness);
      expect(report, eval_expr(expr).graph == g, named.name, "seq_to_expr does not evaluate to the graph", artifacts);
      expect(report, expr_width(expr) <= ctww.value + 1, named.name,
             "seq_to_expr width " + str(expr_width(expr)) + " > ctww + 1, " + values, artifacts);

      const auto back = expr_to_seq(g, cw.witness);
      const int back_width = sequence_width(g, back, Width::ctww);
      expect(report, back_width <= 2 * cw.value - 1, named.name,
             "expr_to_seq ctww " + str(back_width) + " > 2 cw - 1, " + values, artifacts);
      const auto round = expr_to_seq(g, expr);
      expect(report, sequence_width(g, round, Width::ctww) <= 2 * expr_width(expr) - 1, named.name,
             "round trip ctww above 2 width - 1", artifacts);
    });
  }
  return report;
}

CheckReport check_linear_bounds(const std::vector<NamedGraph>& corpus) {
  CheckReport report("linear-bounds");
  for (const auto& named : corpus) {
    const Graph& g = named.graph;
    const auto artifacts = graph_artifacts(named);
    guarded(report, named.name, artifacts, [&] {
      const auto tvtww = exact_width(g, Width::tvtww);
      const auto ttww = exact_width(g, Width::ttww);
      const auto lcw = exact_lcw(g, std::max(g.order(), 1));
      const std::string values =
          "lcw=" + str(lcw.value) + " tvtww=" + str(tvtww.value) + " ttww=" + str(ttww.value);
      expect(report, lcw.value - 1 <= tvtww.value, named.name, "lcw - 1 > tvtww: " + values, artifacts);
      expect(report, tvtww.value <= lcw.value, named.name, "tvtww > lcw: " + values, artifacts);
      expect(report, tvtww.value <= 2 * ttww.value, named.name, "tvtww > 2 ttww: " + values, artifacts);
      expect(report, 2 * ttww.value <= tvtww.value * (tvtww.value + 1), named.name,
             "2 ttww > tvtww (tvtww + 1): " + values, artifacts);
      expect(report, is_linear(lcw.witness) && eval_expr(lcw.witness).graph == g, named.name,
             "lcw witness is not a linear expression of the graph", artifacts);

      // the same inequalities hold trigraph by trigraph along any sequence
      for (const auto* seq : {&tvtww.witness, &ttww.witness})
        for (const auto& t : replay(g, *seq)) {
          const int vertices = trigraph_width(t, Width::tvtww);
          const int edges = trigraph_width(t, Width::ttww);
          expect(report, vertices <= 2 * edges && 2 * edges <= vertices * (vertices + 1), named.name,
                 "per-trigraph tvtww/ttww inequality fails", artifacts);
        }

      const auto linear = seq_to_linexpr(g, tvtww.witness);
      expect(report, is_linear(linear) && eval_expr(linear).graph == g, named.name,
             "seq_to_linexpr is not a linear expression of the graph", artifacts);
      expect(report, expr_width(linear) <= tvtww.value + 1, named.name,
             "seq_to_linexpr width " + str(expr_width(linear)) + " > tvtww + 1, " + values, artifacts);

      const auto back = expr_to_seq(g, lcw.witness);
      const int back_ctww = sequence_width(g, back, Width::ctww);
      const int back_tvtww = sequence_width(g, back, Width::tvtww);
      expect(report, back_ctww <= lcw.value && back_tvtww <= lcw.value, named.name,
             "expr_to_seq on the lcw witness: ctww " + str(back_ctww) + ", tvtww " + str(back_tvtww) + ", " + values,
             artifacts);
    });
  }
  return report;
}

CheckReport check_rank_width_bounds(const std::vector<NamedGraph>& corpus) {
  CheckReport report("rank-width-bounds");
  for (const auto& named : corpus) {
    const Graph& g = named.graph;
    const auto artifacts = graph_artifacts(named);
    guarded(report, named.name, artifacts, [&] {
      const auto rw = exact_rw(g);
      const auto ctww = exact_width(g, Width::ctww);
      const std::string values = "rw=" + str(rw.value) + " ctww=" + str(ctww.value);
      const int ceiling = pow_int(2, rw.value + 1) - 1;
      expect(report, rw.value <= ctww.value, named.name, "rw > ctww: " + values, artifacts);
      expect(report, ctww.value <= ceiling, named.name, "ctww > 2^(rw+1) - 1: " + values, artifacts);
      expect(report, decomposition_width(g, rw.witness) == rw.value, named.name, "rw witness has another width",
             artifacts);
      if (g.order() >= 2) {
        const auto seq = branch_to_seq(g, rw.witness, rw.value);
        const int width = sequence_width(g, seq, Width::ctww);
        expect(report, width <= ceiling, named.name,
               "branch_to_seq ctww " + str(width) + " > 2^(rw+1) - 1, " + values, artifacts);
      }
    });
  }
  return report;
}

CheckReport check_point_values(std::uint64_t seed) {
  CheckReport report("point-values");
  GenParams p;
  p.n = 7;
  const NamedGraph c7{"cycle-7", generate(GraphKind::cycle, p, 0)};
  guarded(report, c7.name, graph_artifacts(c7), [&] {
    const int ctww = exact_width(c7.graph, Width::ctww).value;
    const int cw = exact_cw(c7.graph, 7).value;
    expect(report, ctww == 3, c7.name, "ctww(C7) = " + str(ctww) + ", expected 3", graph_artifacts(c7));
    expect(report, cw == 4, c7.name, "cw(C7) = " + str(cw) + ", expected 4", graph_artifacts(c7));
  });

  Rng rng(seed);
  auto draw = [&](GraphKind kind, int index, bool need_edge) {
    while (true) {
      GenParams q;
      q.n = 2 + static_cast<int>(rng.below(7));  // 2..8
      const std::uint64_t graph_seed = rng.next();
      Graph g = generate(kind, q, graph_seed);
      if (need_edge && g.size() == 0) continue;
      return NamedGraph{std::string(graph_kind_name(kind)) + "-" + std::to_string(q.n) + "-" +
                            std::to_string(index) + "-s" + std::to_string(graph_seed),
                        std::move(g)};
    }
  };
  for (int i = 0; i < 50; ++i) {
    const auto cograph = draw(GraphKind::cograph, i, true);
    guarded(report, cograph.name, graph_artifacts(cograph), [&] {
      const int ctww = exact_width(cograph.graph, Width::ctww).value;
      expect(report, is_cograph(cograph.graph), cograph.name, "generator produced a non-cograph",
             graph_artifacts(cograph));
      expect(report, ctww == 1, cograph.name, "cograph ctww = " + str(ctww) + ", expected 1",
             graph_artifacts(cograph));
    });
  }
  for (int i = 0; i < 50; ++i) {
    const auto dh = draw(GraphKind::distance_hereditary, i, false);
    guarded(report, dh.name, graph_artifacts(dh), [&] {
      const int ctww = exact_width(dh.graph, Width::ctww).value;
      expect(report, ctww <= 3, dh.name, "distance-hereditary ctww = " + str(ctww) + " > 3", graph_artifacts(dh));
    });
  }
  return report;
}

GoldenFixture builtin_golden() {
  GenParams p;
  p.n = 7;
  GoldenFixture out;
  out.graph = generate(GraphKind::cycle, p, 0);
  for (Vertex v = 1; v < 7; ++v) out.sequence.merges.emplace_back(0, v);
  out.trigraphs =
      "black a b\nblack b c\nblack c d\nblack d e\nblack e f\nblack f g\nblack a g\n---\n"
      "loop ab\nred ab c\nred ab g\nblack c d\nblack d e\nblack e f\nblack f g\n---\n"
      "loop abc\nred abc d\nred abc g\nblack d e\nblack e f\nblack f g\n---\n"
      "loop abcd\nred abcd e\nred abcd g\nblack e f\nblack f g\n---\n"
      "loop abcde\nred abcde f\nred abcde g\nblack f g\n---\n"
      "loop abcdef\nred abcdef g\n---\n"
      "loop abcdefg\n";
  out.tww = 2;
  out.ctww = 3;
  return out;
}

CheckReport check_golden(const GoldenFixture& fixture) {
  CheckReport report("golden-sequence");
  const NamedGraph named{"golden", fixture.graph};
  auto artifacts = graph_artifacts(named);
  artifacts.emplace_back("golden.cs", serialize_sequence(fixture.sequence));
  guarded(report, "golden", artifacts, [&] {
    const auto expected = parse_golden(fixture.trigraphs);
    const auto trigraphs = replay(fixture.graph, fixture.sequence);
    expect(report, expected.size() == trigraphs.size(), "golden",
           "expected " + std::to_string(expected.size()) + " trigraphs, replay gave " +
               std::to_string(trigraphs.size()),
           artifacts);
    for (std::size_t i = 0; i < std::min(expected.size(), trigraphs.size()); ++i) {
      const auto got = edge_sets(trigraphs[i]);
      expect(report, got == expected[i], "golden step " + std::to_string(i),
             "got " + describe(got) + "expected " + describe(expected[i]), artifacts);
    }
    const int tww = sequence_width(fixture.graph, fixture.sequence, Width::tww);
    const int ctww = sequence_width(fixture.graph, fixture.sequence, Width::ctww);
    expect(report, tww == fixture.tww, "golden", "tww " + str(tww) + ", expected " + str(fixture.tww), artifacts);
    expect(report, ctww == fixture.ctww, "golden", "ctww " + str(ctww) + ", expected " + str(fixture.ctww),
           artifacts);
  });
  return report;
}

CheckReport check_complexity_accounting(const std::vector<GraphPair>& pairs) {
  CheckReport report("complexity-accounting");
  for (const auto& pair : pairs) {
    const auto artifacts = pair_artifacts(pair);
    const std::string instance = pair.input.name + " -> " + pair.target.name;
    guarded(report, instance, artifacts, [&] {
      const int n = pair.input.graph.order();
      const int m = pair.target.graph.order();
      CountStats template_stats;
      CountOptions template_options;
      template_options.stats = &template_stats;
      count_h_side(pair.input.graph, pair.target.graph, exact_width(pair.target.graph, Width::ctww).witness,
                   template_options);
      for (const auto& step : template_stats.merges) {
        HomCount expected = 1;
        for (int i = 0; i < n; ++i) expected *= step.component_size + 2;
        expect(report, step.enumerated == expected, instance,
               "template-side merge enumerated " + step.enumerated.str() + ", expected " + expected.str(), artifacts);
      }
      CountStats input_stats;
      CountOptions input_options;
      input_options.stats = &input_stats;
      count_g_side(pair.input.graph, exact_width(pair.input.graph, Width::ctww).witness, pair.target.graph,
                   input_options);
      for (const auto& step : input_stats.merges) {
        HomCount bound = 1;
        for (int i = 0; i <= step.component_size; ++i) bound *= (HomCount(1) << m) - 1;
        expect(report, step.enumerated <= bound, instance,
               "input-side merge enumerated " + step.enumerated.str() + " > " + bound.str(), artifacts);
      }
    });
  }
  return report;
}

CheckReport check_structural_claims(const std::vector<NamedGraph>& corpus, std::uint64_t seed) {
  CheckReport report("structural-claims");
  Rng rng(seed);
  for (const auto& named : corpus) {
    const Graph& g = named.graph;
    const auto artifacts = graph_artifacts(named);
    guarded(report, named.name, artifacts, [&] {
      std::vector<ContractionSequence> sequences = {exact_width(g, Width::ctww).witness,
                                                    exact_width(g, Width::tvtww).witness,
                                                    greedy_width(g, Width::ctww).witness};
      for (int i = 0; i < 3; ++i) sequences.push_back(random_sequence(g, rng));
      for (const auto& seq : sequences) {
        auto with_sequence = artifacts;
        with_sequence.emplace_back(named.name + ".cs", serialize_sequence(seq));
        const int ctww = sequence_width(g, seq, Width::ctww);
        const auto expr = seq_to_expr(g, seq);
        expect(report, max_left_operand_labels(expr) <= ctww, named.name,
               "a union has " + str(max_left_operand_labels(expr)) + " left labels, ctww " + str(ctww),
               with_sequence);
        const auto linear = seq_to_linexpr(g, seq);
        expect(report, singleton_labels_fresh(linear), named.name, "a linear union reuses a left label",
               with_sequence);
      }
      if (g.order() < 2) return;
      std::vector<std::pair<BranchDecomposition, int>> decompositions;
      const auto rw = exact_rw(g);
      decompositions.emplace_back(rw.witness, rw.value);
      for (int i = 0; i < 2; ++i) {
        std::vector<Vertex> order(g.order());
        for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
        for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
        const auto linear = order_to_linear_decomposition(order);
        decompositions.emplace_back(linear, decomposition_width(g, linear));
      }
      for (const auto& [t, r] : decompositions) {
        auto with_tree = artifacts;
        with_tree.emplace_back(named.name + ".bd", serialize_decomposition(t));
        ++report.checks;
        try {
          BranchContractionStats stats;
          branch_to_seq(g, t, r, &stats);
        } catch (const std::exception& e) {
          report.fail({named.name, std::string("identical-row search failed: ") + e.what(), with_tree});
        }
      }
    });
  }
  return report;
}

CheckReport check_big_integer() {
  CheckReport report("big-integer");
  GenParams p;
  p.n = 25;
  const Graph empty = generate(GraphKind::empty, p, 0);
  p.n = 6;
  p.p = 0.5;
  const Graph target = generate(GraphKind::random, p, 6);
  const NamedGraph named{"empty-25", empty};
  guarded(report, named.name, graph_artifacts(named), [&] {
    const auto count = brute_count(empty, target);
    const std::string expected = "28430288029929701376";  // 6^25
    expect(report, count.str() == expected, named.name, "got " + count.str() + ", expected " + expected,
           graph_artifacts(named));
    expect(report, count > HomCount(std::numeric_limits<std::uint64_t>::max()), named.name,
           "count fits in 64 bits", graph_artifacts(named));
  });
  return report;
}

std::string summary_line(const CheckReport& report) {
  std::string out = report.name + ": " + (report.passed() ? "PASS" : "FAIL") + " (" +
                    std::to_string(report.checks) + " checks";
  if (!report.passed()) out += ", first failure " + report.violations.front().instance + ": " +
                               report.violations.front().message;
  return out + ")";
}

}  // namespace twwkit
