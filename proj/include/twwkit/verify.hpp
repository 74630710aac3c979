#ifndef TWWKIT_VERIFY_HPP
#define TWWKIT_VERIFY_HPP

#include "twwkit/graph.hpp"
#include "twwkit/trigraph.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace twwkit {

struct NamedGraph {
  std::string name;  // e.g. "random-5-s3"
  Graph graph;
};

struct CorpusOptions {
  int min_n = 1;
  int max_n = 6;
  std::uint64_t seed = 1;
  int random_per_n = 12;   // random graphs per vertex count
  int classes_per_n = 4;   // cographs and distance-hereditary graphs per vertex count
  int exhaustive_max_n = 0;  // also every labelled graph with at most this many vertices
};

/// Graphs of every generator kind with min_n..max_n vertices, without
/// duplicates, ordered by vertex count (so the first failure of a check is
/// also a smallest one).
std::vector<NamedGraph> graph_corpus(const CorpusOptions& options);

struct GraphPair {
  NamedGraph input;
  NamedGraph target;
};

/// `count` seeded pairs drawn from graph_corpus(1..max_input) x
/// graph_corpus(1..max_target), ordered by input size.
std::vector<GraphPair> pair_corpus(int max_input, int max_target, int count, std::uint64_t seed);

/// Uniformly random valid contraction sequence.
ContractionSequence random_sequence(const Graph& g, Rng& rng);

/// One failed instance, with the files needed to reproduce it.
struct Violation {
  std::string instance;
  std::string message;
  std::vector<std::pair<std::string, std::string>> artifacts;  // file name, content
};

struct CheckReport {
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::uint64_t checks = 0;  // individual comparisons made
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  void fail(Violation v);
};

/// count_g_side over an exact ctww witness of the input equals brute_count.
CheckReport check_oracle_g_side(const std::vector<GraphPair>& pairs);

/// count_h_side over an exact ctww witness of the target equals brute_count,
/// and exists_hom agrees with the count for every strategy.
CheckReport check_oracle_h_side(const std::vector<GraphPair>& pairs);

/// cw <= ctww + 1 <= 2 cw, together with the width of seq_to_expr on ctww
/// witnesses and the ctww of expr_to_seq on cw witnesses.
CheckReport check_clique_width_bounds(const std::vector<NamedGraph>& corpus);

/// lcw - 1 <= tvtww <= lcw and tvtww <= 2 ttww <= tvtww (tvtww + 1), plus the
/// linear conversions in both directions.
CheckReport check_linear_bounds(const std::vector<NamedGraph>& corpus);

/// rw <= ctww <= 2^(rw+1) - 1 and the ctww of branch_to_seq on rw witnesses.
CheckReport check_rank_width_bounds(const std::vector<NamedGraph>& corpus);

/// ctww(C7) = 3, cw(C7) = 4, ctww = 1 on 50 cographs with an edge and
/// ctww <= 3 on 50 distance-hereditary graphs with at most 8 vertices.
CheckReport check_point_values(std::uint64_t seed);

/// The expected trigraphs of a sequence, written as blocks separated by
/// "---" with lines "black X Y", "red X Y" and "loop X", where a part is
/// named by the letters of its vertices (a = 0).
struct GoldenFixture {
  Graph graph;
  ContractionSequence sequence;
  std::string trigraphs;
  int tww = 0;
  int ctww = 0;
};

/// The 7-cycle sequence merging a with b, c, ..., g in turn.
GoldenFixture builtin_golden();

/// Replays the fixture and compares every trigraph edge set and both widths.
CheckReport check_golden(const GoldenFixture& fixture);

/// Per-merge enumeration counts: exactly (p+2)^|V_G| on the template side and
/// at most (2^|V_H| - 1)^(p+1) on the input side.
CheckReport check_complexity_accounting(const std::vector<GraphPair>& pairs);

/// Claim checks on every produced expression (exact witness, greedy and
/// random sequences) and identical-row searches inside branch_to_seq (exact
/// witnesses and random linear decompositions).
CheckReport check_structural_claims(const std::vector<NamedGraph>& corpus, std::uint64_t seed);

/// brute_count of the edgeless 25-vertex graph into a 6-vertex template is
/// 6^25, printed in full.
CheckReport check_big_integer();

/// Human-readable one-line summary: "<name>: PASS (<checks> checks)".
std::string summary_line(const CheckReport& report);

}  // namespace twwkit

#endif  // TWWKIT_VERIFY_HPP
