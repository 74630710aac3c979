#ifndef TWWKIT_TRIGRAPH_HPP
#define TWWKIT_TRIGRAPH_HPP

#include "twwkit/budget.hpp"
#include "twwkit/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twwkit {

/// A set of original vertices merged together; always sorted ascending.
using Part = std::vector<Vertex>;
using Partition = std::vector<Part>;

enum class Link : std::uint8_t { none, black, red };

/// The contraction-sequence width functionals.
///
///  tww    maximum red degree, red loops ignored
///  ctww   maximum size of a red-connected component (loops do not connect)
///  ttww   number of red edges, red loops included
///  tvtww  number of parts touching a red edge, red loops included
enum class Width { tww, ctww, ttww, tvtww };

Width parse_width(std::string_view name);
std::string_view width_name(Width w);

/// Quotient of a graph by a partition of its vertices.
///
/// Parts are kept sorted by their minimum vertex, so part indices are
/// canonical for a given partition. Between two distinct parts the link is
/// black when the cross bipartite graph is complete, red when it is nonempty
/// but not complete, and none otherwise. Every part of size >= 2 carries a
/// red loop; loops are implied by part size and not stored.
class Trigraph {
 public:
  /// The trigraph with one part per vertex (no red edges).
  static Trigraph singletons(const Graph& g);

  /// Throws InvalidArgument if `parts` is not a partition of 0..n-1.
  static Trigraph quotient(const Graph& g, Partition parts);

  int part_count() const { return static_cast<int>(parts_.size()); }
  const Partition& parts() const { return parts_; }
  const Part& part(int i) const { return parts_.at(i); }

  Link link(int i, int j) const;
  bool red_loop(int i) const { return parts_.at(i).size() >= 2; }
  int red_degree(int i) const;

  /// Index of the part equal to `p`, or -1.
  int index_of(const Part& p) const;
  int part_containing(Vertex v) const { return owner_.at(v); }

  /// Contracts parts i and j in place using the incremental rules: the
  /// merged part is black to X iff both were black, unlinked iff both were
  /// unlinked, red otherwise. Returns the merged part's new index.
  int merge(int i, int j);
  Trigraph contracted(int i, int j) const;

  std::vector<std::pair<int, int>> black_edges() const;
  /// Red edges between distinct parts (loops excluded).
  std::vector<std::pair<int, int>> red_edges() const;

  /// Connected components of the red graph, as ascending part-index lists
  /// ordered by their first part. Isolated parts form singletons.
  std::vector<std::vector<int>> red_components() const;

  friend bool operator==(const Trigraph& a, const Trigraph& b) {
    return a.parts_ == b.parts_ && a.links_ == b.links_;
  }

 private:
  Trigraph() = default;
  Link& at(int i, int j) { return links_[static_cast<std::size_t>(i) * parts_.size() + j]; }

  Partition parts_;
  std::vector<Link> links_;
  std::vector<int> owner_;
};

/// Contracts the parts equal to `u` and `v`. Throws InvalidArgument when
/// either is not a part of `t` or they coincide.
Trigraph contract(const Trigraph& t, const Part& u, const Part& v);

int trigraph_width(const Trigraph& t, Width w);

/// `merges[i] = {u, v}` merges the current parts containing original
/// vertices u and v. A valid sequence on n vertices has n-1 merges.
struct ContractionSequence {
  std::vector<Edge> merges;

  friend bool operator==(const ContractionSequence&, const ContractionSequence&) = default;
};

/// One merge per line `<u> <v>`, '#' comment lines allowed. Only syntax is
/// checked here; use validate_sequence against the graph.
ContractionSequence parse_sequence(std::string_view text);
std::string serialize_sequence(const ContractionSequence& seq);
ContractionSequence read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, const ContractionSequence& seq);

/// Throws InvalidCertificate unless `seq` has exactly n-1 merges, every
/// endpoint is a vertex of g, and every merge joins two distinct parts.
void validate_sequence(const Graph& g, const ContractionSequence& seq);

/// Steps through a contraction sequence one merge at a time, keeping the
/// trigraph before the last merge available.
class SequenceReplay {
 public:
  struct Step {
    int u_index;       // parts merged, as indices into previous()
    int v_index;
    int merged_index;  // index of the merged part in current()
  };

  SequenceReplay(const Graph& g, const ContractionSequence& seq);

  bool done() const { return next_ == seq_->merges.size(); }
  std::size_t steps_taken() const { return next_; }
  const Trigraph& current() const { return current_; }
  const Trigraph& previous() const { return previous_; }

  /// Applies the next merge. Throws InvalidCertificate if both endpoints
  /// already lie in one part.
  Step advance();

 private:
  const ContractionSequence* seq_;
  std::size_t next_ = 0;
  Trigraph current_;
  Trigraph previous_;
};

/// The trigraphs G_n, ..., G_1 of a sequence.
std::vector<Trigraph> replay(const Graph& g, const ContractionSequence& seq);

/// Maximum trigraph width over the replayed sequence.
int sequence_width(const Graph& g, const ContractionSequence& seq, Width w);

struct ExactWidthLimits {
  int max_n = -1;  // -1 picks 10 for tww/ctww and 8 for ttww/tvtww
  Budget budget = Budget::from_environment();
};

struct ExactWidthResult {
  int value = 0;
  ContractionSequence witness;
  std::uint64_t states_expanded = 0;
};

/// Minimum width over all contraction sequences of g, with an optimal
/// witness. Memoised depth-first search over canonical partitions with an
/// increasing width threshold; among optimal sequences the witness takes the
/// lexicographically smallest merge at every step. Throws BudgetExceeded
/// (with the bounds reached) past the limits.
ExactWidthResult exact_width(const Graph& g, Width w, const ExactWidthLimits& limits = {});

/// Width of a greedy sequence (each step takes the merge minimising the
/// next trigraph's width). An upper bound for exact_width.
ExactWidthResult greedy_width(const Graph& g, Width w);

}  // namespace twwkit

#endif  // TWWKIT_TRIGRAPH_HPP
