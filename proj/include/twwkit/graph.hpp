#ifndef TWWKIT_GRAPH_HPP
#define TWWKIT_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twwkit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Edges are stored twice: as bit rows (constant-time adjacency, set algebra)
/// and as sorted neighbour lists. Self-loops and duplicate edges are rejected
/// at insertion, so a Graph value always satisfies the simple-graph invariants.
class Graph {
 public:
  explicit Graph(int n = 0);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(rows_.size()); }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  const std::vector<Vertex>& neighbor_list(Vertex v) const { return lists_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(lists_.at(v).size()); }

  /// Neighbourhood of `v` as a 64-bit mask. Requires order() <= 64.
  std::uint64_t mask(Vertex v) const;

  /// Adds {u,v}. Throws InvalidArgument on a self-loop or out-of-range
  /// endpoint; returns false if the edge already exists.
  bool add_edge(Vertex u, Vertex v);

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`, renumbered in the given order.
  Graph induced(const std::vector<Vertex>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t edge_count_ = 0;
};

/// A graph together with one positive label per vertex and, optionally, a
/// vertex name table (names come from expression files).
struct LabelledGraph {
  Graph graph;
  std::vector<int> labels;
  std::vector<std::string> names;

  /// Number of distinct labels carried by the vertices.
  int label_count() const;
};

/// Parses the line-oriented graph format:
///   n <count>
///   e <u> <v>
/// with '#' comment lines. Throws ParseError (with line number) on syntax
/// errors, out-of-range endpoints, self-loops and duplicate edges.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph; edges sorted lexicographically.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

/// std::mt19937_64 with hand-rolled derivations, so that a seed yields the
/// same corpus on every platform (the standard distributions do not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound) by rejection sampling. bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class GraphKind {
  cycle,
  path,
  complete,
  complete_bipartite,
  empty,
  random,
  cograph,
  distance_hereditary,
  grid,
};

struct GenParams {
  int n = 0;
  double p = 0.5;   // random
  int a = 0;        // complete_bipartite sides
  int b = 0;
  int rows = 0;     // grid
  int cols = 0;
};

GraphKind parse_graph_kind(std::string_view name);
std::string_view graph_kind_name(GraphKind kind);

/// Deterministic graph generator. Vertex counts: n for every kind except
/// complete_bipartite (a+b) and grid (rows*cols). Throws InvalidArgument on
/// parameter combinations that do not describe a graph.
///
/// cograph: random cotree built bottom-up (pairs of subtrees joined by a
/// union or join node). distance_hereditary: grows from one vertex by
/// pendant vertices, true twins and false twins.
Graph generate(GraphKind kind, const GenParams& params, std::uint64_t seed);

/// True iff no four vertices induce a path on four vertices.
bool is_cograph(const Graph& g);

/// Connected components, each sorted ascending, ordered by minimum vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace twwkit

#endif  // TWWKIT_GRAPH_HPP
