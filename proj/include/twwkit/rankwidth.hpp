#ifndef TWWKIT_RANKWIDTH_HPP
#define TWWKIT_RANKWIDTH_HPP

#include "twwkit/budget.hpp"
#include "twwkit/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace twwkit {

/// Rank over GF(2) of the adjacency matrix between X and V \ X.
int cut_rank(const Graph& g, const VertexSet& side);
int cut_rank(const Graph& g, const std::vector<Vertex>& side);

/// Rooted binary tree whose leaves are graph vertices. A node is a leaf
/// (vertex >= 0, no children) or has exactly two children.
class BranchDecomposition {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    Vertex vertex = -1;
    bool is_leaf() const { return vertex >= 0; }
    friend bool operator==(const Node&, const Node&) = default;
  };

  static BranchDecomposition leaf(Vertex v);
  static BranchDecomposition join(const BranchDecomposition& left, const BranchDecomposition& right);

  /// Throws InvalidArgument unless `nodes` form a binary tree rooted at
  /// `root` in which every node is reachable exactly once.
  BranchDecomposition(std::vector<Node> nodes, int root);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int i) const { return nodes_.at(i); }
  int root() const { return root_; }
  int leaf_count() const;

  /// Leaf vertices in left-to-right order.
  std::vector<Vertex> leaves() const;
  /// For every node, the vertices of the leaves below it.
  std::vector<std::vector<Vertex>> leaf_sets() const;

  friend bool operator==(const BranchDecomposition&, const BranchDecomposition&) = default;

 private:
  BranchDecomposition() = default;
  std::vector<Node> nodes_;
  int root_ = 0;
};

/// Throws InvalidCertificate unless the leaves are exactly 0..n-1, each once.
void validate_decomposition(const Graph& g, const BranchDecomposition& t);

/// Maximum cut rank over the bipartitions induced by the tree edges (one per
/// non-root node). A single leaf has no edge and width 0.
int decomposition_width(const Graph& g, const BranchDecomposition& t);

/// The caterpillar (((v1 v2) v3) ... vn). Throws InvalidArgument unless
/// `order` is a permutation of 0..n-1 for n = order.size() >= 1.
BranchDecomposition order_to_linear_decomposition(const std::vector<Vertex>& order);

/// Nested parentheses over vertex ids, e.g. `((0 1) (2 3))`; a lone id is a
/// one-leaf tree. '#' starts a comment running to the end of the line.
BranchDecomposition parse_decomposition(std::string_view text);
std::string serialize_decomposition(const BranchDecomposition& t);
BranchDecomposition read_decomposition_file(const std::string& path);
void write_decomposition_file(const std::string& path, const BranchDecomposition& t);

/// Whitespace-separated vertex ids.
std::vector<Vertex> parse_order(std::string_view text);
std::string serialize_order(const std::vector<Vertex>& order);

struct ExactRankLimits {
  int max_n = -1;  // -1 picks 9 for rank-width, 16 for linear rank-width
  Budget budget = Budget::from_environment();
};

struct ExactRwResult {
  int value = 0;
  BranchDecomposition witness = BranchDecomposition::leaf(0);
  std::uint64_t trees = 0;  // partial trees visited
};

struct ExactLrwResult {
  int value = 0;
  std::vector<Vertex> order;
};

/// Exhaustive rank-width. Unrooted decompositions are generated by inserting
/// leaves 2, 3, ... into edges of the tree on {0, 1}; a partial tree is cut
/// off as soon as its width on the inserted vertices exceeds the threshold
/// (cut rank only grows when vertices are added to both sides).
ExactRwResult exact_rw(const Graph& g, const ExactRankLimits& limits = {});

/// Exact linear rank-width by dynamic programming over vertex subsets:
/// best(S) = max(cut_rank(S), min over v in S of best(S - v)).
ExactLrwResult exact_lrw(const Graph& g, const ExactRankLimits& limits = {});

}  // namespace twwkit

#endif  // TWWKIT_RANKWIDTH_HPP
