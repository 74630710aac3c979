#ifndef TWWKIT_CWEXPR_HPP
#define TWWKIT_CWEXPR_HPP

#include "twwkit/budget.hpp"
#include "twwkit/graph.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace twwkit {

/// Immutable k-expression tree with shared subterms.
///
///   v(i:name)        single vertex labelled i
///   (left + right)   disjoint union
///   r(i->j, child)   relabel every i to j
///   e(i,j, child)    join every i-labelled vertex to every j-labelled one
///
/// Labels are positive; relabel and add-edge nodes need i != j.
class CwExpr {
 public:
  enum class Kind { vertex, disjoint_union, relabel, add_edges };

  static CwExpr vertex(int label, std::string name = {});
  static CwExpr disjoint_union(CwExpr left, CwExpr right);
  static CwExpr relabel(int from, int to, CwExpr child);
  static CwExpr add_edges(int first, int second, CwExpr child);

  Kind kind() const { return node_->kind; }
  /// Vertex label.
  int label() const { return node_->first; }
  const std::string& name() const { return node_->name; }
  /// Relabel source / add-edges first label.
  int first() const { return node_->first; }
  /// Relabel target / add-edges second label.
  int second() const { return node_->second; }
  const CwExpr& left() const { return *node_->left; }
  const CwExpr& right() const { return *node_->right; }
  /// Only child of relabel and add-edges nodes.
  const CwExpr& child() const { return *node_->left; }

  /// Number of vertex leaves.
  int leaf_count() const { return node_->leaves; }

 private:
  struct Node {
    Kind kind;
    int first = 0;
    int second = 0;
    std::string name;
    std::unique_ptr<CwExpr> left;
    std::unique_ptr<CwExpr> right;
    int leaves = 1;
  };
  explicit CwExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Whitespace-insensitive parser; '#' starts a comment running to the end
/// of the line. Throws ParseError with line and column on syntax errors,
/// duplicate vertex names and i = j in relabel / add-edges.
CwExpr parse_expr(std::string_view text);
/// Canonical form without whitespace, e.g. `e(1,2,(v(1:a)+v(2:b)))`.
std::string serialize_expr(const CwExpr& e);
CwExpr read_expr_file(const std::string& path);
void write_expr_file(const std::string& path, const CwExpr& e);

/// Graph vertex id of every leaf, in left-to-right leaf order.
///
/// If every leaf is named and the names are the decimal integers 0..n-1 in
/// some order, those integers are the ids. Otherwise, if every leaf is
/// named, ids follow the lexicographic order of the names. Otherwise ids
/// follow leaf order. Throws InvalidArgument on duplicate names.
std::vector<Vertex> leaf_vertex_ids(const CwExpr& e);

/// The labelled graph the expression builds; vertex ids as in
/// leaf_vertex_ids, names kept in `names` (empty strings for unnamed leaves).
LabelledGraph eval_expr(const CwExpr& e);

/// Number of distinct labels occurring anywhere in the expression.
int expr_width(const CwExpr& e);
/// Every union's right operand is a single vertex.
bool is_linear(const CwExpr& e);

/// Rewrites every label of `e` through `mapping`; labels absent from the
/// map are kept. The map must be injective on the labels of `e`.
CwExpr rename_labels(const CwExpr& e, const std::map<int, int>& mapping);

/// Labels occurring anywhere in `e`, ascending.
std::vector<int> labels_used(const CwExpr& e);

/// Renames `e` so that each key of `required` becomes its value, and every
/// other label of `e` becomes the smallest positive label not used as a
/// required target (ascending, injective). Leaves the width unchanged.
CwExpr rename_labels_injective(const CwExpr& e, const std::map<int, int>& required);

struct ExactCwLimits {
  int max_n = -1;  // -1 picks 7 for both searches
  Budget budget = Budget::from_environment();
};

struct ExactCwResult {
  int value = 0;
  CwExpr witness = CwExpr::vertex(1);
  std::uint64_t states = 0;
};

/// Smallest k <= k_max with a k-expression (linear k-expression for
/// exact_lcw) evaluating to g, and such an expression. Vertices of the
/// witness are named by their decimal id.
///
/// Bottom-up search over states (vertex set S, partition of S into label
/// classes). Edge creation is applied eagerly after each union, so a live
/// state always has exactly the edges of g[S] built. A state is dropped
/// when two vertices of one class see different vertices outside S.
/// Throws BudgetExceeded when the limits are hit or no k <= k_max works
/// (then the lower bound is k_max + 1).
ExactCwResult exact_cw(const Graph& g, int k_max, const ExactCwLimits& limits = {});
ExactCwResult exact_lcw(const Graph& g, int k_max, const ExactCwLimits& limits = {});

}  // namespace twwkit

#endif  // TWWKIT_CWEXPR_HPP
