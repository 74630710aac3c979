#ifndef TWWKIT_TRANSFORM_HPP
#define TWWKIT_TRANSFORM_HPP

#include "twwkit/cwexpr.hpp"
#include "twwkit/rankwidth.hpp"
#include "twwkit/trigraph.hpp"

#include <set>

namespace twwkit {

/// Expression for g built component by component along the sequence.
///
/// Every red component of every trigraph gets an expression of the graph
/// induced by its vertices in which each part has its own label. On a merge
/// the expressions of the components touching the new component are
/// relabelled apart, united (right-nested, ordered by smallest vertex),
/// joined along the black edges that cross them, and the two merged parts
/// are given one label. Width is at most ctww(seq) + 1.
CwExpr seq_to_expr(const Graph& g, const ContractionSequence& seq);

/// Linear expression for g along the sequence: the expression always covers
/// the parts touching a red edge or carrying a red loop, and a merge adds the
/// missing singleton parts one vertex at a time. Width is at most
/// tvtww(seq) + 1.
CwExpr seq_to_linexpr(const Graph& g, const ContractionSequence& seq);

/// Contraction sequence that only ever merges vertices carrying the same
/// label: each union merges the left classes, then the right classes, then
/// equal labels across the two sides; relabelling merges the two classes;
/// the remaining classes are merged at the end in ascending label order.
/// ctww of the result is at most 2k - 1 for a k-expression and at most k
/// (as is tvtww) for a linear one.
///
/// Throws InvalidCertificate unless the expression evaluates to g. Throws
/// std::logic_error if a red edge ever joins the two sides of a union
/// before they are merged.
ContractionSequence expr_to_seq(const Graph& g, const CwExpr& e);

/// Branch decomposition given by the union nodes of the expression.
BranchDecomposition expr_to_branch(const CwExpr& e);

struct BranchContractionStats {
  int row_searches = 0;  // merges chosen by the identical-row search
  int free_merges = 0;   // merges made once at most 2^r parts remained
};

/// Contraction sequence of ctww at most 2^(r+1) - 1 from a decomposition of
/// width at most r. While more than 2^r parts remain, takes the deepest node
/// whose subtree holds at least 2^r + 1 parts and merges two of its parts
/// with identical black rows towards the rest, then drops the merged leaf
/// from the tree.
///
/// Throws InvalidCertificate if the decomposition is invalid for g, has
/// width above r, or no identical pair is found. Throws std::logic_error if
/// the construction breaks its own invariants.
ContractionSequence branch_to_seq(const Graph& g, const BranchDecomposition& t, int r,
                                  BranchContractionStats* stats = nullptr);

/// Labels carried by the vertices of the graph built by `e`.
std::set<int> vertex_labels(const CwExpr& e);

/// Largest number of distinct vertex labels in the left operand of a union
/// (0 when there is no union).
int max_left_operand_labels(const CwExpr& e);

/// True iff every union whose right operand is a single vertex gives that
/// vertex a label carried by no vertex of the left operand.
bool singleton_labels_fresh(const CwExpr& e);

}  // namespace twwkit

#endif  // TWWKIT_TRANSFORM_HPP
