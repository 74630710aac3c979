#ifndef TWWKIT_HOMCOUNT_HPP
#define TWWKIT_HOMCOUNT_HPP

#include "twwkit/budget.hpp"
#include "twwkit/graph.hpp"
#include "twwkit/trigraph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace twwkit {

/// Exact homomorphism count. cpp_int keeps small values inline and only
/// allocates limbs once a value outgrows them.
using HomCount = boost::multiprecision::cpp_int;

/// Work done by one merge of a dynamic programme.
struct MergeStep {
  int component_size = 0;  // parts in the red component after the merge
  HomCount enumerated;     // candidate combinations looked at
  HomCount bound;          // the counting bound for this component size
};

struct CountStats {
  std::vector<MergeStep> merges;
  HomCount total_enumerated;
  std::size_t peak_table_entries = 0;  // live table entries, all components
  std::size_t peak_table_bytes = 0;    // rough estimate of the same
};

struct CountOptions {
  Budget budget = Budget::from_environment();
  CountStats* stats = nullptr;
  /// Called by count_g_side whenever a component table is (re)built, with
  /// the vertices of the component and the sum of its table.
  std::function<void(const std::vector<Vertex>&, const HomCount&)> component_observer;
};

/// Number of maps V_G -> V_H sending edges to edges, by backtracking on each
/// connected component of g (isolated vertices contribute |V_H| each). The
/// budget caps the number of search nodes.
HomCount brute_count(const Graph& g, const Graph& h, const CountOptions& options = {});

/// Dynamic programme over a contraction sequence of g. A table entry of a
/// red component maps the exact image set of every part to the number of
/// homomorphisms of the induced subgraph realising it. On a merge, entries
/// of the touched components are combined when every black edge between two
/// of them goes to a complete pair of image sets. Requires |V_H| <= 64.
HomCount count_g_side(const Graph& g, const ContractionSequence& seq, const Graph& h,
                      const CountOptions& options = {});

/// Dynamic programme over a contraction sequence of h. A table entry of a
/// red component of the template assigns every vertex of g to one of its
/// parts or leaves it unassigned, and counts the homomorphisms of the
/// assigned vertices that map each one into its part. A merge enumerates
/// all (p+2)^|V_G| assignments for a new component of p parts; an edge of g
/// across two touched components needs a black edge between their parts.
HomCount count_h_side(const Graph& g, const Graph& h, const ContractionSequence& seq_h,
                      const CountOptions& options = {});

enum class CountAlgorithm { brute, g_side, h_side };

/// Whether any homomorphism exists. The brute-force strategy stops at the
/// first one; the others need the matching sequence.
bool exists_hom(const Graph& g, const Graph& h, CountAlgorithm algorithm,
                const std::optional<ContractionSequence>& sequence = std::nullopt,
                const CountOptions& options = {});

}  // namespace twwkit

#endif  // TWWKIT_HOMCOUNT_HPP
