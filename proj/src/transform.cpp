#include "twwkit/transform.hpp"

#include "twwkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace twwkit {

namespace {

bool touches_red(const Trigraph& t, int part) { return t.red_loop(part) || t.red_degree(part) > 0; }

// Labels for the parts of the trigraph before a merge: the parts of `group`
// (indices into the trigraph after the merge, ascending) get 1..p, the
// lower-indexed merged part takes the merged part's label, the other one p+1.
std::map<int, int> labels_before_merge(const Trigraph& before, const Trigraph& after,
                                       const SequenceReplay::Step& step, const std::vector<int>& group) {
  const int low = std::min(step.u_index, step.v_index);
  const int high = std::max(step.u_index, step.v_index);
  std::map<int, int> labels;
  for (std::size_t t = 0; t < group.size(); ++t) {
    const int x = group[t];
    const int label = static_cast<int>(t) + 1;
    if (x == step.merged_index) labels[low] = label;
    else labels[before.index_of(after.part(x))] = label;
  }
  labels[high] = static_cast<int>(group.size()) + 1;
  return labels;
}

}  // namespace

CwExpr seq_to_expr(const Graph& g, const ContractionSequence& seq) {
  struct ComponentExpr {
    CwExpr expr;
    std::map<Vertex, int> label_of_part;  // keyed by the part's smallest vertex
  };
  SequenceReplay walk(g, seq);
  std::map<Vertex, ComponentExpr> table;  // keyed by the component's smallest vertex
  for (Vertex v = 0; v < g.order(); ++v) table.emplace(v, ComponentExpr{CwExpr::vertex(1, std::to_string(v)), {{v, 1}}});

  while (!walk.done()) {
    const auto step = walk.advance();
    const Trigraph& before = walk.previous();
    const Trigraph& after = walk.current();

    std::vector<int> group;
    for (auto& c : after.red_components())
      if (std::find(c.begin(), c.end(), step.merged_index) != c.end()) group = c;
    const auto labels = labels_before_merge(before, after, step, group);
    const int high_label = static_cast<int>(group.size()) + 1;
    const int merged_label = labels.at(std::min(step.u_index, step.v_index));

    const auto components = before.red_components();
    std::vector<int> component_of(before.part_count());
    for (std::size_t c = 0; c < components.size(); ++c)
      for (int x : components[c]) component_of[x] = static_cast<int>(c);
    std::set<int> touched;
    for (auto [x, label] : labels) touched.insert(component_of[x]);

    std::vector<CwExpr> pieces;
    for (int c : touched) {
      const Vertex key = before.part(components[c].front()).front();
      auto node = table.extract(key);
      std::map<int, int> required;
      for (int x : components[c]) {
        if (!labels.count(x)) throw std::logic_error("seq_to_expr: component part outside the merged component");
        required[node.mapped().label_of_part.at(before.part(x).front())] = labels.at(x);
      }
      pieces.push_back(rename_labels_injective(node.mapped().expr, required));
    }
    CwExpr result = pieces.back();
    for (std::size_t j = pieces.size() - 1; j-- > 0;) result = CwExpr::disjoint_union(pieces[j], std::move(result));

    for (auto a = labels.begin(); a != labels.end(); ++a)
      for (auto b = std::next(a); b != labels.end(); ++b)
        if (component_of[a->first] != component_of[b->first] && before.link(a->first, b->first) == Link::black)
          result = CwExpr::add_edges(a->second, b->second, std::move(result));
    result = CwExpr::relabel(high_label, merged_label, std::move(result));

    ComponentExpr entry{std::move(result), {}};
    for (std::size_t t = 0; t < group.size(); ++t)
      entry.label_of_part[after.part(group[t]).front()] = static_cast<int>(t) + 1;
    table.emplace(after.part(group.front()).front(), std::move(entry));
  }
  return table.begin()->second.expr;
}

CwExpr seq_to_linexpr(const Graph& g, const ContractionSequence& seq) {
  SequenceReplay walk(g, seq);
  if (g.order() == 1) return CwExpr::vertex(1, "0");
  std::optional<CwExpr> current;
  std::map<Vertex, int> label_of_part;  // parts touching red, keyed by smallest vertex

  while (!walk.done()) {
    const auto step = walk.advance();
    const Trigraph& before = walk.previous();
    const Trigraph& after = walk.current();

    std::vector<int> group;
    for (int x = 0; x < after.part_count(); ++x)
      if (touches_red(after, x)) group.push_back(x);
    const auto labels = labels_before_merge(before, after, step, group);
    const int high_label = static_cast<int>(group.size()) + 1;
    const int merged_label = labels.at(std::min(step.u_index, step.v_index));

    std::set<int> covered;
    std::map<int, int> required;
    for (int x = 0; x < before.part_count(); ++x) {
      if (!touches_red(before, x)) continue;
      if (!labels.count(x)) throw std::logic_error("seq_to_linexpr: a red part left the red set");
      covered.insert(x);
      required[label_of_part.at(before.part(x).front())] = labels.at(x);
    }
    if (current) current = rename_labels_injective(*current, required);
    for (auto [x, label] : labels) {
      if (covered.count(x)) continue;
      if (before.part(x).size() != 1) throw std::logic_error("seq_to_linexpr: uncovered part is not a single vertex");
      CwExpr leaf = CwExpr::vertex(label, std::to_string(before.part(x).front()));
      current = current ? CwExpr::disjoint_union(std::move(*current), std::move(leaf)) : std::move(leaf);
    }
    for (auto a = labels.begin(); a != labels.end(); ++a)
      for (auto b = std::next(a); b != labels.end(); ++b)
        if (!(covered.count(a->first) && covered.count(b->first)) && before.link(a->first, b->first) == Link::black)
          current = CwExpr::add_edges(a->second, b->second, std::move(*current));
    current = CwExpr::relabel(high_label, merged_label, std::move(*current));

    label_of_part.clear();
    for (std::size_t t = 0; t < group.size(); ++t) label_of_part[after.part(group[t]).front()] = static_cast<int>(t) + 1;
  }
  return *current;
}

namespace {

struct UnionCheckpoint {
  std::size_t merges_done;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

struct ClassBuild {
  std::map<int, Vertex> representative;  // label -> a vertex of that class
  std::vector<Vertex> vertices;
};

ClassBuild contract_by_label(const CwExpr& e, const std::vector<Vertex>& ids, std::size_t& next_leaf,
                             ContractionSequence& seq, std::vector<UnionCheckpoint>& checkpoints) {
  switch (e.kind()) {
    case CwExpr::Kind::vertex: {
      const Vertex v = ids[next_leaf++];
      return {{{e.label(), v}}, {v}};
    }
    case CwExpr::Kind::add_edges:
      return contract_by_label(e.child(), ids, next_leaf, seq, checkpoints);
    case CwExpr::Kind::relabel: {
      ClassBuild inner = contract_by_label(e.child(), ids, next_leaf, seq, checkpoints);
      auto from = inner.representative.find(e.first());
      if (from == inner.representative.end()) return inner;
      const Vertex moved = from->second;
      inner.representative.erase(from);
      auto [to, inserted] = inner.representative.emplace(e.second(), moved);
      if (!inserted) seq.merges.emplace_back(to->second, moved);
      return inner;
    }
    case CwExpr::Kind::disjoint_union: {
      ClassBuild left = contract_by_label(e.left(), ids, next_leaf, seq, checkpoints);
      ClassBuild right = contract_by_label(e.right(), ids, next_leaf, seq, checkpoints);
      checkpoints.push_back({seq.merges.size(), left.vertices, right.vertices});
      for (auto [label, v] : right.representative) {
        auto [it, inserted] = left.representative.emplace(label, v);
        if (!inserted) seq.merges.emplace_back(it->second, v);
      }
      left.vertices.insert(left.vertices.end(), right.vertices.begin(), right.vertices.end());
      return left;
    }
  }
  return {};
}

}  // namespace

ContractionSequence expr_to_seq(const Graph& g, const CwExpr& e) {
  if (!(eval_expr(e).graph == g)) throw InvalidCertificate("expression does not evaluate to the input graph");
  const auto ids = leaf_vertex_ids(e);
  ContractionSequence seq;
  std::vector<UnionCheckpoint> checkpoints;
  std::size_t next_leaf = 0;
  const ClassBuild top = contract_by_label(e, ids, next_leaf, seq, checkpoints);
  for (auto it = std::next(top.representative.begin()); it != top.representative.end(); ++it)
    seq.merges.emplace_back(top.representative.begin()->second, it->second);

  std::sort(checkpoints.begin(), checkpoints.end(),
            [](const UnionCheckpoint& a, const UnionCheckpoint& b) { return a.merges_done < b.merges_done; });
  SequenceReplay walk(g, seq);
  std::vector<int> side(g.order());
  for (const auto& cp : checkpoints) {
    while (walk.steps_taken() < cp.merges_done) walk.advance();
    std::fill(side.begin(), side.end(), 0);
    for (Vertex v : cp.left) side[v] = 1;
    for (Vertex v : cp.right) side[v] = 2;
    const Trigraph& t = walk.current();
    for (auto [a, b] : t.red_edges())
      if (side[t.part(a).front()] * side[t.part(b).front()] == 2)
        throw std::logic_error("expr_to_seq: red edge joins the two sides of a union");
  }
  return seq;
}

BranchDecomposition expr_to_branch(const CwExpr& e) {
  const auto ids = leaf_vertex_ids(e);
  std::size_t next_leaf = 0;
  std::function<BranchDecomposition(const CwExpr&)> build = [&](const CwExpr& x) {
    switch (x.kind()) {
      case CwExpr::Kind::vertex:
        return BranchDecomposition::leaf(ids[next_leaf++]);
      case CwExpr::Kind::disjoint_union: {
        BranchDecomposition left = build(x.left());
        return BranchDecomposition::join(left, build(x.right()));
      }
      default:
        return build(x.child());
    }
  };
  return build(e);
}

ContractionSequence branch_to_seq(const Graph& g, const BranchDecomposition& t, int r, BranchContractionStats* stats) {
  if (r < 0) throw InvalidArgument("decomposition width bound must be nonnegative");
  validate_decomposition(g, t);
  const int width = decomposition_width(g, t);
  if (width > r)
    throw InvalidCertificate("decomposition has width " + std::to_string(width) + ", above the bound " + std::to_string(r));
  const long long small = r >= 30 ? (1LL << 30) : (1LL << r);

  struct Node {
    int left, right, parent;
    Vertex vertex;
  };
  std::vector<Node> tree;
  for (const auto& n : t.nodes()) tree.push_back({n.left, n.right, -1, n.vertex});
  for (int x = 0; x < static_cast<int>(tree.size()); ++x)
    if (tree[x].vertex < 0) tree[tree[x].left].parent = tree[tree[x].right].parent = x;
  int root = t.root();

  BranchContractionStats local;
  ContractionSequence seq;
  Trigraph current = Trigraph::singletons(g);

  // leaves below each live node, and depths
  auto below = [&](std::vector<std::vector<int>>& leaves, std::vector<int>& depth) {
    leaves.assign(tree.size(), {});
    depth.assign(tree.size(), -1);
    std::function<void(int, int)> walk = [&](int x, int d) {
      depth[x] = d;
      if (tree[x].vertex >= 0) {
        leaves[x] = {x};
        return;
      }
      walk(tree[x].left, d + 1);
      walk(tree[x].right, d + 1);
      leaves[x] = leaves[tree[x].left];
      leaves[x].insert(leaves[x].end(), leaves[tree[x].right].begin(), leaves[tree[x].right].end());
    };
    walk(root, 0);
  };
  auto crossing_red = [&](const std::vector<int>& leaves) {
    std::vector<char> inside(current.part_count(), 0);
    for (int leaf : leaves) inside[current.part_containing(tree[leaf].vertex)] = 1;
    for (auto [a, b] : current.red_edges())
      if (inside[a] != inside[b]) return true;
    return false;
  };

  std::vector<std::vector<int>> leaves;
  std::vector<int> depth;
  while (current.part_count() > 1) {
    if (current.part_count() <= small) {
      seq.merges.emplace_back(current.part(0).front(), current.part(1).front());
      current.merge(0, 1);
      ++local.free_merges;
      continue;
    }
    below(leaves, depth);
    int chosen = -1;
    Vertex chosen_min = 0;
    for (int x = 0; x < static_cast<int>(tree.size()); ++x) {
      if (depth[x] < 0 || static_cast<long long>(leaves[x].size()) < small + 1) continue;
      Vertex lowest = g.order();
      for (int leaf : leaves[x]) lowest = std::min(lowest, current.part(current.part_containing(tree[leaf].vertex)).front());
      if (chosen < 0 || depth[x] > depth[chosen] || (depth[x] == depth[chosen] && lowest < chosen_min)) {
        chosen = x;
        chosen_min = lowest;
      }
    }
    if (crossing_red(leaves[chosen])) throw std::logic_error("branch_to_seq: red edge leaves a large subtree");

    std::vector<int> parts;
    std::vector<char> inside(current.part_count(), 0);
    for (int leaf : leaves[chosen]) {
      const int p = current.part_containing(tree[leaf].vertex);
      parts.push_back(p);
      inside[p] = 1;
    }
    std::sort(parts.begin(), parts.end());
    auto row = [&](int p) {
      std::vector<char> out;
      for (int q = 0; q < current.part_count(); ++q)
        if (!inside[q]) out.push_back(current.link(p, q) == Link::black);
      return out;
    };
    int keep = -1, drop = -1;
    for (std::size_t i = 0; i < parts.size() && keep < 0; ++i) {
      const auto first = row(parts[i]);
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        if (row(parts[j]) == first) {
          keep = parts[i];
          drop = parts[j];
          break;
        }
      }
    }
    if (keep < 0)
      throw InvalidCertificate("no two parts below a subtree of " + std::to_string(parts.size()) +
                               " parts have identical rows; the decomposition width bound is wrong");

    // drop the leaf of the second part and splice out its parent
    int dropped_leaf = -1;
    for (int leaf : leaves[chosen])
      if (current.part_containing(tree[leaf].vertex) == drop) dropped_leaf = leaf;
    const int parent = tree[dropped_leaf].parent;
    const int sibling = tree[parent].left == dropped_leaf ? tree[parent].right : tree[parent].left;
    const int grand = tree[parent].parent;
    tree[sibling].parent = grand;
    if (grand < 0) root = sibling;
    else (tree[grand].left == parent ? tree[grand].left : tree[grand].right) = sibling;

    seq.merges.emplace_back(current.part(keep).front(), current.part(drop).front());
    current.merge(keep, drop);
    ++local.row_searches;

    below(leaves, depth);
    for (int x = 0; x < static_cast<int>(tree.size()); ++x)
      if (depth[x] >= 0 && static_cast<long long>(leaves[x].size()) > small && crossing_red(leaves[x]))
        throw std::logic_error("branch_to_seq: red edge leaves a large subtree after a merge");
  }

  const long long bound = r >= 30 ? (1LL << 31) : (2LL << r) - 1;
  if (sequence_width(g, seq, Width::ctww) > bound) throw std::logic_error("branch_to_seq: width bound violated");
  if (stats) *stats = local;
  return seq;
}

std::set<int> vertex_labels(const CwExpr& e) {
  switch (e.kind()) {
    case CwExpr::Kind::vertex:
      return {e.label()};
    case CwExpr::Kind::disjoint_union: {
      auto out = vertex_labels(e.left());
      out.merge(vertex_labels(e.right()));
      return out;
    }
    case CwExpr::Kind::relabel: {
      auto out = vertex_labels(e.child());
      if (out.erase(e.first())) out.insert(e.second());
      return out;
    }
    case CwExpr::Kind::add_edges:
      return vertex_labels(e.child());
  }
  return {};
}

int max_left_operand_labels(const CwExpr& e) {
  switch (e.kind()) {
    case CwExpr::Kind::vertex:
      return 0;
    case CwExpr::Kind::disjoint_union:
      return std::max({static_cast<int>(vertex_labels(e.left()).size()), max_left_operand_labels(e.left()),
                       max_left_operand_labels(e.right())});
    default:
      return max_left_operand_labels(e.child());
  }
}

bool singleton_labels_fresh(const CwExpr& e) {
  switch (e.kind()) {
    case CwExpr::Kind::vertex:
      return true;
    case CwExpr::Kind::disjoint_union:
      if (e.right().kind() == CwExpr::Kind::vertex && vertex_labels(e.left()).count(e.right().label())) return false;
      return singleton_labels_fresh(e.left()) && singleton_labels_fresh(e.right());
    default:
      return singleton_labels_fresh(e.child());
  }
}

}  // namespace twwkit
