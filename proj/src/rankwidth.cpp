#include "twwkit/rankwidth.hpp"

#include "twwkit/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace twwkit {

namespace {

using Mask = std::uint64_t;

int mask_rank(std::vector<Mask> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i]) continue;
    ++rank;
    const Mask pivot = rows[i] & -rows[i];
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & pivot) rows[j] ^= rows[i];
  }
  return rank;
}

// Rank of the matrix between `side` and `rest` (disjoint masks).
int mask_cut_rank(const std::vector<Mask>& neighbours, Mask side, Mask rest) {
  std::vector<Mask> rows;
  for (Mask m = side; m; m &= m - 1) rows.push_back(neighbours[std::countr_zero(m)] & rest);
  return mask_rank(std::move(rows));
}

std::vector<Mask> neighbour_masks(const Graph& g) {
  std::vector<Mask> out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.mask(v));
  return out;
}

}  // namespace

int cut_rank(const Graph& g, const VertexSet& side) {
  const int n = g.order();
  if (static_cast<int>(side.size()) != n) throw InvalidArgument("cut side has the wrong universe size");
  const VertexSet rest = ~side;
  if (n <= 64) {
    Mask s = 0, r = 0;
    for (Vertex v = 0; v < n; ++v) (side.test(v) ? s : r) |= Mask{1} << v;
    return mask_cut_rank(neighbour_masks(g), s, r);
  }
  std::vector<VertexSet> rows;
  for (auto v = side.find_first(); v != VertexSet::npos; v = side.find_next(v)) rows.push_back(g.neighbors(static_cast<Vertex>(v)) & rest);
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto pivot = rows[i].find_first();
    if (pivot == VertexSet::npos) continue;
    ++rank;
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j].test(pivot)) rows[j] ^= rows[i];
  }
  return rank;
}

int cut_rank(const Graph& g, const std::vector<Vertex>& side) {
  VertexSet s(g.order());
  for (Vertex v : side) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("cut side mentions a vertex outside the graph");
    s.set(v);
  }
  return cut_rank(g, s);
}

BranchDecomposition BranchDecomposition::leaf(Vertex v) {
  if (v < 0) throw InvalidArgument("leaf vertex must be nonnegative");
  BranchDecomposition t;
  t.nodes_.push_back({-1, -1, v});
  t.root_ = 0;
  return t;
}

BranchDecomposition BranchDecomposition::join(const BranchDecomposition& left, const BranchDecomposition& right) {
  BranchDecomposition t;
  const int offset = static_cast<int>(left.nodes_.size());
  t.nodes_ = left.nodes_;
  for (Node n : right.nodes_) {
    if (!n.is_leaf()) {
      n.left += offset;
      n.right += offset;
    }
    t.nodes_.push_back(n);
  }
  t.nodes_.push_back({left.root_, right.root_ + offset, -1});
  t.root_ = static_cast<int>(t.nodes_.size()) - 1;
  return t;
}

BranchDecomposition::BranchDecomposition(std::vector<Node> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
  const int count = static_cast<int>(nodes_.size());
  if (root_ < 0 || root_ >= count) throw InvalidArgument("decomposition root out of range");
  std::vector<char> seen(count, 0);
  std::vector<int> stack{root_};
  int visited = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x < 0 || x >= count) throw InvalidArgument("decomposition child index out of range");
    if (seen[x]) throw InvalidArgument("decomposition node reachable twice");
    seen[x] = 1;
    ++visited;
    const Node& n = nodes_[x];
    if (n.is_leaf()) {
      if (n.left != -1 || n.right != -1) throw InvalidArgument("decomposition leaf has children");
    } else {
      if (n.left < 0 || n.right < 0) throw InvalidArgument("decomposition inner node needs two children");
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  if (visited != count) throw InvalidArgument("decomposition has unreachable nodes");
}

int BranchDecomposition::leaf_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_leaf(); }));
}

std::vector<Vertex> BranchDecomposition::leaves() const {
  std::vector<Vertex> out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (nodes_[x].is_leaf()) {
      out.push_back(nodes_[x].vertex);
    } else {
      stack.push_back(nodes_[x].right);
      stack.push_back(nodes_[x].left);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> BranchDecomposition::leaf_sets() const {
  std::vector<std::vector<Vertex>> sets(nodes_.size());
  std::function<void(int)> fill = [&](int x) {
    const Node& n = nodes_[x];
    if (n.is_leaf()) {
      sets[x] = {n.vertex};
      return;
    }
    fill(n.left);
    fill(n.right);
    sets[x] = sets[n.left];
    sets[x].insert(sets[x].end(), sets[n.right].begin(), sets[n.right].end());
  };
  fill(root_);
  return sets;
}

void validate_decomposition(const Graph& g, const BranchDecomposition& t) {
  std::vector<Vertex> leaves = t.leaves();
  std::sort(leaves.begin(), leaves.end());
  bool ok = static_cast<int>(leaves.size()) == g.order();
  for (std::size_t i = 0; ok && i < leaves.size(); ++i) ok = leaves[i] == static_cast<Vertex>(i);
  if (!ok)
    throw InvalidCertificate("decomposition leaves are not exactly the vertices 0.." + std::to_string(g.order() - 1));
}

int decomposition_width(const Graph& g, const BranchDecomposition& t) {
  validate_decomposition(g, t);
  const auto sets = t.leaf_sets();
  int width = 0;
  for (int x = 0; x < static_cast<int>(sets.size()); ++x)
    if (x != t.root()) width = std::max(width, cut_rank(g, sets[x]));
  return width;
}

BranchDecomposition order_to_linear_decomposition(const std::vector<Vertex>& order) {
  const int n = static_cast<int>(order.size());
  if (n == 0) throw InvalidArgument("vertex order is empty");
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) throw InvalidArgument("vertex order is not a permutation of 0.." + std::to_string(n - 1));
    seen[v] = 1;
  }
  BranchDecomposition t = BranchDecomposition::leaf(order[0]);
  for (int i = 1; i < n; ++i) t = BranchDecomposition::join(t, BranchDecomposition::leaf(order[i]));
  return t;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  BranchDecomposition parse() {
    const int root = subtree();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return BranchDecomposition(std::move(nodes_), root);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  void skip() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int subtree() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      const int left = subtree();
      const int right = subtree();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      nodes_.push_back({left, right, -1});
      return static_cast<int>(nodes_.size()) - 1;
    }
    const char* begin = text_.data() + pos_;
    Vertex v = -1;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == begin || v < 0) fail("expected a vertex id or '('");
    pos_ += static_cast<std::size_t>(ptr - begin);
    nodes_.push_back({-1, -1, v});
    return static_cast<int>(nodes_.size()) - 1;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<BranchDecomposition::Node> nodes_;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

BranchDecomposition parse_decomposition(std::string_view text) { return TreeParser(text).parse(); }

std::string serialize_decomposition(const BranchDecomposition& t) {
  std::function<std::string(int)> render = [&](int x) -> std::string {
    const auto& n = t.node(x);
    if (n.is_leaf()) return std::to_string(n.vertex);
    return "(" + render(n.left) + " " + render(n.right) + ")";
  };
  return render(t.root());
}

BranchDecomposition read_decomposition_file(const std::string& path) { return parse_decomposition(read_text(path)); }

void write_decomposition_file(const std::string& path, const BranchDecomposition& t) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << serialize_decomposition(t) << '\n';
}

std::vector<Vertex> parse_order(std::string_view text) {
  std::vector<Vertex> order;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      if (token.front() == '#') break;
      Vertex v = -1;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size() || v < 0)
        throw ParseError("'" + token + "' is not a vertex id", line_no);
      order.push_back(v);
    }
  }
  return order;
}

std::string serialize_order(const std::vector<Vertex>& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) out += (i ? " " : "") + std::to_string(order[i]);
  return out + "\n";
}

namespace {

struct OutOfBudget {};

// Rooted tree on leaves 1..k-1; leaf 0 hangs off the root edge.
class RwSearch {
 public:
  RwSearch(const Graph& g, const Budget& budget) : budget_(budget), n_(g.order()), neighbours_(neighbour_masks(g)) {}

  bool feasible(int threshold) {
    threshold_ = threshold;
    nodes_.assign(1, {-1, -1, -1, 1});
    root_ = 0;
    return extend(2);
  }

  BranchDecomposition witness() const {
    std::function<BranchDecomposition(int)> build = [&](int x) {
      const auto& n = nodes_[x];
      if (n.vertex >= 0) return BranchDecomposition::leaf(n.vertex);
      return BranchDecomposition::join(build(n.left), build(n.right));
    };
    return BranchDecomposition::join(BranchDecomposition::leaf(0), build(root_));
  }

  std::uint64_t visited() const { return visited_; }

 private:
  struct Node {
    int left, right, parent;
    Vertex vertex;
  };

  Mask fill(int x, Mask present, int& width) const {
    const Node& n = nodes_[x];
    const Mask below = n.vertex >= 0 ? Mask{1} << n.vertex : fill(n.left, present, width) | fill(n.right, present, width);
    if (width <= threshold_) width = std::max(width, mask_cut_rank(neighbours_, below, present & ~below));
    return below;
  }

  bool extend(Vertex v) {
    const Mask present = v >= 64 ? ~Mask{0} : (Mask{1} << v) - 1;
    int width = 0;
    fill(root_, present, width);
    if (width > threshold_) return false;
    if (v == n_) return true;
    if (++visited_ > budget_.max_states || ((visited_ & 0xfff) == 0 && budget_.expired())) throw OutOfBudget{};

    const int existing = static_cast<int>(nodes_.size());
    for (int x = 0; x < existing; ++x) {
      const int leaf = static_cast<int>(nodes_.size());
      const int inner = leaf + 1;
      const int parent = nodes_[x].parent;
      nodes_.push_back({-1, -1, inner, v});
      nodes_.push_back({x, leaf, parent, -1});
      nodes_[x].parent = inner;
      if (parent < 0) root_ = inner;
      else (nodes_[parent].left == x ? nodes_[parent].left : nodes_[parent].right) = inner;

      if (extend(v + 1)) return true;

      if (parent < 0) root_ = x;
      else (nodes_[parent].left == inner ? nodes_[parent].left : nodes_[parent].right) = x;
      nodes_[x].parent = parent;
      nodes_.pop_back();
      nodes_.pop_back();
    }
    return false;
  }

  const Budget& budget_;
  int n_;
  std::vector<Mask> neighbours_;
  std::vector<Node> nodes_;
  int root_ = 0;
  int threshold_ = 0;
  std::uint64_t visited_ = 0;
};

}  // namespace

ExactRwResult exact_rw(const Graph& g, const ExactRankLimits& limits) {
  const int n = g.order();
  if (n == 0) throw InvalidArgument("rank-width of the empty graph is undefined");
  const int max_n = std::min(limits.max_n >= 0 ? limits.max_n : 9, 64);
  if (n > max_n)
    throw BudgetExceeded("exact rank-width is limited to " + std::to_string(max_n) + " vertices (graph has " +
                         std::to_string(n) + ")");
  ExactRwResult result;
  if (n == 1) return result;
  if (n == 2) {
    result.witness = BranchDecomposition::join(BranchDecomposition::leaf(0), BranchDecomposition::leaf(1));
    result.value = decomposition_width(g, result.witness);
    return result;
  }
  RwSearch search(g, limits.budget);
  for (int threshold = 0;; ++threshold) {
    try {
      if (search.feasible(threshold)) {
        result.value = threshold;
        result.witness = search.witness();
        result.trees = search.visited();
        return result;
      }
    } catch (const OutOfBudget&) {
      throw BudgetExceeded("rank-width search ran out of budget", threshold);
    }
  }
}

ExactLrwResult exact_lrw(const Graph& g, const ExactRankLimits& limits) {
  const int n = g.order();
  if (n == 0) throw InvalidArgument("linear rank-width of the empty graph is undefined");
  const int max_n = std::min(limits.max_n >= 0 ? limits.max_n : 16, 26);
  if (n > max_n)
    throw BudgetExceeded("exact linear rank-width is limited to " + std::to_string(max_n) + " vertices (graph has " +
                         std::to_string(n) + ")");
  const auto neighbours = neighbour_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= all; ++s) {
    if ((s & 0xffff) == 0 && limits.budget.expired())
      throw BudgetExceeded("linear rank-width search ran out of time");
    int fewest = 255;
    for (Mask m = s; m; m &= m - 1) fewest = std::min<int>(fewest, best[s & ~(m & -m)]);
    const int cut = s == all ? 0 : mask_cut_rank(neighbours, s, all & ~s);
    best[s] = static_cast<std::uint8_t>(std::max(fewest, cut));
  }
  ExactLrwResult result;
  result.value = best[all];
  for (Mask s = all; s;) {
    for (Mask m = s; m; m &= m - 1) {
      const Mask without = s & ~(m & -m);
      if (std::max<int>(best[without], s == all ? 0 : mask_cut_rank(neighbours, s, all & ~s)) == best[s]) {
        result.order.push_back(std::countr_zero(m));
        s = without;
        break;
      }
    }
  }
  std::reverse(result.order.begin(), result.order.end());
  return result;
}

}  // namespace twwkit
