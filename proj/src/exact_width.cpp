#include "twwkit/errors.hpp"
#include "twwkit/trigraph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace twwkit {

namespace {

constexpr int kEncodableOrder = 16;  // 4 bits of block index per vertex

struct OutOfBudget {};

// Width of a trigraph given by its link matrix and part sizes.
int evaluate(const std::vector<Link>& links, const std::vector<int>& sizes, Width w) {
  const int k = static_cast<int>(sizes.size());
  auto at = [&](int i, int j) { return links[static_cast<std::size_t>(i) * k + j]; };
  switch (w) {
    case Width::tww: {
      int best = 0;
      for (int i = 0; i < k; ++i) {
        int d = 0;
        for (int j = 0; j < k; ++j) d += at(i, j) == Link::red;
        best = std::max(best, d);
      }
      return best;
    }
    case Width::ctww: {
      std::vector<int> seen(k, 0);
      int best = 0;
      std::vector<int> stack;
      for (int s = 0; s < k; ++s) {
        if (seen[s]) continue;
        int count = 0;
        seen[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
          const int x = stack.back();
          stack.pop_back();
          ++count;
          for (int y = 0; y < k; ++y)
            if (!seen[y] && at(x, y) == Link::red) {
              seen[y] = 1;
              stack.push_back(y);
            }
        }
        best = std::max(best, count);
      }
      return best;
    }
    case Width::ttww: {
      int total = 0;
      for (int i = 0; i < k; ++i) {
        total += sizes[i] >= 2;
        for (int j = i + 1; j < k; ++j) total += at(i, j) == Link::red;
      }
      return total;
    }
    case Width::tvtww: {
      int total = 0;
      for (int i = 0; i < k; ++i) {
        bool touched = sizes[i] >= 2;
        for (int j = 0; j < k && !touched; ++j) touched = at(i, j) == Link::red;
        total += touched;
      }
      return total;
    }
  }
  return 0;
}

class Search {
 public:
  Search(const Graph& g, Width w, const Budget& budget) : w_(w), budget_(budget), n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) neighbours_.push_back(g.mask(v));
  }

  bool feasible(const std::vector<std::uint64_t>& blocks, int threshold) {
    const int k = static_cast<int>(blocks.size());
    if (k == 1) return true;
    const std::uint64_t key = encode(blocks);
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= threshold) return false;

    ++expanded_;
    if (expanded_ > budget_.max_states || ((expanded_ & 0xfff) == 0 && budget_.expired())) throw OutOfBudget{};

    const auto links = link_matrix(blocks);
    std::vector<int> sizes(k);
    for (int i = 0; i < k; ++i) sizes[i] = std::popcount(blocks[i]);

    std::vector<Link> child_links(static_cast<std::size_t>(k - 1) * (k - 1));
    std::vector<int> child_sizes(k - 1);
    std::vector<std::uint64_t> child(k - 1);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        contract_links(links, sizes, k, i, j, child_links, child_sizes);
        if (evaluate(child_links, child_sizes, w_) > threshold) continue;
        for (int x = 0, y = 0; x < k; ++x) {
          if (x == j) continue;
          child[y++] = x == i ? (blocks[i] | blocks[j]) : blocks[x];
        }
        path_.emplace_back(std::countr_zero(blocks[i]), std::countr_zero(blocks[j]));
        if (feasible(child, threshold)) return true;
        path_.pop_back();
      }
    }
    auto& record = failed_[key];
    record = std::max(record, threshold);
    return false;
  }

  const std::vector<Edge>& path() const { return path_; }
  std::uint64_t expanded() const { return expanded_; }

 private:
  std::uint64_t encode(const std::vector<std::uint64_t>& blocks) const {
    std::uint64_t key = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::uint64_t m = blocks[b]; m; m &= m - 1)
        key |= static_cast<std::uint64_t>(b) << (4 * std::countr_zero(m));
    return key;
  }

  std::vector<Link> link_matrix(const std::vector<std::uint64_t>& blocks) const {
    const int k = static_cast<int>(blocks.size());
    std::vector<Link> links(static_cast<std::size_t>(k) * k, Link::none);
    for (int i = 0; i < k; ++i) {
      std::uint64_t some = 0, all = ~std::uint64_t{0};
      for (std::uint64_t m = blocks[i]; m; m &= m - 1) {
        some |= neighbours_[std::countr_zero(m)];
        all &= neighbours_[std::countr_zero(m)];
      }
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        if ((blocks[j] & ~all) == 0) links[static_cast<std::size_t>(i) * k + j] = Link::black;
        else if (blocks[j] & some) links[static_cast<std::size_t>(i) * k + j] = Link::red;
      }
    }
    return links;
  }

  static void contract_links(const std::vector<Link>& links, const std::vector<int>& sizes, int k, int i, int j,
                             std::vector<Link>& out, std::vector<int>& out_sizes) {
    auto old = [j](int x) { return x < j ? x : x + 1; };
    auto at = [&](int a, int b) { return links[static_cast<std::size_t>(a) * k + b]; };
    for (int a = 0; a < k - 1; ++a) {
      const int oa = old(a);
      out_sizes[a] = a == i ? sizes[i] + sizes[j] : sizes[oa];
      for (int b = 0; b < k - 1; ++b) {
        const int ob = old(b);
        Link l;
        if (a == b) {
          l = Link::none;
        } else if (a == i || b == i) {
          const int x = a == i ? ob : oa;
          const Link p = at(i, x), q = at(j, x);
          l = (p == Link::black && q == Link::black) ? Link::black
              : (p == Link::none && q == Link::none) ? Link::none
                                                     : Link::red;
        } else {
          l = at(oa, ob);
        }
        out[static_cast<std::size_t>(a) * (k - 1) + b] = l;
      }
    }
  }

  Width w_;
  Budget budget_;
  int n_;
  std::vector<std::uint64_t> neighbours_;
  std::unordered_map<std::uint64_t, int> failed_;
  std::vector<Edge> path_;
  std::uint64_t expanded_ = 0;
};

}  // namespace

ExactWidthResult greedy_width(const Graph& g, Width w) {
  if (g.order() == 0) throw InvalidArgument("width of the empty graph is undefined");
  Trigraph t = Trigraph::singletons(g);
  ExactWidthResult result;
  result.value = trigraph_width(t, w);
  while (t.part_count() > 1) {
    int best = -1, bi = 0, bj = 1;
    for (int i = 0; i < t.part_count(); ++i)
      for (int j = i + 1; j < t.part_count(); ++j) {
        const int width = trigraph_width(t.contracted(i, j), w);
        if (best < 0 || width < best) {
          best = width;
          bi = i;
          bj = j;
        }
      }
    result.witness.merges.emplace_back(t.part(bi).front(), t.part(bj).front());
    t.merge(bi, bj);
    result.value = std::max(result.value, best);
    ++result.states_expanded;
  }
  return result;
}

ExactWidthResult exact_width(const Graph& g, Width w, const ExactWidthLimits& limits) {
  const int n = g.order();
  if (n == 0) throw InvalidArgument("width of the empty graph is undefined");
  const int max_n = limits.max_n >= 0 ? limits.max_n : (w == Width::tww || w == Width::ctww ? 10 : 8);
  if (n > std::min(max_n, kEncodableOrder)) {
    const ExactWidthResult greedy = greedy_width(g, w);
    throw BudgetExceeded("exact " + std::string(width_name(w)) + " is limited to " +
                             std::to_string(std::min(max_n, kEncodableOrder)) + " vertices (graph has " +
                             std::to_string(n) + ")",
                         std::nullopt, greedy.value);
  }

  std::vector<std::uint64_t> start(n);
  for (Vertex v = 0; v < n; ++v) start[v] = std::uint64_t{1} << v;
  Search search(g, w, limits.budget);
  const int lower = trigraph_width(Trigraph::singletons(g), w);
  for (int threshold = lower;; ++threshold) {
    try {
      if (search.feasible(start, threshold)) {
        ExactWidthResult result;
        result.value = threshold;
        result.witness.merges = search.path();
        result.states_expanded = search.expanded();
        return result;
      }
    } catch (const OutOfBudget&) {
      const ExactWidthResult greedy = greedy_width(g, w);
      throw BudgetExceeded("exact " + std::string(width_name(w)) + " search ran out of budget after " +
                               std::to_string(search.expanded()) + " states",
                           threshold, greedy.value);
    }
  }
}

}  // namespace twwkit
