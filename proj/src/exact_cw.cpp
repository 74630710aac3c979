#include "twwkit/cwexpr.hpp"
#include "twwkit/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

namespace twwkit {

namespace {

using Mask = std::uint64_t;

struct State {
  Mask set = 0;
  std::vector<Mask> classes;  // sorted by lowest vertex

  enum class Origin { leaf, join, merge } origin = Origin::leaf;
  int left = -1;   // join: left state; merge: parent state
  int right = -1;  // join: right state
  // join: for every class of the right state, the left class it shares a
  // label with, or -1. merge: the two merged class indices of the parent.
  std::vector<int> pairing;
};

std::string state_key(const std::vector<Mask>& classes) {
  return std::string(reinterpret_cast<const char*>(classes.data()), classes.size() * sizeof(Mask));
}

int class_of(const std::vector<Mask>& classes, Vertex v) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] >> v & 1) return static_cast<int>(i);
  return -1;
}

class CwSearch {
 public:
  CwSearch(const Graph& g, int width, bool linear, const Budget& budget, std::uint64_t& counter)
      : width_(width), linear_(linear), budget_(budget), counter_(counter), n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) neighbours_.push_back(g.mask(v));
    everything_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  /// Index of a state covering every vertex, or -1.
  int run() {
    by_size_.assign(n_ + 1, {});
    for (Vertex v = 0; v < n_; ++v) {
      State leaf;
      leaf.set = Mask{1} << v;
      leaf.classes = {leaf.set};
      add(std::move(leaf), 1);
    }
    for (int size = 2; size <= n_; ++size) {
      for (int right_size = 1; right_size < size; ++right_size) {
        const int left_size = size - right_size;
        if (linear_ ? right_size != 1 : right_size > left_size) continue;
        const auto& lefts = by_size_[left_size];
        const auto& rights = by_size_[right_size];
        for (std::size_t a = 0; a < lefts.size(); ++a)
          for (std::size_t b = (left_size == right_size && !linear_) ? a + 1 : 0; b < rights.size(); ++b)
            if ((states_[lefts[a]].set & states_[rights[b]].set) == 0) join(lefts[a], rights[b], size);
      }
      for (std::size_t i = 0; i < by_size_[size].size(); ++i) merge_closure(by_size_[size][i], size);
    }
    for (int s : by_size_[n_])
      if (states_[s].set == everything_) return s;
    return -1;
  }

  CwExpr witness(int state, std::vector<int>& labels) const {
    const State& st = states_[state];
    switch (st.origin) {
      case State::Origin::leaf:
        labels = {1};
        return CwExpr::vertex(1, std::to_string(std::countr_zero(st.set)));
      case State::Origin::merge: {
        std::vector<int> parent_labels;
        CwExpr child = witness(st.left, parent_labels);
        const State& parent = states_[st.left];
        const int keep = st.pairing[0], drop = st.pairing[1];
        labels.assign(st.classes.size(), 0);
        for (std::size_t c = 0; c < parent.classes.size(); ++c) {
          if (static_cast<int>(c) == drop) continue;
          const Mask m = static_cast<int>(c) == keep ? parent.classes[keep] | parent.classes[drop] : parent.classes[c];
          labels[class_of(st.classes, std::countr_zero(m))] = parent_labels[c];
        }
        return CwExpr::relabel(parent_labels[drop], parent_labels[keep], std::move(child));
      }
      case State::Origin::join: {
        std::vector<int> left_labels, right_labels;
        CwExpr left = witness(st.left, left_labels);
        CwExpr right = witness(st.right, right_labels);
        const State& ls = states_[st.left];
        const State& rs = states_[st.right];
        std::map<int, int> required;
        std::vector<int> right_targets(rs.classes.size());
        int fresh = 1;
        for (std::size_t j = 0; j < rs.classes.size(); ++j) {
          if (st.pairing[j] >= 0) {
            right_targets[j] = left_labels[st.pairing[j]];
          } else {
            while (std::find(left_labels.begin(), left_labels.end(), fresh) != left_labels.end()) ++fresh;
            right_targets[j] = fresh++;
          }
          required[right_labels[j]] = right_targets[j];
        }
        CwExpr result = CwExpr::disjoint_union(std::move(left), rename_labels_injective(right, required));

        labels.assign(st.classes.size(), 0);
        for (std::size_t c = 0; c < ls.classes.size(); ++c)
          labels[class_of(st.classes, std::countr_zero(ls.classes[c]))] = left_labels[c];
        for (std::size_t c = 0; c < rs.classes.size(); ++c)
          labels[class_of(st.classes, std::countr_zero(rs.classes[c]))] = right_targets[c];

        const auto complete = completeness(st.classes);
        const std::size_t k = st.classes.size();
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = i + 1; j < k; ++j)
            if (complete[i * k + j] && has_cross_edge(st.classes[i], st.classes[j], ls.set, rs.set))
              result = CwExpr::add_edges(labels[i], labels[j], std::move(result));
        return result;
      }
    }
    return CwExpr::vertex(1);
  }

 private:
  void add(State st, int size) {
    auto key = state_key(st.classes);
    if (index_.count(key)) return;
    if (++counter_ > budget_.max_states || ((counter_ & 0x3ff) == 0 && budget_.expired()))
      throw BudgetExceeded("clique-width search ran out of budget", width_);
    index_.emplace(std::move(key), static_cast<int>(states_.size()));
    by_size_[size].push_back(static_cast<int>(states_.size()));
    states_.push_back(std::move(st));
  }

  Mask outside_signature(Mask cls, Mask set) const { return neighbours_[std::countr_zero(cls)] & ~set; }

  // complete[i*k+j]: every vertex of class i is adjacent to every vertex of class j.
  std::vector<char> completeness(const std::vector<Mask>& classes) const {
    const std::size_t k = classes.size();
    std::vector<char> complete(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      Mask common = ~Mask{0};
      for (Mask m = classes[i]; m; m &= m - 1) common &= neighbours_[std::countr_zero(m)];
      for (std::size_t j = 0; j < k; ++j)
        if (j != i) complete[i * k + j] = (classes[j] & ~common) == 0;
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) complete[i * k + j] = complete[i * k + j] && complete[j * k + i];
    return complete;
  }

  bool has_cross_edge(Mask a, Mask b, Mask left, Mask right) const {
    for (Mask m = a; m; m &= m - 1) {
      const Vertex u = std::countr_zero(m);
      const Mask other = (left >> u & 1) ? (b & right) : (b & left);
      if (neighbours_[u] & other) return true;
    }
    return false;
  }

  void join(int a, int b, int size) {
    const State& ls = states_[a];
    const State& rs = states_[b];
    const Mask set = ls.set | rs.set;
    const int ka = static_cast<int>(ls.classes.size()), kb = static_cast<int>(rs.classes.size());
    const int min_shared = ka + kb - width_;
    std::vector<Mask> left_sig(ka), right_sig(kb);
    for (int i = 0; i < ka; ++i) left_sig[i] = outside_signature(ls.classes[i], set);
    for (int j = 0; j < kb; ++j) right_sig[j] = outside_signature(rs.classes[j], set);

    std::vector<int> pairing(kb, -1);
    std::vector<char> left_used(ka, 0);
    std::function<void(int, int)> choose = [&](int j, int shared) {
      if (shared + (kb - j) < min_shared) return;
      if (j == kb) {
        try_join(a, b, pairing, size);
        return;
      }
      pairing[j] = -1;
      choose(j + 1, shared);
      for (int i = 0; i < ka; ++i) {
        if (left_used[i] || left_sig[i] != right_sig[j]) continue;
        left_used[i] = 1;
        pairing[j] = i;
        choose(j + 1, shared + 1);
        left_used[i] = 0;
        pairing[j] = -1;
      }
    };
    choose(0, 0);
  }

  void try_join(int a, int b, const std::vector<int>& pairing, int size) {
    const State& ls = states_[a];
    const State& rs = states_[b];
    std::vector<Mask> classes = ls.classes;
    for (std::size_t j = 0; j < rs.classes.size(); ++j) {
      if (pairing[j] >= 0) classes[pairing[j]] |= rs.classes[j];
      else classes.push_back(rs.classes[j]);
    }
    std::sort(classes.begin(), classes.end(), [](Mask x, Mask y) { return std::countr_zero(x) < std::countr_zero(y); });

    // every edge between the two sides has to come from a complete class pair
    const auto complete = completeness(classes);
    const std::size_t k = classes.size();
    for (Mask m = ls.set; m; m &= m - 1) {
      const Vertex u = std::countr_zero(m);
      const Mask cross = neighbours_[u] & rs.set;
      if (!cross) continue;
      const int cu = class_of(classes, u);
      for (std::size_t j = 0; j < k; ++j) {
        if (!(classes[j] & cross)) continue;
        if (static_cast<int>(j) == cu || !complete[cu * k + j]) return;
      }
    }
    State st;
    st.set = ls.set | rs.set;
    st.classes = std::move(classes);
    st.origin = State::Origin::join;
    st.left = a;
    st.right = b;
    st.pairing = pairing;
    add(std::move(st), size);
  }

  void merge_closure(int s, int size) {
    const std::size_t k = states_[s].classes.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const State& st = states_[s];
        if (outside_signature(st.classes[i], st.set) != outside_signature(st.classes[j], st.set)) continue;
        State next;
        next.set = st.set;
        next.classes = st.classes;
        next.classes[i] |= next.classes[j];
        next.classes.erase(next.classes.begin() + static_cast<std::ptrdiff_t>(j));
        next.origin = State::Origin::merge;
        next.left = s;
        next.pairing = {static_cast<int>(i), static_cast<int>(j)};
        add(std::move(next), size);
      }
    }
  }

  int width_;
  bool linear_;
  const Budget& budget_;
  std::uint64_t& counter_;
  int n_;
  Mask everything_ = 0;
  std::vector<Mask> neighbours_;
  std::vector<State> states_;
  std::vector<std::vector<int>> by_size_;
  std::unordered_map<std::string, int> index_;
};

ExactCwResult search(const Graph& g, int k_max, bool linear, const ExactCwLimits& limits) {
  const int n = g.order();
  const char* what = linear ? "linear clique-width" : "clique-width";
  if (n == 0) throw InvalidArgument(std::string(what) + " of the empty graph is undefined");
  const int max_n = std::min(limits.max_n >= 0 ? limits.max_n : 7, 64);
  if (n > max_n)
    throw BudgetExceeded("exact " + std::string(what) + " is limited to " + std::to_string(max_n) +
                         " vertices (graph has " + std::to_string(n) + ")");
  if (k_max < 1) throw InvalidArgument("k_max must be at least 1");

  ExactCwResult result;
  for (int k = 1; k <= k_max; ++k) {
    CwSearch search(g, k, linear, limits.budget, result.states);
    const int goal = search.run();
    if (goal >= 0) {
      std::vector<int> labels;
      result.value = k;
      result.witness = search.witness(goal, labels);
      return result;
    }
  }
  throw BudgetExceeded("no " + std::string(what) + " expression with at most " + std::to_string(k_max) + " labels",
                       k_max + 1);
}

}  // namespace

ExactCwResult exact_cw(const Graph& g, int k_max, const ExactCwLimits& limits) {
  return search(g, k_max, false, limits);
}

ExactCwResult exact_lcw(const Graph& g, int k_max, const ExactCwLimits& limits) {
  return search(g, k_max, true, limits);
}

}  // namespace twwkit
