#include "twwkit/homcount.hpp"

#include "twwkit/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace twwkit {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> template_masks(const Graph& h) {
  if (h.order() > 64) throw InvalidArgument("templates are limited to 64 vertices");
  std::vector<Mask> out;
  for (Vertex v = 0; v < h.order(); ++v) out.push_back(h.mask(v));
  return out;
}

void charge(std::uint64_t& work, const Budget& budget, const char* what) {
  if (++work > budget.max_states || ((work & 0xffff) == 0 && budget.expired()))
    throw BudgetExceeded(std::string(what) + " ran out of budget after " + std::to_string(work - 1) + " steps");
}

class Backtracker {
 public:
  Backtracker(const Graph& g, const std::vector<Vertex>& component, const std::vector<Mask>& h, const Budget& budget,
              std::uint64_t& work)
      : h_(h), budget_(budget), work_(work) {
    // breadth-first order so every vertex after the first has an earlier neighbour
    std::vector<int> position(g.order(), -1);
    order_.push_back(component.front());
    position[component.front()] = 0;
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (Vertex w : g.neighbor_list(order_[i]))
        if (position[w] < 0) {
          position[w] = static_cast<int>(order_.size());
          order_.push_back(w);
        }
    earlier_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (Vertex w : g.neighbor_list(order_[i]))
        if (position[w] < static_cast<int>(i)) earlier_[i].push_back(position[w]);
    image_.resize(order_.size());
    all_ = h.size() == 64 ? ~Mask{0} : (Mask{1} << h.size()) - 1;
  }

  std::uint64_t count(bool stop_at_first) {
    stop_ = stop_at_first;
    return extend(0);
  }

 private:
  std::uint64_t extend(std::size_t i) {
    if (i == order_.size()) return 1;
    charge(work_, budget_, "brute-force count");
    Mask candidates = all_;
    for (int j : earlier_[i]) candidates &= h_[image_[j]];
    std::uint64_t total = 0;
    for (Mask m = candidates; m; m &= m - 1) {
      image_[i] = std::countr_zero(m);
      total += extend(i + 1);
      if (stop_ && total) break;
    }
    return total;
  }

  const std::vector<Mask>& h_;
  const Budget& budget_;
  std::uint64_t& work_;
  std::vector<Vertex> order_;
  std::vector<std::vector<int>> earlier_;
  std::vector<Vertex> image_;
  Mask all_ = 0;
  bool stop_ = false;
};

HomCount brute(const Graph& g, const Graph& h, const CountOptions& options, bool stop_at_first) {
  const auto masks = template_masks(h);
  HomCount total = 1;
  std::uint64_t work = 0;
  for (const auto& component : connected_components(g)) {
    if (component.size() == 1) {
      total *= h.order();
    } else {
      total *= Backtracker(g, component, masks, options.budget, work).count(stop_at_first);
    }
    if (total == 0) break;
  }
  return total;
}

// Labels the parts of `before` that end up in `group` (indices into `after`,
// ascending): 0..p-1 in group order, the higher-indexed merged part gets p.
std::map<int, int> positions_before_merge(const Trigraph& before, const Trigraph& after,
                                          const SequenceReplay::Step& step, const std::vector<int>& group) {
  const int low = std::min(step.u_index, step.v_index);
  const int high = std::max(step.u_index, step.v_index);
  std::map<int, int> positions;
  for (std::size_t t = 0; t < group.size(); ++t) {
    const int x = group[t];
    if (x == step.merged_index) positions[low] = static_cast<int>(t);
    else positions[before.index_of(after.part(x))] = static_cast<int>(t);
  }
  positions[high] = static_cast<int>(group.size());
  return positions;
}

std::vector<int> component_holding(const Trigraph& t, int part) {
  for (auto& c : t.red_components())
    if (std::binary_search(c.begin(), c.end(), part)) return c;
  return {};
}

HomCount power(std::uint64_t base, int exponent) {
  HomCount out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

void note_tables(CountStats* stats, std::size_t entries, std::size_t bytes_per_entry) {
  if (!stats) return;
  stats->peak_table_entries = std::max(stats->peak_table_entries, entries);
  stats->peak_table_bytes = std::max(stats->peak_table_bytes, entries * bytes_per_entry);
}

}  // namespace

HomCount brute_count(const Graph& g, const Graph& h, const CountOptions& options) {
  return brute(g, h, options, false);
}

HomCount count_g_side(const Graph& g, const ContractionSequence& seq, const Graph& h, const CountOptions& options) {
  const auto masks = template_masks(h);
  const int m = h.order();
  if (g.order() == 0) return 1;
  SequenceReplay walk(g, seq);
  if (m == 0) return 0;

  using Profile = std::vector<Mask>;  // image set of every part, in part order
  using Table = std::map<Profile, HomCount>;
  std::map<Vertex, Table> tables;     // keyed by the component's smallest vertex
  for (Vertex v = 0; v < g.order(); ++v) {
    Table base;
    for (int x = 0; x < m; ++x) base.emplace(Profile{Mask{1} << x}, 1);
    if (options.component_observer) options.component_observer({v}, HomCount(m));
    tables.emplace(v, std::move(base));
  }
  const std::size_t bytes_per_entry = sizeof(Mask) + sizeof(HomCount) + 64;
  note_tables(options.stats, static_cast<std::size_t>(g.order()) * m, bytes_per_entry);

  auto common_neighbours = [&masks](Mask image) {
    Mask common = ~Mask{0};
    for (Mask r = image; r; r &= r - 1) common &= masks[std::countr_zero(r)];
    return common;
  };

  std::uint64_t work = 0;
  while (!walk.done()) {
    const auto step = walk.advance();
    const Trigraph& before = walk.previous();
    const Trigraph& after = walk.current();
    const auto group = component_holding(after, step.merged_index);
    const auto positions = positions_before_merge(before, after, step, group);
    const int merged_position = positions.at(std::min(step.u_index, step.v_index));
    const int p = static_cast<int>(group.size());

    // touched components of the trigraph before the merge, with their tables
    struct Piece {
      std::vector<int> parts;  // before-indices, ascending
      std::vector<std::pair<Profile, HomCount>> entries;
      std::vector<std::vector<Mask>> common;  // per entry, per part
    };
    std::vector<Piece> pieces;
    std::vector<int> piece_of(before.part_count(), -1);
    for (auto& c : before.red_components()) {
      if (!positions.count(c.front())) continue;
      Piece piece;
      piece.parts = c;
      auto node = tables.extract(before.part(c.front()).front());
      for (auto& [profile, count] : node.mapped()) {
        std::vector<Mask> common;
        for (Mask image : profile) common.push_back(common_neighbours(image));
        piece.entries.emplace_back(profile, count);
        piece.common.push_back(std::move(common));
      }
      for (int x : c) piece_of[x] = static_cast<int>(pieces.size());
      pieces.push_back(std::move(piece));
    }
    // black edges between different touched components: (piece, slot) pairs
    struct CrossPair {
      int piece_a, slot_a, piece_b, slot_b;
    };
    std::vector<CrossPair> cross;
    std::vector<int> slot_of(before.part_count(), -1);
    for (auto& piece : pieces)
      for (std::size_t s = 0; s < piece.parts.size(); ++s) slot_of[piece.parts[s]] = static_cast<int>(s);
    for (auto a = positions.begin(); a != positions.end(); ++a)
      for (auto b = std::next(a); b != positions.end(); ++b)
        if (piece_of[a->first] != piece_of[b->first] && before.link(a->first, b->first) == Link::black)
          cross.push_back({piece_of[a->first], slot_of[a->first], piece_of[b->first], slot_of[b->first]});

    Table merged;
    HomCount enumerated = 0;
    std::vector<std::size_t> choice(pieces.size(), 0);
    Profile profile(p);
    const bool any_empty =
        std::any_of(pieces.begin(), pieces.end(), [](const Piece& piece) { return piece.entries.empty(); });
    while (!any_empty) {
      charge(work, options.budget, "contraction-sequence count");
      ++enumerated;
      bool feasible = true;
      for (const auto& c : cross) {
        const Mask image_b = pieces[c.piece_b].entries[choice[c.piece_b]].first[c.slot_b];
        if ((image_b & ~pieces[c.piece_a].common[choice[c.piece_a]][c.slot_a]) != 0) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        std::fill(profile.begin(), profile.end(), 0);
        HomCount product = 1;
        for (std::size_t j = 0; j < pieces.size(); ++j) {
          const auto& [sub_profile, count] = pieces[j].entries[choice[j]];
          product *= count;
          for (std::size_t s = 0; s < sub_profile.size(); ++s) {
            const int position = positions.at(pieces[j].parts[s]);
            profile[position == p ? merged_position : position] |= sub_profile[s];
          }
        }
        merged[profile] += product;
      }
      std::size_t j = 0;
      while (j < pieces.size() && ++choice[j] == pieces[j].entries.size()) choice[j++] = 0;
      if (j == pieces.size()) break;
    }

    if (options.stats) {
      options.stats->merges.push_back({p, enumerated, power((m == 64 ? ~Mask{0} : (Mask{1} << m) - 1), p + 1)});
      options.stats->total_enumerated += enumerated;
    }
    if (options.component_observer) {
      std::vector<Vertex> vertices;
      for (int x : group) vertices.insert(vertices.end(), after.part(x).begin(), after.part(x).end());
      std::sort(vertices.begin(), vertices.end());
      HomCount total = 0;
      for (auto& [key, count] : merged) total += count;
      options.component_observer(vertices, total);
    }
    tables.emplace(after.part(group.front()).front(), std::move(merged));
    std::size_t live = 0;
    for (auto& [key, table] : tables) live += table.size();
    note_tables(options.stats, live, bytes_per_entry);
  }

  HomCount total = 0;
  for (auto& [profile, count] : tables.begin()->second) total += count;
  return total;
}

HomCount count_h_side(const Graph& g, const Graph& h, const ContractionSequence& seq_h, const CountOptions& options) {
  const int n = g.order();
  const int m = h.order();
  if (n == 0) return 1;
  if (m == 0) return 0;
  SequenceReplay walk(h, seq_h);
  const auto edges = g.edges();

  auto size_for = [&](int base) {
    HomCount size = power(static_cast<std::uint64_t>(base), n);
    if (size > options.budget.max_states)
      throw BudgetExceeded("template-sequence count needs " + size.str() + " assignments per merge");
    return static_cast<std::size_t>(size);
  };

  // Dense table over assignments V_G -> {part 0..p-1, unassigned = p}, in
  // base p+1 with vertex 0 as the lowest digit.
  struct Table {
    int parts;
    std::vector<HomCount> values;
  };
  std::map<Vertex, Table> tables;  // keyed by the component's smallest vertex
  {
    const std::size_t size = size_for(2);
    for (Vertex v = 0; v < m; ++v) {
      Table base{1, std::vector<HomCount>(size, 0)};
      for (std::size_t index = 0; index < size; ++index) {
        bool independent = true;  // digit 0 means assigned to the single part
        for (auto [x, y] : edges)
          if (!(index >> x & 1) && !(index >> y & 1)) independent = false;
        base.values[index] = independent ? 1 : 0;
      }
      tables.emplace(v, std::move(base));
    }
    note_tables(options.stats, size * static_cast<std::size_t>(m), sizeof(HomCount) + 16);
  }

  std::uint64_t work = 0;
  while (!walk.done()) {
    const auto step = walk.advance();
    const Trigraph& before = walk.previous();
    const Trigraph& after = walk.current();
    const auto group = component_holding(after, step.merged_index);
    const auto positions = positions_before_merge(before, after, step, group);
    const int merged_position = positions.at(std::min(step.u_index, step.v_index));
    const int p = static_cast<int>(group.size());
    const int unassigned = p + 1;  // digit value in the enumeration

    struct Piece {
      Table table;
      std::vector<int> local;  // position -> local part index, or table.parts
    };
    std::vector<Piece> pieces;
    std::vector<int> piece_of_position(p + 1, -1);
    std::vector<int> part_at(p + 1, -1);
    for (auto [x, position] : positions) part_at[position] = x;
    for (auto& c : before.red_components()) {
      if (!positions.count(c.front())) continue;
      Piece piece{tables.extract(before.part(c.front()).front()).mapped(), std::vector<int>(p + 2, 0)};
      std::fill(piece.local.begin(), piece.local.end(), piece.table.parts);
      for (std::size_t s = 0; s < c.size(); ++s) {
        const int position = positions.at(c[s]);
        piece.local[position] = static_cast<int>(s);
        piece_of_position[position] = static_cast<int>(pieces.size());
      }
      pieces.push_back(std::move(piece));
    }
    std::vector<char> allowed((p + 1) * (p + 1), 1);
    for (int a = 0; a <= p; ++a)
      for (int b = 0; b <= p; ++b)
        if (piece_of_position[a] != piece_of_position[b])
          allowed[a * (p + 1) + b] = before.link(part_at[a], part_at[b]) == Link::black;

    const std::size_t new_size = size_for(p + 1);
    const std::size_t enumeration = size_for(p + 2);
    Table merged{p, std::vector<HomCount>(new_size, 0)};
    std::vector<int> digit(n, 0);
    std::vector<std::size_t> weight(n, 1);
    for (int v = 1; v < n; ++v) weight[v] = weight[v - 1] * static_cast<std::size_t>(p + 1);
    HomCount enumerated = 0;
    for (std::size_t a = 0; a < enumeration; ++a) {
      charge(work, options.budget, "template-sequence count");
      ++enumerated;
      HomCount product = 1;
      for (const auto& piece : pieces) {
        std::size_t index = 0, scale = 1;
        for (int v = 0; v < n; ++v) {
          index += scale * static_cast<std::size_t>(piece.local[digit[v]]);
          scale *= static_cast<std::size_t>(piece.table.parts + 1);
        }
        const HomCount& value = piece.table.values[index];
        if (value == 0) {
          product = 0;
          break;
        }
        product *= value;
      }
      if (product != 0) {
        for (auto [x, y] : edges) {
          if (digit[x] == unassigned || digit[y] == unassigned) continue;
          if (!allowed[digit[x] * (p + 1) + digit[y]]) {
            product = 0;
            break;
          }
        }
      }
      if (product != 0) {
        std::size_t index = 0;
        for (int v = 0; v < n; ++v) {
          const int d = digit[v];
          const int target = d == unassigned ? p : (d == p ? merged_position : d);
          index += weight[v] * static_cast<std::size_t>(target);
        }
        merged.values[index] += product;
      }
      for (int v = 0; v < n && ++digit[v] == p + 2; ++v) digit[v] = 0;
    }

    if (options.stats) {
      options.stats->merges.push_back({p, enumerated, power(static_cast<std::uint64_t>(p + 2), n)});
      options.stats->total_enumerated += enumerated;
    }
    tables.emplace(after.part(group.front()).front(), std::move(merged));
    std::size_t live = 0;
    for (auto& [key, table] : tables) live += table.values.size();
    note_tables(options.stats, live, sizeof(HomCount) + 16);
  }
  return tables.begin()->second.values.front();
}

bool exists_hom(const Graph& g, const Graph& h, CountAlgorithm algorithm,
                const std::optional<ContractionSequence>& sequence, const CountOptions& options) {
  switch (algorithm) {
    case CountAlgorithm::brute:
      return brute(g, h, options, true) > 0;
    case CountAlgorithm::g_side:
      if (!sequence) throw InvalidArgument("the input-graph strategy needs a contraction sequence of the input graph");
      return count_g_side(g, *sequence, h, options) > 0;
    case CountAlgorithm::h_side:
      if (!sequence) throw InvalidArgument("the template strategy needs a contraction sequence of the template");
      return count_h_side(g, h, *sequence, options) > 0;
  }
  return false;
}

}  // namespace twwkit
