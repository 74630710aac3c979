#include "twwkit/graph.hpp"

#include "twwkit/budget.hpp"
#include "twwkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace twwkit {

Budget Budget::from_environment() {
  Budget budget;
  if (const char* ms = std::getenv("TWWKIT_BUDGET_MS")) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(ms, ms + std::char_traits<char>::length(ms), value);
    if (ec == std::errc() && value > 0) {
      budget.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(value);
    }
  }
  return budget;
}

Graph::Graph(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  rows_.assign(n, VertexSet(n));
  lists_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(order()) + ")");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u].test(v);
}

std::uint64_t Graph::mask(Vertex v) const {
  if (order() > 64) throw InvalidArgument("64-bit masks need at most 64 vertices");
  check_vertex(v);
  std::uint64_t m = 0;
  for (Vertex w : lists_[v]) m |= std::uint64_t{1} << w;
  return m;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop on vertex " + std::to_string(u));
  if (rows_[u].test(v)) return false;
  rows_[u].set(v);
  rows_[v].set(u);
  lists_[u].insert(std::lower_bound(lists_[u].begin(), lists_[u].end(), v), v);
  lists_[v].insert(std::lower_bound(lists_[v].begin(), lists_[v].end(), u), u);
  ++edge_count_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : lists_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return sub;
}

int LabelledGraph::label_count() const {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

namespace {

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (!g) {
      long long n = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], n)) {
        throw ParseError("expected header 'n <count>'", line_no);
      }
      if (n < 0 || n > 1'000'000) throw ParseError("vertex count out of range", line_no);
      g.emplace(static_cast<int>(n));
      continue;
    }
    long long u = 0, v = 0;
    if (tokens.size() != 3 || tokens[0] != "e" || !parse_int(tokens[1], u) ||
        !parse_int(tokens[2], v)) {
      throw ParseError("expected edge line 'e <u> <v>'", line_no);
    }
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) {
      throw ParseError("edge endpoint out of range", line_no);
    }
    if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line_no);
    if (!g->add_edge(static_cast<int>(u), static_cast<int>(v))) {
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no);
    }
  }
  if (!g) throw ParseError("missing header 'n <count>'", line_no + 1);
  return std::move(*g);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << serialize_graph(g);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

constexpr std::pair<GraphKind, std::string_view> kKindNames[] = {
    {GraphKind::cycle, "cycle"},
    {GraphKind::path, "path"},
    {GraphKind::complete, "complete"},
    {GraphKind::complete_bipartite, "complete_bipartite"},
    {GraphKind::empty, "empty"},
    {GraphKind::random, "random"},
    {GraphKind::cograph, "cograph"},
    {GraphKind::distance_hereditary, "distance_hereditary"},
    {GraphKind::grid, "grid"},
};

void require(bool ok, const char* message) {
  if (!ok) throw InvalidArgument(message);
}

Graph random_cograph(int n, Rng& rng) {
  Graph g(n);
  std::vector<std::vector<Vertex>> subtrees;
  for (Vertex v = 0; v < n; ++v) subtrees.push_back({v});
  while (subtrees.size() > 1) {
    std::size_t i = rng.below(subtrees.size());
    std::size_t j = rng.below(subtrees.size() - 1);
    if (j >= i) ++j;
    if (rng.chance(0.5)) {
      for (Vertex u : subtrees[i]) {
        for (Vertex v : subtrees[j]) g.add_edge(u, v);
      }
    }
    subtrees[i].insert(subtrees[i].end(), subtrees[j].begin(), subtrees[j].end());
    subtrees.erase(subtrees.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return g;
}

Graph random_distance_hereditary(int n, Rng& rng) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
    switch (rng.below(3)) {
      case 0:  // pendant
        g.add_edge(u, v);
        break;
      case 1:  // true twin
        for (Vertex w : std::vector<Vertex>(g.neighbor_list(u))) g.add_edge(v, w);
        g.add_edge(u, v);
        break;
      default:  // false twin
        for (Vertex w : std::vector<Vertex>(g.neighbor_list(u))) g.add_edge(v, w);
        break;
    }
  }
  return g;
}

}  // namespace

GraphKind parse_graph_kind(std::string_view name) {
  for (auto [kind, text] : kKindNames) {
    if (text == name) return kind;
  }
  throw InvalidArgument("unknown graph kind '" + std::string(name) + "'");
}

std::string_view graph_kind_name(GraphKind kind) {
  for (auto [k, text] : kKindNames) {
    if (k == kind) return text;
  }
  return "unknown";
}

Graph generate(GraphKind kind, const GenParams& params, std::uint64_t seed) {
  Rng rng(seed);
  const int n = params.n;
  switch (kind) {
    case GraphKind::cycle: {
      require(n >= 3, "cycle needs n >= 3");
      Graph g(n);
      for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      return g;
    }
    case GraphKind::path: {
      require(n >= 1, "path needs n >= 1");
      Graph g(n);
      for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case GraphKind::complete: {
      require(n >= 1, "complete needs n >= 1");
      Graph g(n);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
      }
      return g;
    }
    case GraphKind::complete_bipartite: {
      require(params.a >= 1 && params.b >= 1, "complete_bipartite needs a >= 1 and b >= 1");
      Graph g(params.a + params.b);
      for (Vertex u = 0; u < params.a; ++u) {
        for (Vertex v = params.a; v < params.a + params.b; ++v) g.add_edge(u, v);
      }
      return g;
    }
    case GraphKind::empty:
      require(n >= 0, "empty needs n >= 0");
      return Graph(n);
    case GraphKind::random: {
      require(n >= 1, "random needs n >= 1");
      require(params.p >= 0.0 && params.p <= 1.0, "random needs p in [0, 1]");
      Graph g(n);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (rng.chance(params.p)) g.add_edge(u, v);
        }
      }
      return g;
    }
    case GraphKind::cograph:
      require(n >= 1, "cograph needs n >= 1");
      return random_cograph(n, rng);
    case GraphKind::distance_hereditary:
      require(n >= 1, "distance_hereditary needs n >= 1");
      return random_distance_hereditary(n, rng);
    case GraphKind::grid: {
      require(params.rows >= 1 && params.cols >= 1, "grid needs rows >= 1 and cols >= 1");
      Graph g(params.rows * params.cols);
      for (int r = 0; r < params.rows; ++r) {
        for (int c = 0; c < params.cols; ++c) {
          Vertex v = r * params.cols + c;
          if (c + 1 < params.cols) g.add_edge(v, v + 1);
          if (r + 1 < params.rows) g.add_edge(v, v + params.cols);
        }
      }
      return g;
    }
  }
  throw InvalidArgument("unknown graph kind");
}

bool is_cograph(const Graph& g) {
  const int n = g.order();
  // An induced P4 a-b-c-d: enumerate the middle edge b-c, then a in N(b)\N[c]
  // and d in N(c)\N[b] with a, d non-adjacent.
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex c : g.neighbor_list(b)) {
      for (Vertex a : g.neighbor_list(b)) {
        if (a == c || g.adjacent(a, c)) continue;
        for (Vertex d : g.neighbor_list(c)) {
          if (d == b || d == a || g.adjacent(d, b) || g.adjacent(a, d)) continue;
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : g.neighbor_list(members[i])) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace twwkit
