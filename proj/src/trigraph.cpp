#include "twwkit/trigraph.hpp"

#include "twwkit/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace twwkit {

Width parse_width(std::string_view name) {
  if (name == "tww") return Width::tww;
  if (name == "ctww") return Width::ctww;
  if (name == "ttww") return Width::ttww;
  if (name == "tvtww") return Width::tvtww;
  throw InvalidArgument("unknown width parameter '" + std::string(name) + "'");
}

std::string_view width_name(Width w) {
  switch (w) {
    case Width::tww: return "tww";
    case Width::ctww: return "ctww";
    case Width::ttww: return "ttww";
    case Width::tvtww: return "tvtww";
  }
  return "?";
}

namespace {

bool by_minimum(const Part& a, const Part& b) { return a.front() < b.front(); }

}  // namespace

Trigraph Trigraph::singletons(const Graph& g) {
  Partition parts(g.order());
  for (Vertex v = 0; v < g.order(); ++v) parts[v] = {v};
  return quotient(g, std::move(parts));
}

Trigraph Trigraph::quotient(const Graph& g, Partition parts) {
  const int n = g.order();
  Trigraph t;
  t.owner_.assign(n, -1);
  for (auto& p : parts) {
    if (p.empty()) throw InvalidArgument("partition has an empty part");
    std::sort(p.begin(), p.end());
  }
  std::sort(parts.begin(), parts.end(), by_minimum);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= n) throw InvalidArgument("partition mentions vertex " + std::to_string(v) + " outside the graph");
      if (t.owner_[v] != -1) throw InvalidArgument("vertex " + std::to_string(v) + " lies in two parts");
      t.owner_[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (t.owner_[v] == -1) throw InvalidArgument("vertex " + std::to_string(v) + " is in no part");

  t.parts_ = std::move(parts);
  const int k = t.part_count();
  t.links_.assign(static_cast<std::size_t>(k) * k, Link::none);
  std::vector<VertexSet> masks(k, VertexSet(n));
  for (int i = 0; i < k; ++i)
    for (Vertex v : t.parts_[i]) masks[i].set(v);
  for (int i = 0; i < k; ++i) {
    VertexSet some(n), all(n);
    all.set();
    for (Vertex v : t.parts_[i]) {
      some |= g.neighbors(v);
      all &= g.neighbors(v);
    }
    for (int j = i + 1; j < k; ++j) {
      Link l = Link::none;
      if (masks[j].is_subset_of(all)) l = Link::black;
      else if (masks[j].intersects(some)) l = Link::red;
      t.at(i, j) = t.at(j, i) = l;
    }
  }
  return t;
}

Link Trigraph::link(int i, int j) const {
  const auto k = parts_.size();
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= k || static_cast<std::size_t>(j) >= k)
    throw InvalidArgument("part index out of range");
  if (i == j) return Link::none;
  return links_[static_cast<std::size_t>(i) * k + j];
}

int Trigraph::red_degree(int i) const {
  int d = 0;
  for (int j = 0; j < part_count(); ++j)
    if (j != i && link(i, j) == Link::red) ++d;
  return d;
}

int Trigraph::index_of(const Part& p) const {
  if (p.empty() || p.front() < 0 || p.front() >= static_cast<int>(owner_.size())) return -1;
  const int i = owner_[p.front()];
  return parts_[i] == p ? i : -1;
}

int Trigraph::merge(int i, int j) {
  const int k = part_count();
  if (i < 0 || j < 0 || i >= k || j >= k || i == j) throw InvalidArgument("merge needs two distinct parts");
  if (i > j) std::swap(i, j);
  // parts are sorted by minimum, so the merged part stays at index i
  std::vector<Link> merged(k);
  for (int x = 0; x < k; ++x) {
    if (x == i || x == j) continue;
    const Link a = link(i, x), b = link(j, x);
    merged[x] = (a == Link::black && b == Link::black) ? Link::black
                : (a == Link::none && b == Link::none) ? Link::none
                                                       : Link::red;
  }
  Part joined;
  std::merge(parts_[i].begin(), parts_[i].end(), parts_[j].begin(), parts_[j].end(), std::back_inserter(joined));
  parts_[i] = std::move(joined);
  parts_.erase(parts_.begin() + j);

  std::vector<Link> links(static_cast<std::size_t>(k - 1) * (k - 1));
  auto old_index = [j](int x) { return x < j ? x : x + 1; };
  for (int a = 0; a < k - 1; ++a) {
    for (int b = 0; b < k - 1; ++b) {
      const int oa = old_index(a), ob = old_index(b);
      Link l;
      if (a == b) l = Link::none;
      else if (a == i) l = merged[ob];
      else if (b == i) l = merged[oa];
      else l = links_[static_cast<std::size_t>(oa) * k + ob];
      links[static_cast<std::size_t>(a) * (k - 1) + b] = l;
    }
  }
  links_ = std::move(links);
  for (int p = 0; p < k - 1; ++p)
    for (Vertex v : parts_[p]) owner_[v] = p;
  return i;
}

Trigraph Trigraph::contracted(int i, int j) const {
  Trigraph copy = *this;
  copy.merge(i, j);
  return copy;
}

std::vector<std::pair<int, int>> Trigraph::black_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < part_count(); ++i)
    for (int j = i + 1; j < part_count(); ++j)
      if (link(i, j) == Link::black) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> Trigraph::red_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < part_count(); ++i)
    for (int j = i + 1; j < part_count(); ++j)
      if (link(i, j) == Link::red) out.emplace_back(i, j);
  return out;
}

std::vector<std::vector<int>> Trigraph::red_components() const {
  const int k = part_count();
  std::vector<int> comp(k, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < k; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (int y = 0; y < k; ++y) {
        if (comp[y] == -1 && y != x && link(x, y) == Link::red) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Trigraph contract(const Trigraph& t, const Part& u, const Part& v) {
  const int i = t.index_of(u), j = t.index_of(v);
  if (i < 0 || j < 0) throw InvalidArgument("contract: argument is not a part of the trigraph");
  if (i == j) throw InvalidArgument("contract: the two parts coincide");
  return t.contracted(i, j);
}

int trigraph_width(const Trigraph& t, Width w) {
  const int k = t.part_count();
  switch (w) {
    case Width::tww: {
      int best = 0;
      for (int i = 0; i < k; ++i) best = std::max(best, t.red_degree(i));
      return best;
    }
    case Width::ctww: {
      std::size_t best = 0;
      for (const auto& c : t.red_components()) best = std::max(best, c.size());
      return static_cast<int>(best);
    }
    case Width::ttww: {
      int total = static_cast<int>(t.red_edges().size());
      for (int i = 0; i < k; ++i) total += t.red_loop(i) ? 1 : 0;
      return total;
    }
    case Width::tvtww: {
      int total = 0;
      for (int i = 0; i < k; ++i) total += (t.red_loop(i) || t.red_degree(i) > 0) ? 1 : 0;
      return total;
    }
  }
  return 0;
}

ContractionSequence parse_sequence(std::string_view text) {
  ContractionSequence seq;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    std::string second, extra;
    if (!(fields >> second) || (fields >> extra))
      throw ParseError("expected two vertex ids", line_no);
    Edge e{};
    for (auto [token, slot] : {std::pair{&first, &e.first}, std::pair{&second, &e.second}}) {
      const char* end = token->data() + token->size();
      auto [ptr, ec] = std::from_chars(token->data(), end, *slot);
      if (ec != std::errc() || ptr != end || *slot < 0)
        throw ParseError("'" + *token + "' is not a vertex id", line_no);
    }
    seq.merges.push_back(e);
  }
  return seq;
}

std::string serialize_sequence(const ContractionSequence& seq) {
  std::string out;
  for (auto [u, v] : seq.merges) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

ContractionSequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_sequence(buffer.str());
}

void write_sequence_file(const std::string& path, const ContractionSequence& seq) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << serialize_sequence(seq);
}

void validate_sequence(const Graph& g, const ContractionSequence& seq) {
  SequenceReplay walk(g, seq);
  while (!walk.done()) walk.advance();
}

SequenceReplay::SequenceReplay(const Graph& g, const ContractionSequence& seq)
    : seq_(&seq), current_(Trigraph::singletons(g)), previous_(current_) {
  const int n = g.order();
  if (n == 0) throw InvalidCertificate("contraction sequences need at least one vertex");
  if (seq.merges.size() != static_cast<std::size_t>(n - 1))
    throw InvalidCertificate("sequence has " + std::to_string(seq.merges.size()) + " merges, expected " +
                             std::to_string(n - 1));
  for (auto [u, v] : seq.merges)
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidCertificate("merge " + std::to_string(u) + " " + std::to_string(v) + " names a vertex outside the graph");
}

SequenceReplay::Step SequenceReplay::advance() {
  if (done()) throw std::logic_error("SequenceReplay::advance past the end");
  const auto [u, v] = seq_->merges[next_];
  const int i = current_.part_containing(u), j = current_.part_containing(v);
  if (i == j)
    throw InvalidCertificate("merge " + std::to_string(next_ + 1) + " (" + std::to_string(u) + " " +
                             std::to_string(v) + ") joins a part with itself");
  previous_ = current_;
  const int merged = current_.merge(i, j);
  ++next_;
  return {i, j, merged};
}

std::vector<Trigraph> replay(const Graph& g, const ContractionSequence& seq) {
  SequenceReplay walk(g, seq);
  std::vector<Trigraph> out{walk.current()};
  while (!walk.done()) {
    walk.advance();
    out.push_back(walk.current());
  }
  return out;
}

int sequence_width(const Graph& g, const ContractionSequence& seq, Width w) {
  SequenceReplay walk(g, seq);
  int best = trigraph_width(walk.current(), w);
  while (!walk.done()) {
    walk.advance();
    best = std::max(best, trigraph_width(walk.current(), w));
  }
  return best;
}

}  // namespace twwkit
