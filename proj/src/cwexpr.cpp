#include "twwkit/cwexpr.hpp"

#include "twwkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace twwkit {

CwExpr CwExpr::vertex(int label, std::string name) {
  if (label < 1) throw InvalidArgument("labels must be positive");
  auto node = std::make_shared<Node>();
  node->kind = Kind::vertex;
  node->first = label;
  node->name = std::move(name);
  return CwExpr(std::move(node));
}

CwExpr CwExpr::disjoint_union(CwExpr left, CwExpr right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::disjoint_union;
  node->leaves = left.leaf_count() + right.leaf_count();
  node->left = std::make_unique<CwExpr>(std::move(left));
  node->right = std::make_unique<CwExpr>(std::move(right));
  return CwExpr(std::move(node));
}

CwExpr CwExpr::relabel(int from, int to, CwExpr child) {
  if (from < 1 || to < 1) throw InvalidArgument("labels must be positive");
  if (from == to) throw InvalidArgument("relabel needs two different labels");
  auto node = std::make_shared<Node>();
  node->kind = Kind::relabel;
  node->first = from;
  node->second = to;
  node->leaves = child.leaf_count();
  node->left = std::make_unique<CwExpr>(std::move(child));
  return CwExpr(std::move(node));
}

CwExpr CwExpr::add_edges(int first, int second, CwExpr child) {
  if (first < 1 || second < 1) throw InvalidArgument("labels must be positive");
  if (first == second) throw InvalidArgument("edge creation needs two different labels");
  auto node = std::make_shared<Node>();
  node->kind = Kind::add_edges;
  node->first = first;
  node->second = second;
  node->leaves = child.leaf_count();
  node->left = std::make_unique<CwExpr>(std::move(child));
  return CwExpr(std::move(node));
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  CwExpr parse() {
    CwExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
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
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(std::string_view token) {
    skip();
    return text_.substr(pos_, token.size()) == token;
  }

  void expect(std::string_view token) {
    if (!peek(token)) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  int integer() {
    skip();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a label");
    if (value < 1) fail("labels must be positive");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a vertex name");
    return std::string(text_.substr(start, pos_ - start));
  }

  CwExpr expr() {
    skip();
    const std::size_t start = pos_;
    if (peek("v(")) {
      pos_ += 2;
      const int label = integer();
      std::string vertex_name;
      if (peek(":")) {
        ++pos_;
        vertex_name = name();
        if (!names_.insert(vertex_name).second) {
          pos_ = start;
          fail("duplicate vertex name '" + vertex_name + "'");
        }
      }
      expect(")");
      return CwExpr::vertex(label, std::move(vertex_name));
    }
    if (peek("r(")) {
      pos_ += 2;
      const int from = integer();
      expect("->");
      const int to = integer();
      if (from == to) {
        pos_ = start;
        fail("relabel needs two different labels");
      }
      expect(",");
      CwExpr child = expr();
      expect(")");
      return CwExpr::relabel(from, to, std::move(child));
    }
    if (peek("e(")) {
      pos_ += 2;
      const int first = integer();
      expect(",");
      const int second = integer();
      if (first == second) {
        pos_ = start;
        fail("edge creation needs two different labels");
      }
      expect(",");
      CwExpr child = expr();
      expect(")");
      return CwExpr::add_edges(first, second, std::move(child));
    }
    if (peek("(")) {
      ++pos_;
      CwExpr left = expr();
      expect("+");
      CwExpr right = expr();
      expect(")");
      return CwExpr::disjoint_union(std::move(left), std::move(right));
    }
    fail("expected an expression");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<std::string> names_;
};

void serialize_into(const CwExpr& e, std::string& out) {
  switch (e.kind()) {
    case CwExpr::Kind::vertex:
      out += "v(" + std::to_string(e.label());
      if (!e.name().empty()) out += ":" + e.name();
      out += ')';
      return;
    case CwExpr::Kind::disjoint_union:
      out += '(';
      serialize_into(e.left(), out);
      out += '+';
      serialize_into(e.right(), out);
      out += ')';
      return;
    case CwExpr::Kind::relabel:
      out += "r(" + std::to_string(e.first()) + "->" + std::to_string(e.second()) + ",";
      serialize_into(e.child(), out);
      out += ')';
      return;
    case CwExpr::Kind::add_edges:
      out += "e(" + std::to_string(e.first()) + "," + std::to_string(e.second()) + ",";
      serialize_into(e.child(), out);
      out += ')';
      return;
  }
}

void collect_leaves(const CwExpr& e, std::vector<const CwExpr*>& out) {
  if (e.kind() == CwExpr::Kind::vertex) {
    out.push_back(&e);
  } else if (e.kind() == CwExpr::Kind::disjoint_union) {
    collect_leaves(e.left(), out);
    collect_leaves(e.right(), out);
  } else {
    collect_leaves(e.child(), out);
  }
}

void collect_labels(const CwExpr& e, std::set<int>& out) {
  switch (e.kind()) {
    case CwExpr::Kind::vertex:
      out.insert(e.label());
      return;
    case CwExpr::Kind::disjoint_union:
      collect_labels(e.left(), out);
      collect_labels(e.right(), out);
      return;
    default:
      out.insert(e.first());
      out.insert(e.second());
      collect_labels(e.child(), out);
  }
}

// Evaluates e; `members` receives (vertex id, current label) of its leaves.
void evaluate(const CwExpr& e, const std::vector<Vertex>& ids, std::size_t& next_leaf, Graph& g,
              std::vector<std::pair<Vertex, int>>& members) {
  switch (e.kind()) {
    case CwExpr::Kind::vertex:
      members.emplace_back(ids[next_leaf++], e.label());
      return;
    case CwExpr::Kind::disjoint_union:
      evaluate(e.left(), ids, next_leaf, g, members);
      evaluate(e.right(), ids, next_leaf, g, members);
      return;
    case CwExpr::Kind::relabel: {
      const std::size_t start = members.size();
      evaluate(e.child(), ids, next_leaf, g, members);
      for (std::size_t a = start; a < members.size(); ++a)
        if (members[a].second == e.first()) members[a].second = e.second();
      return;
    }
    case CwExpr::Kind::add_edges: {
      const std::size_t start = members.size();
      evaluate(e.child(), ids, next_leaf, g, members);
      for (std::size_t a = start; a < members.size(); ++a) {
        if (members[a].second != e.first()) continue;
        for (std::size_t b = start; b < members.size(); ++b)
          if (members[b].second == e.second()) g.add_edge(members[a].first, members[b].first);
      }
      return;
    }
  }
}

}  // namespace

CwExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string serialize_expr(const CwExpr& e) {
  std::string out;
  serialize_into(e, out);
  return out;
}

CwExpr read_expr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_expr(buffer.str());
}

void write_expr_file(const std::string& path, const CwExpr& e) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << serialize_expr(e) << '\n';
}

std::vector<Vertex> leaf_vertex_ids(const CwExpr& e) {
  std::vector<const CwExpr*> leaves;
  collect_leaves(e, leaves);
  const int n = static_cast<int>(leaves.size());
  std::vector<Vertex> ids(n);
  const bool all_named = std::all_of(leaves.begin(), leaves.end(), [](const CwExpr* l) { return !l->name().empty(); });
  if (!all_named) {
    std::set<std::string> seen;
    for (const CwExpr* l : leaves)
      if (!l->name().empty() && !seen.insert(l->name()).second)
        throw InvalidArgument("duplicate vertex name '" + l->name() + "'");
    for (int i = 0; i < n; ++i) ids[i] = i;
    return ids;
  }

  std::vector<std::string> sorted;
  for (const CwExpr* l : leaves) sorted.push_back(l->name());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("duplicate vertex name '" + *std::adjacent_find(sorted.begin(), sorted.end()) + "'");

  bool numeric = true;
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n && numeric; ++i) {
    const std::string& s = leaves[i]->name();
    int value = -1;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    numeric = ec == std::errc() && ptr == s.data() + s.size() && value >= 0 && value < n &&
              std::to_string(value) == s && !hit[value];
    if (numeric) {
      hit[value] = 1;
      ids[i] = value;
    }
  }
  if (numeric) return ids;
  for (int i = 0; i < n; ++i)
    ids[i] = static_cast<Vertex>(std::lower_bound(sorted.begin(), sorted.end(), leaves[i]->name()) - sorted.begin());
  return ids;
}

LabelledGraph eval_expr(const CwExpr& e) {
  const std::vector<Vertex> ids = leaf_vertex_ids(e);
  const int n = static_cast<int>(ids.size());
  LabelledGraph out{Graph(n), std::vector<int>(n, 0), std::vector<std::string>(n)};
  std::vector<const CwExpr*> leaves;
  collect_leaves(e, leaves);
  for (int i = 0; i < n; ++i) out.names[ids[i]] = leaves[i]->name();
  std::vector<std::pair<Vertex, int>> members;
  std::size_t next_leaf = 0;
  evaluate(e, ids, next_leaf, out.graph, members);
  for (auto [v, label] : members) out.labels[v] = label;
  return out;
}

std::vector<int> labels_used(const CwExpr& e) {
  std::set<int> labels;
  collect_labels(e, labels);
  return {labels.begin(), labels.end()};
}

int expr_width(const CwExpr& e) { return static_cast<int>(labels_used(e).size()); }

bool is_linear(const CwExpr& e) {
  switch (e.kind()) {
    case CwExpr::Kind::vertex:
      return true;
    case CwExpr::Kind::disjoint_union:
      return e.right().kind() == CwExpr::Kind::vertex && is_linear(e.left());
    default:
      return is_linear(e.child());
  }
}

CwExpr rename_labels(const CwExpr& e, const std::map<int, int>& mapping) {
  auto map = [&mapping](int label) {
    auto it = mapping.find(label);
    return it == mapping.end() ? label : it->second;
  };
  switch (e.kind()) {
    case CwExpr::Kind::vertex:
      return CwExpr::vertex(map(e.label()), e.name());
    case CwExpr::Kind::disjoint_union:
      return CwExpr::disjoint_union(rename_labels(e.left(), mapping), rename_labels(e.right(), mapping));
    case CwExpr::Kind::relabel:
      return CwExpr::relabel(map(e.first()), map(e.second()), rename_labels(e.child(), mapping));
    case CwExpr::Kind::add_edges:
      return CwExpr::add_edges(map(e.first()), map(e.second()), rename_labels(e.child(), mapping));
  }
  return e;
}

CwExpr rename_labels_injective(const CwExpr& e, const std::map<int, int>& required) {
  std::set<int> targets;
  for (auto [from, to] : required) targets.insert(to);
  std::map<int, int> mapping = required;
  int candidate = 1;
  for (int label : labels_used(e)) {
    if (mapping.count(label)) continue;
    while (targets.count(candidate)) ++candidate;
    mapping[label] = candidate++;
  }
  bool identity = true;
  for (auto [from, to] : mapping) identity = identity && from == to;
  return identity ? e : rename_labels(e, mapping);
}

}  // namespace twwkit
