#include "twwkit/cli.hpp"

#include "twwkit/cwexpr.hpp"
#include "twwkit/errors.hpp"
#include "twwkit/homcount.hpp"
#include "twwkit/rankwidth.hpp"
#include "twwkit/transform.hpp"
#include "twwkit/trigraph.hpp"
#include "twwkit/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace twwkit {

namespace {

using Clock = std::chrono::steady_clock;

/// Ordered key=value lines; wall_time_ms is appended last.
class Report {
 public:
  explicit Report(std::string command) : start_(Clock::now()) { add("command", std::move(command)); }

  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream text;
    text << value;
    lines_.emplace_back(key, text.str());
  }

  void print(std::ostream& out) const {
    for (const auto& [key, value] : lines_) out << key << '=' << value << '\n';
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
    out << "wall_time_ms=" << elapsed.count() << '\n';
  }

 private:
  Clock::time_point start_;
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

/// A graph file, with its digest for the report.
struct LoadedGraph {
  Graph graph;
  std::string digest;
};

LoadedGraph load_graph(const std::string& path) {
  const std::string text = read_text(path);
  return {parse_graph(text), fnv1a_digest(text)};
}

struct BudgetFlags {
  std::uint64_t max_states = Budget{}.max_states;
  long long time_ms = 0;

  Budget budget() const {
    Budget out = Budget::from_environment();
    out.max_states = max_states;
    if (time_ms > 0) out.deadline = Clock::now() + std::chrono::milliseconds(time_ms);
    return out;
  }

  void attach(CLI::App* app) {
    app->add_option("--max-states", max_states, "State/enumeration budget")->capture_default_str();
    app->add_option("--time-ms", time_ms, "Time budget in milliseconds (default: TWWKIT_BUDGET_MS)");
  }
};

// ---------------------------------------------------------------- width

struct WidthArgs {
  std::string input;
  std::string param;
  bool exact = false;
  std::string certificate;
  std::string emit;
  int max_n = -1;
  BudgetFlags budget;
};

bool is_sequence_param(const std::string& p) { return p == "tww" || p == "ctww" || p == "ttww" || p == "tvtww"; }

void check_permutation(const std::vector<Vertex>& order, int n) {
  std::vector<char> seen(n, 0);
  if (static_cast<int>(order.size()) != n) throw InvalidCertificate("order does not list every vertex once");
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) throw InvalidCertificate("order does not list every vertex once");
    seen[v] = 1;
  }
}

CwExpr checked_expression(const Graph& g, const std::string& path, bool linear) {
  const CwExpr e = parse_expr(read_text(path));
  if (!(eval_expr(e).graph == g)) throw InvalidCertificate("expression does not evaluate to the input graph");
  if (linear && !is_linear(e)) throw InvalidCertificate("expression is not linear");
  return e;
}

int cmd_width(const WidthArgs& args, std::ostream& out) {
  Report report("width");
  const auto input = load_graph(args.input);
  const Graph& g = input.graph;
  report.add("input", args.input);
  report.add("input_digest", input.digest);
  report.add("n", g.order());
  report.add("m", g.size());
  report.add("param", args.param);

  if (!args.exact) {
    const std::string text = read_text(args.certificate);
    report.add("mode", "certificate");
    report.add("certificate", args.certificate);
    report.add("certificate_digest", fnv1a_digest(text));
    int value = 0;
    if (is_sequence_param(args.param)) {
      const auto seq = parse_sequence(text);
      validate_sequence(g, seq);
      value = sequence_width(g, seq, parse_width(args.param));
    } else if (args.param == "cw" || args.param == "lcw") {
      value = expr_width(checked_expression(g, args.certificate, args.param == "lcw"));
    } else if (args.param == "rw") {
      const auto t = parse_decomposition(text);
      validate_decomposition(g, t);
      value = decomposition_width(g, t);
    } else {
      const auto order = parse_order(text);
      check_permutation(order, g.order());
      value = g.order() < 2 ? 0 : decomposition_width(g, order_to_linear_decomposition(order));
    }
    report.add("value", value);
    report.print(out);
    return kExitOk;
  }

  report.add("mode", "exact");
  std::string certificate;
  if (is_sequence_param(args.param)) {
    ExactWidthLimits limits;
    limits.max_n = args.max_n;
    limits.budget = args.budget.budget();
    const auto result = exact_width(g, parse_width(args.param), limits);
    report.add("value", result.value);
    report.add("states", result.states_expanded);
    certificate = serialize_sequence(result.witness);
  } else if (args.param == "cw" || args.param == "lcw") {
    ExactCwLimits limits;
    limits.max_n = args.max_n;
    limits.budget = args.budget.budget();
    const int k_max = std::max(g.order(), 1);
    const auto result = args.param == "cw" ? exact_cw(g, k_max, limits) : exact_lcw(g, k_max, limits);
    report.add("value", result.value);
    report.add("states", result.states);
    certificate = serialize_expr(result.witness) + "\n";
  } else if (args.param == "rw") {
    ExactRankLimits limits;
    limits.max_n = args.max_n;
    limits.budget = args.budget.budget();
    const auto result = exact_rw(g, limits);
    report.add("value", result.value);
    report.add("states", result.trees);
    certificate = serialize_decomposition(result.witness) + "\n";
  } else {
    ExactRankLimits limits;
    limits.max_n = args.max_n;
    limits.budget = args.budget.budget();
    const auto result = exact_lrw(g, limits);
    report.add("value", result.value);
    certificate = serialize_order(result.order) + "\n";
  }
  if (!args.emit.empty()) {
    write_text(args.emit, certificate);
    report.add("certificate_out", args.emit);
    report.add("certificate_digest", fnv1a_digest(certificate));
  }
  report.print(out);
  return kExitOk;
}

// -------------------------------------------------------------- convert

struct ConvertArgs {
  std::string input;
  std::string from;
  std::string to;
  std::string certificate;
  std::string out;
  std::optional<int> rank;
};

int cmd_convert(const ConvertArgs& args, std::ostream& out) {
  Report report("convert");
  const auto input = load_graph(args.input);
  const Graph& g = input.graph;
  const std::string text = read_text(args.certificate);
  report.add("input", args.input);
  report.add("input_digest", input.digest);
  report.add("from", args.from);
  report.add("to", args.to);
  report.add("certificate", args.certificate);
  report.add("certificate_digest", fnv1a_digest(text));

  std::string produced;
  const std::string pair = args.from + "->" + args.to;
  if (args.from == "seq") {
    const auto seq = parse_sequence(text);
    validate_sequence(g, seq);
    CwExpr e = CwExpr::vertex(1);
    int input_width = 0;
    int bound = 0;
    if (args.to == "expr") {
      input_width = sequence_width(g, seq, Width::ctww);
      e = seq_to_expr(g, seq);
      bound = input_width + 1;
      report.add("input_ctww", input_width);
      report.add("bound", "width<=ctww+1");
    } else if (args.to == "linexpr") {
      input_width = sequence_width(g, seq, Width::tvtww);
      e = seq_to_linexpr(g, seq);
      bound = input_width + 1;
      report.add("input_tvtww", input_width);
      report.add("bound", "width<=tvtww+1");
    } else {
      throw InvalidArgument("unsupported conversion " + pair);
    }
    if (!(eval_expr(e).graph == g)) throw std::logic_error("converted expression does not evaluate to the graph");
    report.add("output_width", expr_width(e));
    report.add("output_linear", is_linear(e) ? "true" : "false");
    report.add("bound_value", bound);
    report.add("bound_holds", expr_width(e) <= bound ? "true" : "false");
    produced = serialize_expr(e) + "\n";
  } else if (args.from == "expr" || args.from == "linexpr") {
    const bool linear = args.from == "linexpr";
    const CwExpr e = checked_expression(g, args.certificate, linear);
    const int k = expr_width(e);
    report.add("input_width", k);
    if (args.to == "seq") {
      const auto seq = expr_to_seq(g, e);
      validate_sequence(g, seq);
      const int ctww = sequence_width(g, seq, Width::ctww);
      const int tvtww = sequence_width(g, seq, Width::tvtww);
      report.add("output_ctww", ctww);
      report.add("output_tvtww", tvtww);
      if (linear) {
        report.add("bound", "ctww<=k,tvtww<=k");
        report.add("bound_holds", ctww <= k && tvtww <= k ? "true" : "false");
      } else {
        report.add("bound", "ctww<=2k-1");
        report.add("bound_holds", ctww <= 2 * k - 1 ? "true" : "false");
      }
      produced = serialize_sequence(seq);
    } else if (args.to == "branch") {
      const auto t = expr_to_branch(e);
      validate_decomposition(g, t);
      const int width = decomposition_width(g, t);
      report.add("output_width", width);
      report.add("bound", "width<=k");
      report.add("bound_holds", width <= k ? "true" : "false");
      produced = serialize_decomposition(t) + "\n";
    } else {
      throw InvalidArgument("unsupported conversion " + pair);
    }
  } else if (args.from == "branch" && args.to == "seq") {
    const auto t = parse_decomposition(text);
    validate_decomposition(g, t);
    const int width = decomposition_width(g, t);
    const int r = args.rank.value_or(width);
    report.add("input_width", width);
    report.add("r", r);
    BranchContractionStats stats;
    const auto seq = branch_to_seq(g, t, r, &stats);
    validate_sequence(g, seq);
    const int ctww = sequence_width(g, seq, Width::ctww);
    const int bound = (2 << r) - 1;
    report.add("output_ctww", ctww);
    report.add("row_searches", stats.row_searches);
    report.add("free_merges", stats.free_merges);
    report.add("bound", "ctww<=2^(r+1)-1");
    report.add("bound_value", bound);
    report.add("bound_holds", ctww <= bound ? "true" : "false");
    produced = serialize_sequence(seq);
  } else {
    throw InvalidArgument("unsupported conversion " + pair);
  }
  if (!args.out.empty()) {
    write_text(args.out, produced);
    report.add("output", args.out);
  }
  report.add("output_digest", fnv1a_digest(produced));
  report.print(out);
  if (args.out.empty()) out << produced;
  return kExitOk;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  std::string graph;
  std::string target;
  std::string algo = "auto";
  std::string g_seq;
  std::string h_seq;
  bool stats = false;
  BudgetFlags budget;
};

HomCount power(std::uint64_t base, int exponent) {
  HomCount out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

/// Exact ctww witness of `g` when the search fits the budget.
std::optional<ExactWidthResult> try_exact(const Graph& g, const Budget& budget) {
  try {
    ExactWidthLimits limits;
    limits.budget = budget;
    return exact_width(g, Width::ctww, limits);
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

int cmd_count(const CountArgs& args, std::ostream& out) {
  Report report("count");
  const auto input = load_graph(args.graph);
  const auto target = load_graph(args.target);
  const Graph& g = input.graph;
  const Graph& h = target.graph;
  report.add("graph", args.graph);
  report.add("graph_digest", input.digest);
  report.add("template", args.target);
  report.add("template_digest", target.digest);

  std::optional<ContractionSequence> g_seq;
  std::optional<ContractionSequence> h_seq;
  if (!args.g_seq.empty()) {
    g_seq = parse_sequence(read_text(args.g_seq));
    validate_sequence(g, *g_seq);
  }
  if (!args.h_seq.empty()) {
    h_seq = parse_sequence(read_text(args.h_seq));
    validate_sequence(h, *h_seq);
  }
  const Budget budget = args.budget.budget();

  std::string algo = args.algo;
  if (algo == "auto") {
    // the input-side programme when its work estimate fits, then the
    // template side, then brute force
    algo = "brute";
    if (!g_seq && h.order() <= 64)
      if (auto exact = try_exact(g, budget)) g_seq = exact->witness;
    if (g_seq && h.order() <= 64 && g.order() > 0) {
      const int width = sequence_width(g, *g_seq, Width::ctww);
      if (power((std::uint64_t{1} << std::min(h.order(), 63)) - 1, width + 1) <= budget.max_states) algo = "dpg";
    }
    if (algo == "brute") {
      if (!h_seq)
        if (auto exact = try_exact(h, budget)) h_seq = exact->witness;
      if (h_seq && h.order() > 0) {
        const int width = sequence_width(h, *h_seq, Width::ctww);
        if (power(static_cast<std::uint64_t>(width + 2), g.order()) <= budget.max_states) algo = "dph";
      }
    }
  }

  CountStats stats;
  CountOptions options;
  options.budget = budget;
  options.stats = &stats;
  HomCount count;
  if (algo == "brute") {
    count = brute_count(g, h, options);
  } else if (algo == "dpg") {
    if (!g_seq) g_seq = exact_width(g, Width::ctww, {-1, budget}).witness;
    count = count_g_side(g, *g_seq, h, options);
    report.add("sequence_ctww", sequence_width(g, *g_seq, Width::ctww));
  } else {
    if (!h_seq) h_seq = exact_width(h, Width::ctww, {-1, budget}).witness;
    count = count_h_side(g, h, *h_seq, options);
    report.add("sequence_ctww", sequence_width(h, *h_seq, Width::ctww));
  }
  report.add("algo", algo);
  report.add("count", count.str());
  if (args.stats) {
    int largest = 0;
    HomCount worst_bound = 0;
    for (const auto& step : stats.merges) {
      largest = std::max(largest, step.component_size);
      worst_bound = std::max(worst_bound, step.bound);
    }
    report.add("merges", stats.merges.size());
    report.add("max_component", largest);
    report.add("enumerated_total", stats.total_enumerated.str());
    report.add("max_merge_bound", worst_bound.str());
    report.add("peak_table_entries", stats.peak_table_entries);
    report.add("peak_table_bytes", stats.peak_table_bytes);
  }
  report.print(out);
  return kExitOk;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 6;
  std::uint64_t seed = 1;
  std::string artifacts = "verify-failures";
};

void dump(const CheckReport& check, const std::string& dir, Report& report) {
  int index = 0;
  for (const auto& violation : check.violations) {
    const auto folder = std::filesystem::path(dir) / check.name / std::to_string(index++);
    std::filesystem::create_directories(folder);
    write_text((folder / "violation.txt").string(), violation.instance + "\n" + violation.message + "\n");
    for (const auto& [name, content] : violation.artifacts) write_text((folder / name).string(), content);
  }
  report.add("check." + check.name + ".artifacts", (std::filesystem::path(dir) / check.name).string());
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  Report report("verify");
  report.add("suite", args.suite);
  report.add("max_n", args.max_n);
  report.add("seed", args.seed);

  std::vector<CheckReport> checks;
  const bool all = args.suite == "all";
  if (all || args.suite == "bounds") {
    CorpusOptions corpus;
    corpus.max_n = args.max_n;
    corpus.seed = args.seed;
    const auto graphs = graph_corpus(corpus);
    checks.push_back(check_clique_width_bounds(graphs));
    checks.push_back(check_linear_bounds(graphs));
    checks.push_back(check_rank_width_bounds(graphs));
    checks.push_back(check_structural_claims(graphs, args.seed));
  }
  if (all || args.suite == "oracle") {
    const auto input_side = pair_corpus(args.max_n, 4, 400, args.seed);
    const auto template_side = pair_corpus(std::min(args.max_n, 5), 4, 400, args.seed + 1);
    checks.push_back(check_oracle_g_side(input_side));
    checks.push_back(check_oracle_h_side(template_side));
    checks.push_back(check_complexity_accounting(
        std::vector<GraphPair>(template_side.end() - std::min<std::ptrdiff_t>(20, template_side.size()),
                               template_side.end())));
    checks.push_back(check_big_integer());
  }
  if (all || args.suite == "golden") {
    checks.push_back(check_golden(builtin_golden()));
    checks.push_back(check_point_values(args.seed));
  }

  bool passed = true;
  for (const auto& check : checks) {
    report.add("check." + check.name, check.passed() ? "pass" : "fail");
    report.add("check." + check.name + ".count", check.checks);
    if (!check.passed()) {
      passed = false;
      report.add("check." + check.name + ".first", check.violations.front().instance + ": " +
                                                       check.violations.front().message);
      dump(check, args.artifacts, report);
    }
  }
  report.add("result", passed ? "pass" : "fail");
  report.print(out);
  return passed ? kExitOk : kExitVerify;
}

// ------------------------------------------------------------------ gen

struct GenArgs {
  std::string kind;
  GenParams params;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  const Graph g = generate(parse_graph_kind(args.kind), args.params, args.seed);
  const std::string text = serialize_graph(g);
  if (args.out.empty()) {
    out << "# kind=" << args.kind << " seed=" << args.seed << '\n' << text;
    return kExitOk;
  }
  write_text(args.out, text);
  Report report("gen");
  report.add("kind", args.kind);
  report.add("seed", args.seed);
  report.add("n", g.order());
  report.add("m", g.size());
  report.add("output", args.out);
  report.add("output_digest", fnv1a_digest(text));
  report.print(out);
  return kExitOk;
}

}  // namespace

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char text[17];
  std::snprintf(text, sizeof text, "%016llx", static_cast<unsigned long long>(hash));
  return text;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contraction sequences, width certificates and homomorphism counts", "twwkit"};
  app.require_subcommand(1);

  WidthArgs width;
  auto* width_cmd = app.add_subcommand("width", "Compute or check a width parameter");
  width_cmd->add_option("--input", width.input, "Graph file")->required();
  width_cmd->add_option("--param", width.param, "Parameter")
      ->required()
      ->check(CLI::IsMember({"tww", "ctww", "ttww", "tvtww", "cw", "lcw", "rw", "lrw"}));
  auto* exact_flag = width_cmd->add_flag("--exact", width.exact, "Exhaustive search");
  auto* cert_opt = width_cmd->add_option("--certificate", width.certificate, "Certificate file to evaluate");
  exact_flag->excludes(cert_opt);
  width_cmd->add_option("--emit-certificate", width.emit, "Write the optimal witness here")->needs(exact_flag);
  width_cmd->add_option("--max-n", width.max_n, "Largest graph the exact search accepts");
  width.budget.attach(width_cmd);

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between width certificates");
  const auto kinds = CLI::IsMember({"seq", "expr", "linexpr", "branch"});
  convert_cmd->add_option("--input", convert.input, "Graph file")->required();
  convert_cmd->add_option("--from", convert.from, "Input certificate kind")->required()->check(kinds);
  convert_cmd->add_option("--to", convert.to, "Output certificate kind")->required()->check(kinds);
  convert_cmd->add_option("--certificate", convert.certificate, "Input certificate file")->required();
  convert_cmd->add_option("--out", convert.out, "Output certificate file (stdout when absent)");
  convert_cmd->add_option("--r", convert.rank, "Width bound of the branch decomposition");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count homomorphisms into a template");
  count_cmd->add_option("--graph", count.graph, "Input graph file")->required();
  count_cmd->add_option("--template", count.target, "Template graph file")->required();
  count_cmd->add_option("--algo", count.algo, "auto, brute, dpg or dph")
      ->check(CLI::IsMember({"auto", "brute", "dpg", "dph"}))
      ->capture_default_str();
  count_cmd->add_option("--g-seq", count.g_seq, "Contraction sequence of the input graph");
  count_cmd->add_option("--h-seq", count.h_seq, "Contraction sequence of the template");
  count_cmd->add_flag("--stats", count.stats, "Report enumeration counters");
  count.budget.attach(count_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", verify.suite, "bounds, oracle, golden or all")
      ->check(CLI::IsMember({"bounds", "oracle", "golden", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify.max_n, "Largest corpus graph")
      ->check(CLI::Range(1, 7))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Corpus seed")->capture_default_str();
  verify_cmd->add_option("--artifacts", verify.artifacts, "Directory for failing instances")->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("--kind", gen.kind, "Graph kind")
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "complete", "complete_bipartite", "empty", "random", "cograph",
                             "distance_hereditary", "grid"}));
  gen_cmd->add_option("--n", gen.params.n, "Vertex count");
  gen_cmd->add_option("--p", gen.params.p, "Edge probability (random)");
  gen_cmd->add_option("--a", gen.params.a, "First side (complete_bipartite)");
  gen_cmd->add_option("--b", gen.params.b, "Second side (complete_bipartite)");
  gen_cmd->add_option("--rows", gen.params.rows, "Rows (grid)");
  gen_cmd->add_option("--cols", gen.params.cols, "Columns (grid)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (stdout when absent)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (width_cmd->parsed() && !width.exact && width.certificate.empty()) {
    err << "width: give exactly one of --exact or --certificate\n";
    return kExitUsage;
  }

  try {
    if (width_cmd->parsed()) return cmd_width(width, out);
    if (convert_cmd->parsed()) return cmd_convert(convert, out);
    if (count_cmd->parsed()) return cmd_count(count, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    return cmd_gen(gen, out);
  } catch (const InvalidCertificate& e) {
    err << "invalid certificate: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const BudgetExceeded& e) {
    out << "status=budget_exceeded\n";
    if (e.lower_bound()) out << "lower_bound=" << *e.lower_bound() << '\n';
    if (e.upper_bound()) out << "upper_bound=" << *e.upper_bound() << '\n';
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace twwkit
