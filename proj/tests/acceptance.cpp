// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every comparison is exact; the corpora and seeds are pinned below.

#include "twwkit/homcount.hpp"
#include "twwkit/verify.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace twwkit;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kOraclePairs = 400;       // at least 200 required
constexpr int kAccountingPairs = 20;
constexpr int kBoundsMaxN = 6;          // every labelled graph up to here
constexpr int kRankMaxN = 7;

const std::string kFixtures = TWWKIT_FIXTURES;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<NamedGraph> bounds_corpus(int max_n) {
  CorpusOptions options;
  options.max_n = max_n;
  options.seed = kSeed;
  options.exhaustive_max_n = kBoundsMaxN;
  return graph_corpus(options);
}

struct Criterion {
  int number;
  std::string title;
  std::function<CheckReport()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "input-side count equals brute force (|V_G|<=6, |V_H|<=4)",
       [] { return check_oracle_g_side(pair_corpus(6, 4, kOraclePairs, kSeed)); }},
      {2, "template-side count equals brute force (|V_G|<=5, |V_H|<=4)",
       [] { return check_oracle_h_side(pair_corpus(5, 4, kOraclePairs, kSeed + 1)); }},
      {3, "cw <= ctww+1 <= 2cw and conversion widths, n<=6",
       [] { return check_clique_width_bounds(bounds_corpus(kBoundsMaxN)); }},
      {4, "lcw-1 <= tvtww <= lcw and tvtww <= 2ttww <= tvtww(tvtww+1), n<=6",
       [] { return check_linear_bounds(bounds_corpus(kBoundsMaxN)); }},
      {5, "rw <= ctww <= 2^(rw+1)-1 and branch_to_seq bound, n<=7",
       [] { return check_rank_width_bounds(bounds_corpus(kRankMaxN)); }},
      {6, "point values: C7, cographs, distance-hereditary graphs", [] { return check_point_values(kSeed); }},
      {7, "7-cycle golden trigraphs, tww 2 and ctww 3",
       [] {
         GoldenFixture fixture;
         fixture.graph = read_graph_file(kFixtures + "/c7.gr");
         fixture.sequence = read_sequence_file(kFixtures + "/c7_star.cs");
         fixture.trigraphs = slurp(kFixtures + "/c7_star_trigraphs.txt");
         fixture.tww = 2;
         fixture.ctww = 3;
         return check_golden(fixture);
       }},
      {8, "per-merge enumeration counts",
       [] { return check_complexity_accounting(pair_corpus(5, 4, kAccountingPairs, kSeed + 2)); }},
      {9, "label bounds of produced expressions, identical-row search",
       [] { return check_structural_claims(bounds_corpus(kBoundsMaxN), kSeed); }},
      {10, "6^25 homomorphisms counted exactly", [] {
         auto report = check_big_integer();
         GenParams six;
         six.n = 6;
         std::cout << "  count = " << brute_count(Graph(25), generate(GraphKind::complete, six, 0)) << '\n';
         return report;
       }},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    std::string detail;
    try {
      const CheckReport report = criterion.run();
      passed = report.passed();
      detail = std::to_string(report.checks) + " checks";
      if (!passed) {
        detail += ", " + std::to_string(report.violations.size()) + "+ violations";
        for (const auto& v : report.violations) std::cout << "  violation " << v.instance << ": " << v.message << '\n';
      }
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s: %s (%s, %.1f s)\n", criterion.number, passed ? "PASS" : "FAIL",
                criterion.title.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    failures += passed ? 0 : 1;
  }
  std::printf("%s: %d of %zu criteria passed\n", failures == 0 ? "PASS" : "FAIL",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
