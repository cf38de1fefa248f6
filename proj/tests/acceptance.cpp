// Acceptance run: one PASS/FAIL line per criterion.
//
// Two criteria compare against printed threshold values that no faithful
// implementation reproduces (see tests/golden/published_divergences.json).
// They print FAIL; the exit status stays 0 only while each such failure is
// exactly the pinned divergence and nothing else.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ivnsoft/cli.hpp"
#include "ivnsoft/decision.hpp"
#include "ivnsoft/io.hpp"
#include "support/golden.hpp"
#include "support/property_laws.hpp"

namespace {

using namespace ivnsoft;
using ivnsoft::testing::Divergence;

// Pinned tolerances.
constexpr double kGoldenBudgetSeconds = 1.0;
constexpr double kPropertyBudgetSeconds = 30.0;
constexpr int kPrintedDigits = 2;
constexpr Rounding kPrintedRounding = Rounding::truncate;

using Rows = std::map<std::string, std::vector<std::string>>;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
  // Set when the failure is the analysed, unattainable one.
  bool known_unattainable = false;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string describe(const std::vector<Divergence>& ds) {
  std::string out;
  for (const auto& d : ds)
    out += (out.empty() ? "" : "; ") + d.parameter + "/" + d.object + " " + d.component + " printed " +
           d.published.to_string() + " computed " + d.computed.to_string();
  return out.empty() ? "none" : out;
}

std::size_t endpoints_off(const std::vector<Divergence>& ds) {
  std::size_t n = 0;
  for (const auto& d : ds) n += (d.published.lo() != d.computed.lo()) + (d.published.hi() != d.computed.hi());
  return n;
}

std::string describe(const Rows& rows) {
  std::string out = "{";
  for (const auto& [p, us] : rows) {
    out += (out.size() > 1 ? ", (" : "(") + p + ",{";
    for (std::size_t i = 0; i < us.size(); ++i) out += (i ? "," : "") + us[i];
    out += "})";
  }
  return out + "}";
}

// Independent level-set oracle: the six endpoint inequalities written out.
Rows oracle_level(const IvnSoftSet& s, const std::vector<IvnNumber>& cuts, ComparisonMode mode) {
  Rows rows;
  for (std::size_t p = 0; p < s.parameters().size(); ++p)
    for (std::size_t u = 0; u < s.universe().size(); ++u) {
      const IvnNumber& v = s.at(p, u);
      const IvnNumber& t = cuts[p];
      bool pass = t.truth.lo() <= v.truth.lo() && t.truth.hi() <= v.truth.hi();
      if (mode == ComparisonMode::dominance)
        pass = pass && v.indeterminacy.lo() <= t.indeterminacy.lo() && v.indeterminacy.hi() <= t.indeterminacy.hi() &&
               v.falsity.lo() <= t.falsity.lo() && v.falsity.hi() <= t.falsity.hi();
      else
        pass = pass && t.indeterminacy.lo() <= v.indeterminacy.lo() && t.indeterminacy.hi() <= v.indeterminacy.hi() &&
               t.falsity.lo() <= v.falsity.lo() && t.falsity.hi() <= v.falsity.hi();
      if (pass) rows[s.parameters()[p]].push_back(s.universe()[u]);
    }
  return rows;
}

// Independent avg oracle: endpoint sums over the universe.
std::vector<IvnNumber> oracle_avg(const IvnSoftSet& s) {
  std::vector<IvnNumber> cuts;
  const Scalar n(static_cast<std::int64_t>(s.universe().size()));
  for (std::size_t p = 0; p < s.parameters().size(); ++p) {
    Scalar e[6];
    for (const auto& c : s.row(p)) {
      e[0] += c.truth.lo(), e[1] += c.truth.hi();
      e[2] += c.indeterminacy.lo(), e[3] += c.indeterminacy.hi();
      e[4] += c.falsity.lo(), e[5] += c.falsity.hi();
    }
    cuts.push_back({Interval(e[0] / n, e[1] / n), Interval(e[2] / n, e[3] / n), Interval(e[4] / n, e[5] / n)});
  }
  return cuts;
}

Outcome golden_tables() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const IvnSoftSet k = testing::load_golden("two_house_K.json");
  const IvnSoftSet l = testing::load_golden("two_house_L.json");
  struct Case {
    const char* operation;
    const char* file;
    IvnSoftSet computed;
    std::vector<Divergence> allowed;
  };
  const std::vector<Case> cases{
      {"complement", "expected_L_complement.json", complement(l), {}},
      {"union", "expected_K_union_L.json", soft_union(k, l), {}},
      {"intersection", "expected_K_intersection_L.json", soft_intersection(k, l), {}},
      {"divide by 5", "expected_K_div5.json", scale(k, Scalar(5), ScaleKind::divide),
       testing::documented_divergences("divide_by_5")},
      {"truth favorite", "expected_K_truth_favorite.json", truth_favorite(k), {}},
      {"false favorite", "expected_K_false_favorite.json", false_favorite(k), {}},
  };
  std::size_t cells = 0;
  for (const auto& c : cases) {
    const auto found = testing::compare_cells(c.computed, testing::load_golden(c.file));
    cells += c.computed.cells().size();
    if (found != c.allowed) {
      o.pass = false;
      o.details.push_back(std::string(c.operation) + ": " + describe(found));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kGoldenBudgetSeconds) {
    o.pass = false;
    o.details.push_back("took " + std::to_string(elapsed) + " s");
  }
  std::ostringstream s;
  s << "6 operations, " << cells << " cells exact; " << cases[3].allowed.size()
    << " printed divide-by-5 cells differ from the formula, all documented; " << static_cast<int>(elapsed * 1000)
    << " ms";
  o.summary = s.str();
  return o;
}

Outcome two_house_avg() {
  Outcome o;
  const IvnSoftSet s = testing::load_golden("two_house_raw.json", Validation::lenient);
  const ThresholdSet t = avg_threshold(s);
  const auto oracle = oracle_avg(s);
  if (t.cuts != oracle) {
    o.pass = false;
    o.details.push_back("avg cuts disagree with the endpoint-sum oracle");
  }
  const auto printed = testing::compare_cuts(t, testing::load_printed_cuts("two_house_avg_printed.json"));
  const Rows level = level_soft_set(s, t, ComparisonMode::dominance).result.nonempty_rows();
  const Rows want{{"x5", {"u2"}}};
  const bool level_ok = level == want && oracle_level(s, oracle, ComparisonMode::dominance) == want;
  if (!level_ok) {
    o.pass = false;
    o.details.push_back("avg level set " + describe(level) + ", expected " + describe(want));
  }
  if (!printed.empty()) {
    o.pass = false;
    o.details.push_back("printed cut mismatch: " + describe(printed));
    // The printed x3 truth cut starts at 0.15 while its two cells start at
    // 0.2 and 0.4; no mean of those is 0.15.
    o.known_unattainable = level_ok && t.cuts == oracle && printed == testing::documented_divergences("avg_threshold");
  }
  o.summary = std::to_string(30 - endpoints_off(printed)) + "/30 printed cut endpoints equal the exact means; level set " +
              describe(level);
  return o;
}

Outcome constant_threshold_example() {
  Outcome o;
  const IvnSoftSet s = testing::load_golden("two_house_raw.json", Validation::lenient);
  const Interval a(Scalar::parse("0.3"), Scalar::parse("0.4"));
  const Interval b(Scalar::parse("0.3"), Scalar::parse("0.5"));
  const Interval g(Scalar::parse("0.1"), Scalar::parse("0.2"));
  const ThresholdSet t = constant_threshold(s.parameters(), a, b, g);
  const Rows geq = level_soft_set(s, t, ComparisonMode::all_geq).result.nonempty_rows();
  const Rows dom = level_soft_set(s, t, ComparisonMode::dominance).result.nonempty_rows();
  const Rows want_geq{{"x1", {"u1"}}, {"x4", {"u1", "u2"}}};
  if (geq != want_geq || oracle_level(s, t.cuts, ComparisonMode::all_geq) != want_geq) {
    o.pass = false;
    o.details.push_back("all-geq " + describe(geq));
  }
  if (!dom.empty() || !oracle_level(s, t.cuts, ComparisonMode::dominance).empty()) {
    o.pass = false;
    o.details.push_back("dominance " + describe(dom));
  }
  o.summary = "all-geq " + describe(geq) + "; dominance " + describe(dom) + " (10-cell oracle agrees)";
  return o;
}

Outcome six_house() {
  Outcome o;
  const IvnSoftSet s = testing::load_golden("six_house.json", Validation::lenient);
  const ThresholdSet exact = avg_threshold(s);
  const auto oracle = oracle_avg(s);

  // (a) printed cuts after 2-dp rounding.
  const auto printed = testing::compare_cuts(round_cuts(exact, kPrintedDigits, kPrintedRounding),
                                             testing::load_printed_cuts("six_house_avg_printed.json"));
  // (b) exact level set against the 30-cell oracle.
  const Rows level = level_soft_set(s, exact, ComparisonMode::dominance).result.nonempty_rows();
  const Rows want{{"x2", {"u3"}}, {"x3", {"u4"}}, {"x4", {"u6"}}};
  const bool level_ok = exact.cuts == oracle && level == want && oracle_level(s, oracle, ComparisonMode::dominance) == want;
  // (c) printed level set fed to choice values.
  const ChoiceValues printed_choice = choice_values(testing::printed_six_house_level_set());
  const bool printed_ok = printed_choice.count("u3") == 2 && printed_choice.tiers.front() == std::vector<std::string>{"u3"};
  // (d) the (x5,u3) cell: printed as 1, rejected by the exact cut.
  const bool x5u3_ok = testing::printed_six_house_level_set().contains(4, 2) &&
                       !dominates(exact.cut("x5"), s.at("x5", "u3"));

  if (!level_ok) o.details.push_back("exact level set " + describe(level) + ", expected " + describe(want));
  if (!printed_ok) o.details.push_back("printed level set does not select u3 with c3 = 2");
  if (!x5u3_ok) o.details.push_back("(x5,u3) divergence not reproduced");
  if (!printed.empty()) o.details.push_back("printed cut mismatch after truncation: " + describe(printed));
  o.pass = o.details.empty();

  // The printed x5 falsity cut [0.61,0.76] is 37/60 and 23/30 truncated,
  // which only the unrepaired inverted cell x5/u4 F [0.6,0.5] yields.
  const std::vector<Divergence> pinned{{"x5", "*", 'F', Interval(Scalar(61, 100), Scalar(76, 100)),
                                        Interval(Scalar(60, 100), Scalar(78, 100))}};
  o.known_unattainable = level_ok && printed_ok && x5u3_ok && printed == pinned;

  o.summary = std::to_string(30 - endpoints_off(printed)) + "/30 printed cut endpoints match after 2-dp truncation; exact level set " +
              describe(level) + "; printed level set gives c3 = " + std::to_string(printed_choice.count("u3")) +
              ", winner " + printed_choice.tiers.front().front() + "; (x5,u3) " + (x5u3_ok ? "diverges as documented" : "?");
  return o;
}

Outcome crisp_choice() {
  Outcome o;
  const ChoiceValues c = choice_values(testing::crisp_table());
  const std::map<std::string, int> want{{"u1", 4}, {"u2", 3}, {"u3", 2}, {"u4", 3}, {"u5", 3}, {"u6", 2}};
  std::string got;
  for (const auto& [u, k] : want) {
    got += (got.empty() ? "" : " ") + u + "=" + std::to_string(c.count(u));
    if (c.count(u) != k) o.pass = false;
  }
  o.summary = got;
  return o;
}

Outcome property_suites() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int instances = 0;
  for (const auto& law : testing::property_laws()) {
    const auto r = testing::run_law(law);
    instances += r.instances;
    if (r.counterexample || r.instances < testing::kPropertyInstances) {
      o.pass = false;
      o.details.push_back(law.name + ": " + r.counterexample.value_or("too few instances"));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kPropertyBudgetSeconds) {
    o.pass = false;
    o.details.push_back("took " + std::to_string(elapsed) + " s");
  }
  std::ostringstream s;
  s << testing::property_laws().size() << " laws x " << testing::kPropertyInstances << " instances (" << instances
    << " total), seed 0x" << std::hex << testing::kPropertySeed << std::dec << "; " << elapsed << " s";
  o.summary = s.str();
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string file = testing::golden_path("six_house.json").string();
  std::size_t bytes = 0;
  for (const char* format : {"table", "doc"}) {
    std::string outs[2];
    for (auto& out : outs) {
      std::ostringstream os, es;
      if (cli::run_cli({"decide", "--lenient", "--format", format, file}, os, es) != 0) {
        o.pass = false;
        o.details.push_back(es.str());
      }
      out = os.str();
    }
    if (outs[0] != outs[1] || outs[0].empty()) {
      o.pass = false;
      o.details.push_back(std::string(format) + " reports differ");
    }
    bytes += outs[0].size();
  }
  o.summary = "two decide runs per format byte-identical (" + std::to_string(bytes) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"golden-tables", golden_tables},
      {"two-house-avg-threshold", two_house_avg},
      {"constant-threshold", constant_threshold_example},
      {"six-house-decision", six_house},
      {"crisp-choice-values", crisp_choice},
      {"property-suites", property_suites},
      {"determinism", determinism},
  };
  int unexpected = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s%s\n", o.pass ? "PASS" : "FAIL", name, o.summary.c_str(),
                !o.pass && o.known_unattainable ? " [unattainable as printed]" : "");
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    if (!o.pass && !o.known_unattainable) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
