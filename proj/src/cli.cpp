#include "ivnsoft/cli.hpp"

#include "ivnsoft/decision.hpp"
#include "ivnsoft/errors.hpp"
#include "ivnsoft/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace ivnsoft::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Interval parse_bounds(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(flag) + " expects lo,hi");
  try {
    return Interval(Scalar::parse(text.substr(0, comma)), Scalar::parse(text.substr(comma + 1)));
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

struct Common {
  bool lenient = false;
  std::string format = "table";
  int digits = 2;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--lenient", lenient, "Repair out-of-range or inverted intervals instead of rejecting them");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "doc"}));
    cmd->add_option("--digits", digits, "Decimals shown in tables")->check(CLI::Range(0, 12));
  }
  Validation validation() const { return lenient ? Validation::lenient : Validation::strict; }
  bool doc() const { return format == "doc"; }
};

struct RuleOptions {
  std::string rule;
  std::string mode = "dominance";
  std::string alpha;
  std::string beta;
  std::string gamma;
  std::string threshold_file;
  std::string round = "none";

  void attach(CLI::App* cmd) {
    cmd->add_option("--rule", rule, "Threshold rule")->check(CLI::IsMember({"avg", "Mmm", "mmm", "MMM"}));
    cmd->add_option("--mode", mode, "Comparison mode")->check(CLI::IsMember({"dominance", "all-geq"}));
    cmd->add_option("--alpha", alpha, "Constant truth cut lo,hi");
    cmd->add_option("--beta", beta, "Constant indeterminacy cut lo,hi");
    cmd->add_option("--gamma", gamma, "Constant falsity cut lo,hi");
    cmd->add_option("--threshold", threshold_file, "Explicit threshold document");
    cmd->add_option("--round", round, "Truncate cut endpoints to N decimals before comparing (none|N)");
  }

  DecisionRule resolve() const {
    const ComparisonMode cmp = mode == "all-geq" ? ComparisonMode::all_geq : ComparisonMode::dominance;
    const bool constant = !alpha.empty() || !beta.empty() || !gamma.empty();
    const int sources = (rule.empty() ? 0 : 1) + (constant ? 1 : 0) + (threshold_file.empty() ? 0 : 1);
    if (sources > 1) throw UsageError("choose one of --rule, --alpha/--beta/--gamma, --threshold");

    DecisionRule out = DecisionRule::of(RuleKind::avg, cmp);
    if (constant) {
      if (alpha.empty() || beta.empty() || gamma.empty())
        throw UsageError("--alpha, --beta and --gamma must be given together");
      out = DecisionRule::constant_cut(
          {parse_bounds(alpha, "--alpha"), parse_bounds(beta, "--beta"), parse_bounds(gamma, "--gamma")}, cmp);
    } else if (!threshold_file.empty()) {
      out = DecisionRule::explicit_cut(io::parse_threshold(read_file(threshold_file)), cmp);
    } else if (rule == "Mmm") {
      out.kind = RuleKind::max_min_min;
    } else if (rule == "mmm") {
      out.kind = RuleKind::min_min_min;
    } else if (rule == "MMM") {
      out.kind = RuleKind::max_max_max;
    }

    if (round != "none") {
      try {
        std::size_t used = 0;
        const int n = std::stoi(round, &used);
        if (used != round.size() || n < 0 || n > 12) throw std::invalid_argument(round);
        out.round_digits = n;
      } catch (const std::logic_error&) {
        throw UsageError("--round expects none or a number of decimals in [0, 12]");
      }
    }
    return out;
  }
};

int cmd_validate(const std::string& file, const Common& common, std::ostream& out) {
  const std::string text = read_file(file);
  const auto issues = io::check_dataset(text, common.validation());
  if (!issues.empty()) {
    for (const auto& issue : issues) out << "error: " << (issue.where.empty() ? "" : issue.where + ": ") << issue.message << '\n';
    out << issues.size() << " problem(s) in " << file << '\n';
    return kExitValidation;
  }
  const IvnSoftSet s = io::parse_dataset(text, common.validation());
  for (const auto& r : s.repairs())
    out << "repaired: " << r.parameter << "/" << r.object << " " << r.component << ": " << r.message << '\n';
  out << "ok: " << s.parameters().size() << " parameters x " << s.universe().size() << " objects\n";
  return kExitOk;
}

void print_set(const IvnSoftSet& s, const Common& common, std::ostream& out) {
  if (common.doc())
    out << io::serialize_dataset(s);
  else
    out << io::render_ivn_table(s, common.digits);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval-valued neutrosophic soft sets: algebra, level soft sets and decisions", "ivnsoft"};
  app.require_subcommand(1, 1);

  Common common;
  RuleOptions rule_opts;
  std::vector<std::string> files;
  std::string operation;
  std::string threshold_kind;
  std::string scalar_text;
  std::string scale_kind = "multiply";
  std::string combiner = "and";

  auto* validate = app.add_subcommand("validate", "Check a dataset; exit 1 listing every invalid cell");
  validate->add_option("file", files, "Dataset")->required()->expected(1);
  common.attach(validate);

  auto* show = app.add_subcommand("show", "Print a dataset as a table or canonical document");
  show->add_option("file", files, "Dataset")->required()->expected(1);
  common.attach(show);

  auto* op = app.add_subcommand("op", "Apply a soft-set operation");
  op->add_option("operation", operation, "Operation")
      ->required()
      ->check(CLI::IsMember({"complement", "union", "intersection", "difference", "add", "scale", "truth-fav",
                             "false-fav", "and", "or"}));
  op->add_option("files", files, "Dataset(s)")->required()->expected(1, 2);
  op->add_option("--scalar", scalar_text, "Positive scalar for scale");
  op->add_option("--kind", scale_kind, "Scale kind")->check(CLI::IsMember({"multiply", "divide"}));
  common.attach(op);

  auto* threshold = app.add_subcommand("threshold", "Compute a threshold set");
  threshold->add_option("kind", threshold_kind, "Threshold kind")
      ->required()
      ->check(CLI::IsMember({"avg", "Mmm", "mmm", "MMM"}));
  threshold->add_option("file", files, "Dataset")->required()->expected(1);
  threshold->add_option("--round", rule_opts.round, "Truncate cut endpoints to N decimals (none|N)");
  common.attach(threshold);

  auto* level = app.add_subcommand("level", "Compute a level soft set");
  level->add_option("file", files, "Dataset")->required()->expected(1);
  rule_opts.attach(level);
  common.attach(level);

  auto* decide_cmd = app.add_subcommand("decide", "Run the level-soft-set decision procedure");
  decide_cmd->add_option("file", files, "Dataset")->required()->expected(1);
  rule_opts.attach(decide_cmd);
  common.attach(decide_cmd);

  auto* group = app.add_subcommand("group-decide", "Decide over the AND/OR product of two datasets");
  group->add_option("files", files, "Two datasets")->required()->expected(2);
  group->add_option("--combiner", combiner, "Product")->check(CLI::IsMember({"and", "or"}));
  rule_opts.attach(group);
  common.attach(group);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(files.at(0), common, out);

    auto load = [&](const std::string& path) { return io::parse_dataset(read_file(path), common.validation()); };

    if (show->parsed()) {
      print_set(load(files.at(0)), common, out);
    } else if (op->parsed()) {
      const bool binary = operation == "union" || operation == "intersection" || operation == "difference" ||
                          operation == "add" || operation == "and" || operation == "or";
      if (files.size() != (binary ? 2u : 1u))
        throw UsageError("op " + operation + " takes " + (binary ? "two datasets" : "one dataset"));
      const IvnSoftSet a = load(files[0]);
      std::optional<IvnSoftSet> b;
      if (binary) b = load(files[1]);

      if (operation == "complement") print_set(complement(a), common, out);
      else if (operation == "union") print_set(soft_union(a, *b), common, out);
      else if (operation == "intersection") print_set(soft_intersection(a, *b), common, out);
      else if (operation == "difference") print_set(difference(a, *b), common, out);
      else if (operation == "add") print_set(add(a, *b), common, out);
      else if (operation == "truth-fav") print_set(truth_favorite(a), common, out);
      else if (operation == "false-fav") print_set(false_favorite(a), common, out);
      else if (operation == "and") print_set(and_product(a, *b).set, common, out);
      else if (operation == "or") print_set(or_product(a, *b).set, common, out);
      else {
        if (scalar_text.empty()) throw UsageError("op scale requires --scalar");
        Scalar c;
        try {
          c = Scalar::parse(scalar_text);
        } catch (const Error& e) {
          throw UsageError(std::string("--scalar: ") + e.what());
        }
        print_set(scale(a, c, scale_kind == "divide" ? ScaleKind::divide : ScaleKind::multiply), common, out);
      }
    } else if (threshold->parsed()) {
      const IvnSoftSet s = load(files.at(0));
      RuleOptions opts = rule_opts;
      opts.rule = threshold_kind;
      ThresholdSet t = resolve_threshold(s, opts.resolve());
      if (common.doc())
        out << io::threshold_document(t).dump(2) << '\n';
      else
        out << io::render_threshold(t, common.digits);
    } else if (level->parsed()) {
      const IvnSoftSet s = load(files.at(0));
      const DecisionRule rule = rule_opts.resolve();
      const LevelSoftSet result = level_soft_set(s, resolve_threshold(s, rule), rule.mode);
      if (common.doc()) {
        nlohmann::ordered_json doc;
        doc["rule"] = rule.label();
        doc["mode"] = std::string(to_string(rule.mode));
        doc["threshold"] = io::threshold_document(result.threshold);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t p = 0; p < result.result.parameters().size(); ++p)
          rows.push_back({{"parameter", result.result.parameters()[p]}, {"objects", result.result.subset(p)}});
        doc["level_soft_set"] = std::move(rows);
        doc["table"] = render_table(result.result);
        doc["source_digest"] = result.source_digest;
        out << doc.dump(2) << '\n';
      } else {
        out << "mode: " << to_string(rule.mode) << '\n'
            << io::render_threshold(result.threshold, common.digits) << "\nlevel soft set:\n"
            << render_table(result.result);
      }
    } else if (decide_cmd->parsed() || group->parsed()) {
      const DecisionRule rule = rule_opts.resolve();
      std::vector<IvnSoftSet> inputs;
      for (const auto& f : files) inputs.push_back(load(f));
      const DecisionReport report =
          group->parsed() ? group_decide(inputs[0], inputs[1],
                                         combiner == "or" ? Combiner::disjunction : Combiner::conjunction, rule)
                          : decide(inputs[0], rule);
      if (common.doc()) {
        std::vector<const IvnSoftSet*> echo;
        for (const auto& s : inputs) echo.push_back(&s);
        out << io::report_document(report, echo, common.digits).dump(2) << '\n';
      } else {
        out << io::render_report(report, common.digits);
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace ivnsoft::cli
