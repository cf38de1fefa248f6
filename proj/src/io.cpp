#include "ivnsoft/io.hpp"

#include "ivnsoft/errors.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <sstream>

namespace ivnsoft::io {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::array<char, 3> kComponents{'T', 'I', 'F'};

Interval IvnNumber::*component_member(char c) {
  switch (c) {
    case 'T': return &IvnNumber::truth;
    case 'I': return &IvnNumber::indeterminacy;
    default: return &IvnNumber::falsity;
  }
}

std::string degree_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_float()) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v.get<double>());
    if (ec == std::errc()) return std::string(buf.data(), end);
  }
  throw SchemaError("degree must be decimal text or a number, got " + v.dump());
}

DatasetIssue schema_issue(std::string where, std::string message) {
  DatasetIssue issue;
  issue.where = std::move(where);
  issue.message = std::move(message);
  return issue;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> identifier_list(const json& doc, const char* key, std::vector<DatasetIssue>& issues) {
  std::vector<std::string> out;
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    issues.push_back(schema_issue("", std::string("missing array \"") + key + "\""));
    return out;
  }
  for (const auto& v : doc.at(key)) {
    if (!v.is_string()) {
      issues.push_back(schema_issue("", std::string("\"") + key + "\" must hold strings"));
      continue;
    }
    const auto id = v.get<std::string>();
    if (std::find(out.begin(), out.end(), id) != out.end())
      issues.push_back(schema_issue("", std::string("duplicate identifier \"") + id + "\" in " + key));
    else
      out.push_back(id);
  }
  if (out.empty()) issues.push_back(schema_issue("", std::string("\"") + key + "\" is empty"));
  return out;
}

struct CellReader {
  Validation mode;
  std::vector<DatasetIssue>& issues;
  std::vector<RepairNote>& repairs;

  // Reads one {"T": [...], "I": [...], "F": [...]} object.
  std::optional<IvnNumber> read(const json& cell, const std::string& param, const std::string& object) {
    const std::string where = param + "/" + object;
    if (!cell.is_object()) {
      issues.push_back(schema_issue(where, "cell must be an object with T, I, F"));
      return std::nullopt;
    }
    for (const auto& [key, _] : cell.items())
      if (key != "T" && key != "I" && key != "F")
        issues.push_back(schema_issue(where, "unknown component \"" + key + "\""));

    IvnNumber out;
    bool ok = true;
    for (char c : kComponents) {
      auto iv = read_interval(cell, c, param, object);
      if (iv)
        out.*component_member(c) = *iv;
      else
        ok = false;
    }
    return ok ? std::optional<IvnNumber>(out) : std::nullopt;
  }

  std::optional<Interval> read_interval(const json& cell, char c, const std::string& param,
                                        const std::string& object) {
    const std::string where = param + "/" + object + " " + c;
    const std::string key(1, c);
    if (!cell.contains(key) || !cell.at(key).is_array() || cell.at(key).size() != 2) {
      issues.push_back(schema_issue(where, "component must be a [lo, hi] pair"));
      return std::nullopt;
    }
    std::string lo_text;
    std::string hi_text;
    Scalar lo;
    Scalar hi;
    try {
      lo_text = degree_text(cell.at(key)[0]);
      hi_text = degree_text(cell.at(key)[1]);
      lo = Scalar::parse(lo_text);
      hi = Scalar::parse(hi_text);
    } catch (const SchemaError& e) {
      issues.push_back(schema_issue(where, e.what()));
      return std::nullopt;
    }
    if (mode == Validation::strict) {
      try {
        return Interval(lo, hi);
      } catch (const InvalidInterval&) {
        issues.push_back(
            {DatasetIssue::Kind::interval, where, InvalidInterval(lo_text, hi_text).what(), lo_text, hi_text});
        return std::nullopt;
      }
    }
    auto repaired = make_interval(lo, hi, Validation::lenient);
    for (auto& note : repaired.notes) repairs.push_back({param, object, c, std::move(note)});
    return repaired.value;
  }
};

struct Loaded {
  std::vector<DatasetIssue> issues;
  std::optional<IvnSoftSet> set;
};

Loaded load(std::string_view text, Validation mode) {
  Loaded out;
  json doc;
  try {
    doc = parse_json(text);
  } catch (const SchemaError& e) {
    out.issues.push_back(schema_issue("", e.what()));
    return out;
  }
  if (!doc.is_object()) {
    out.issues.push_back(schema_issue("", "document must be a JSON object"));
    return out;
  }
  auto universe = identifier_list(doc, "universe", out.issues);
  auto parameters = identifier_list(doc, "parameters", out.issues);
  if (!doc.contains("values") || !doc.at("values").is_object()) {
    out.issues.push_back(schema_issue("", "missing object \"values\""));
    return out;
  }
  if (!out.issues.empty()) return out;

  const json& values = doc.at("values");
  for (const auto& [param, row] : values.items()) {
    if (std::find(parameters.begin(), parameters.end(), param) == parameters.end()) {
      out.issues.push_back(schema_issue(param, "unknown parameter \"" + param + "\" in values"));
      continue;
    }
    if (!row.is_object()) continue;  // reported below as missing cells
    for (const auto& [object, _] : row.items())
      if (std::find(universe.begin(), universe.end(), object) == universe.end())
        out.issues.push_back(
            schema_issue(param + "/" + object, "unknown object \"" + object + "\" in values"));
  }

  std::vector<RepairNote> repairs;
  CellReader reader{mode, out.issues, repairs};
  std::vector<IvnNumber> cells;
  cells.reserve(universe.size() * parameters.size());
  for (const auto& p : parameters) {
    const bool has_row = values.contains(p) && values.at(p).is_object();
    for (const auto& u : universe) {
      if (!has_row || !values.at(p).contains(u)) {
        out.issues.push_back(schema_issue(p + "/" + u, "missing cell " + p + "/" + u));
        continue;
      }
      if (auto cell = reader.read(values.at(p).at(u), p, u)) cells.push_back(*cell);
    }
  }
  if (out.issues.empty()) out.set.emplace(std::move(universe), std::move(parameters), std::move(cells), std::move(repairs));
  return out;
}

ordered_json interval_json(const Interval& x) { return ordered_json::array({x.lo().to_string(), x.hi().to_string()}); }

ordered_json number_json(const IvnNumber& x) {
  return {{"T", interval_json(x.truth)}, {"I", interval_json(x.indeterminacy)}, {"F", interval_json(x.falsity)}};
}

std::string pad_right(const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); }

std::string grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], r[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cols) {
    std::string text;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) text += "  ";
      text += c + 1 == cols.size() ? cols[c] : pad_right(cols[c], widths[c]);
    }
    os << text << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

}  // namespace

std::vector<DatasetIssue> check_dataset(std::string_view text, Validation mode) { return load(text, mode).issues; }

IvnSoftSet parse_dataset(std::string_view text, Validation mode) {
  Loaded loaded = load(text, mode);
  if (!loaded.issues.empty()) {
    const auto& first = loaded.issues.front();
    if (first.kind == DatasetIssue::Kind::interval) throw InvalidInterval(first.lo, first.hi, first.where);
    throw SchemaError(first.where.empty() ? first.message : first.where + ": " + first.message);
  }
  return std::move(*loaded.set);
}

std::string serialize_dataset(const IvnSoftSet& s) {
  auto q = [](const std::string& v) { return json(v).dump(); };
  auto list = [&](const std::vector<std::string>& ids) {
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + q(ids[i]);
    return out + "]";
  };
  auto pair = [&](const Interval& x) { return "[" + q(x.lo().to_string()) + ", " + q(x.hi().to_string()) + "]"; };

  std::ostringstream os;
  os << "{\n  \"universe\": " << list(s.universe()) << ",\n  \"parameters\": " << list(s.parameters())
     << ",\n  \"values\": {\n";
  for (std::size_t p = 0; p < s.parameters().size(); ++p) {
    os << "    " << q(s.parameters()[p]) << ": {\n";
    for (std::size_t u = 0; u < s.universe().size(); ++u) {
      const auto& c = s.at(p, u);
      os << "      " << q(s.universe()[u]) << ": {\"T\": " << pair(c.truth) << ", \"I\": " << pair(c.indeterminacy)
         << ", \"F\": " << pair(c.falsity) << "}" << (u + 1 < s.universe().size() ? "," : "") << "\n";
    }
    os << "    }" << (p + 1 < s.parameters().size() ? "," : "") << "\n";
  }
  os << "  }\n}\n";
  return os.str();
}

ordered_json dataset_document(const IvnSoftSet& s) {
  ordered_json values = ordered_json::object();
  for (std::size_t p = 0; p < s.parameters().size(); ++p) {
    ordered_json row = ordered_json::object();
    for (std::size_t u = 0; u < s.universe().size(); ++u) row[s.universe()[u]] = number_json(s.at(p, u));
    values[s.parameters()[p]] = std::move(row);
  }
  return {{"universe", s.universe()}, {"parameters", s.parameters()}, {"values", std::move(values)}};
}

ordered_json threshold_document(const ThresholdSet& t) {
  ordered_json cuts = ordered_json::object();
  for (std::size_t p = 0; p < t.parameters.size(); ++p) cuts[t.parameters[p]] = number_json(t.cuts[p]);
  ordered_json doc = {{"parameters", t.parameters}, {"origin", std::string(to_string(t.origin))}};
  if (t.extrapolated()) doc["extrapolated"] = true;
  if (t.rounded_digits) doc["rounded_digits"] = *t.rounded_digits;
  doc["cuts"] = std::move(cuts);
  return doc;
}

ThresholdSet parse_threshold(std::string_view text) {
  const json doc = parse_json(text);
  std::vector<DatasetIssue> issues;
  auto parameters = identifier_list(doc, "parameters", issues);
  if (!doc.contains("cuts") || !doc.at("cuts").is_object())
    issues.push_back(schema_issue("", "missing object \"cuts\""));
  if (!issues.empty()) throw SchemaError("threshold document: " + issues.front().message);

  std::vector<RepairNote> unused;
  CellReader reader{Validation::strict, issues, unused};
  std::vector<IvnNumber> cuts;
  for (const auto& p : parameters) {
    if (!doc.at("cuts").contains(p)) throw SchemaError("threshold document: missing cut for parameter " + p);
    auto cell = reader.read(doc.at("cuts").at(p), p, "cut");
    if (!cell) break;
    cuts.push_back(*cell);
  }
  if (!issues.empty()) {
    const auto& first = issues.front();
    if (first.kind == DatasetIssue::Kind::interval) throw InvalidInterval(first.lo, first.hi, first.where);
    throw SchemaError("threshold document: " + first.where + ": " + first.message);
  }
  return explicit_threshold(std::move(parameters), std::move(cuts));
}

ordered_json report_document(const DecisionReport& report, const std::vector<const IvnSoftSet*>& inputs, int digits) {
  const auto& level = report.level;
  ordered_json doc;
  doc["rule"] = report.rule.label();
  doc["mode"] = std::string(to_string(report.rule.mode));
  doc["round"] = report.rule.round_digits ? ordered_json(*report.rule.round_digits) : ordered_json(nullptr);
  doc["group_extension"] = report.group_extension;

  ordered_json cuts = ordered_json::array();
  for (std::size_t p = 0; p < level.threshold.parameters.size(); ++p) {
    cuts.push_back({{"parameter", level.threshold.parameters[p]},
                    {"exact", number_json(level.threshold.cuts[p])},
                    {"display", level.threshold.cuts[p].to_display(digits)}});
  }
  doc["threshold"] = {{"origin", std::string(to_string(level.threshold.origin))},
                      {"extrapolated", level.threshold.extrapolated()},
                      {"cuts", std::move(cuts)}};

  ordered_json rows = ordered_json::array();
  for (std::size_t p = 0; p < level.result.parameters().size(); ++p)
    rows.push_back({{"parameter", level.result.parameters()[p]}, {"objects", level.result.subset(p)}});
  doc["level_soft_set"] = std::move(rows);
  doc["table"] = render_table(level.result);

  ordered_json choices = ordered_json::array();
  for (std::size_t i = 0; i < report.choices.objects.size(); ++i)
    choices.push_back({{"object", report.choices.objects[i]}, {"c", report.choices.counts[i]}});
  doc["choice_values"] = std::move(choices);
  doc["ranking"] = report.choices.ranking;
  doc["optimal"] = report.optimal;
  doc["unique_winner"] = report.unique_winner ? ordered_json(*report.unique_winner) : ordered_json(nullptr);

  ordered_json suggestions = ordered_json::array();
  if (!report.unique_winner)
    for (const auto& r : suggest_rethreshold(report)) suggestions.push_back(r.label());
  doc["suggested_rules"] = std::move(suggestions);
  doc["notes"] = report.notes;
  doc["source_digest"] = level.source_digest;

  ordered_json echoed = ordered_json::array();
  for (const IvnSoftSet* in : inputs) echoed.push_back(dataset_document(*in));
  doc["inputs"] = std::move(echoed);
  return doc;
}

std::string render_ivn_table(const IvnSoftSet& s, int digits) {
  std::vector<std::string> header{"U"};
  header.insert(header.end(), s.universe().begin(), s.universe().end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t p = 0; p < s.parameters().size(); ++p) {
    std::vector<std::string> row{s.parameters()[p]};
    for (std::size_t u = 0; u < s.universe().size(); ++u) row.push_back(s.at(p, u).to_display(digits));
    rows.push_back(std::move(row));
  }
  return grid(header, rows);
}

std::string render_threshold(const ThresholdSet& t, int digits) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t p = 0; p < t.parameters.size(); ++p)
    rows.push_back({t.parameters[p], t.cuts[p].to_display(digits), t.cuts[p].to_string()});
  std::string out = "threshold: " + std::string(to_string(t.origin));
  if (t.extrapolated()) out += " (extrapolated)";
  if (t.rounded_digits) out += " (truncated to " + std::to_string(*t.rounded_digits) + " decimals)";
  return out + "\n" + grid({"E", "display", "exact"}, rows);
}

std::string render_report(const DecisionReport& report, int digits) {
  std::ostringstream os;
  os << "rule: " << report.rule.label() << " (mode: " << to_string(report.rule.mode) << ")\n";
  os << render_threshold(report.level.threshold, digits);
  os << "\nlevel soft set:\n" << render_table(report.level.result);
  os << "\nchoice values:\n";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.choices.objects.size(); ++i)
    rows.push_back({report.choices.objects[i], std::to_string(report.choices.counts[i])});
  os << grid({"object", "c"}, rows);
  os << "\noptimal:";
  for (const auto& o : report.optimal) os << ' ' << o;
  os << '\n';
  if (report.unique_winner) {
    os << "selected: " << *report.unique_winner << '\n';
  } else {
    os << "tie: no unique winner\n";
    const auto suggestions = suggest_rethreshold(report);
    if (!suggestions.empty()) {
      os << "suggested re-threshold:";
      for (const auto& r : suggestions) os << ' ' << r.label();
      os << '\n';
    }
  }
  for (const auto& n : report.notes) os << "note: " << n << '\n';
  return os.str();
}

}  // namespace ivnsoft::io
