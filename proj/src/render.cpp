#include "render.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace snacs {

using ordered_json = nlohmann::ordered_json;

std::optional<OutputFormat> output_format_from_string(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "records") return OutputFormat::Records;
  return std::nullopt;
}

namespace {

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

std::string doc(const ordered_json& j) { return j.dump() + "\n"; }

}  // namespace

std::string render_summary(const SummaryStats& s, OutputFormat format) {
  if (format == OutputFormat::Records) {
    ordered_json j;
    j["table"] = "summary";
    j["sentences"] = s.n_sentences;
    j["tokens"] = s.n_tokens;
    j["targets"] = s.n_targets;
    j["types"] = s.n_types;
    for (TargetClass k : {TargetClass::Case, TargetClass::Emphatic, TargetClass::Adposition}) {
      const ClassStats& c = s.by_class(k);
      j[to_string(k)] = {{"targets", c.targets},
                         {"pct", SummaryStats::pct(c.targets, s.n_targets)},
                         {"types", c.types}};
    }
    j["construal_types"] = s.n_construal_types;
    j["role_equals_function"] = {{"targets", s.role_equals_function},
                                 {"pct", SummaryStats::pct(s.role_equals_function, s.n_targets)}};
    j["role_differs"] = {{"targets", s.role_differs},
                         {"pct", SummaryStats::pct(s.role_differs, s.n_targets)}};
    return doc(j);
  }
  std::ostringstream out;
  out << "Sentences      " << std::setw(7) << s.n_sentences << "\n";
  out << "Tokens         " << std::setw(7) << s.n_tokens << "\n";
  out << "Targets        " << std::setw(7) << s.n_targets << "   types " << s.n_types << "\n";
  auto row = [&](const char* name, const ClassStats& c) {
    out << "  " << std::left << std::setw(13) << name << std::right << std::setw(7) << c.targets
        << "   " << std::setw(5) << fixed(SummaryStats::pct(c.targets, s.n_targets), 1)
        << "%   types " << c.types << "\n";
  };
  row("case", s.case_markers);
  row("emphatic", s.emphatics);
  row("adpositions", s.adpositions);
  out << "Construals     " << std::setw(7) << s.n_targets << "   types " << s.n_construal_types
      << "\n";
  out << "  role = fxn   " << std::setw(7) << s.role_equals_function << "   " << std::setw(5)
      << fixed(SummaryStats::pct(s.role_equals_function, s.n_targets), 1) << "%\n";
  out << "  role != fxn  " << std::setw(7) << s.role_differs << "   " << std::setw(5)
      << fixed(SummaryStats::pct(s.role_differs, s.n_targets), 1) << "%\n";
  return out.str();
}

std::string render_distribution(const CountDistribution& d, const std::string& title,
                                long denominator, OutputFormat format) {
  if (format == OutputFormat::Records) {
    ordered_json rows = ordered_json::array();
    for (const auto& [key, count] : d.labels)
      rows.push_back({{"key", key},
                      {"count", count},
                      {"pct", SummaryStats::pct(count, denominator)}});
    ordered_json j;
    j["table"] = "distribution";
    j["dimension"] = title;
    j["total"] = d.total;
    j["denominator"] = denominator;
    j["rows"] = rows;
    return doc(j);
  }
  std::ostringstream out;
  out << title << "  (n=" << d.total << ", % of " << denominator << " targets)\n";
  size_t width = 4;
  for (const auto& [key, count] : d.labels) width = std::max(width, key.size());
  for (const auto& [key, count] : d.labels)
    out << "  " << std::left << std::setw(static_cast<int>(width)) << key << std::right << "  "
        << std::setw(6) << count << "  " << std::setw(5)
        << fixed(SummaryStats::pct(count, denominator), 1) << "%\n";
  return out.str();
}

std::string render_entropy_table(const std::vector<EntropyRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Records) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"lemma", r.lemma}, {"entropy", r.entropy}, {"n", r.n}});
    ordered_json j;
    j["table"] = "entropy";
    j["rows"] = arr;
    return doc(j);
  }
  std::ostringstream out;
  size_t width = 6;
  for (const auto& r : rows) width = std::max(width, r.lemma.size());
  out << std::left << std::setw(static_cast<int>(width)) << "target" << "  " << std::right
      << std::setw(5) << "H" << "  " << std::setw(5) << "n" << "\n";
  for (const auto& r : rows)
    out << std::left << std::setw(static_cast<int>(width)) << r.lemma << "  " << std::right
        << std::setw(5) << fixed(r.entropy, 2) << "  " << std::setw(5) << r.n << "\n";
  return out.str();
}

std::string render_agreement(double kappa_scene, double kappa_function, double kappa_construal,
                             const std::vector<AgreementRow>& per_lemma, long n_pairs,
                             OutputFormat format) {
  if (format == OutputFormat::Records) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : per_lemma)
      rows.push_back({{"lemma", r.lemma},
                      {"n", r.n},
                      {"scene", r.scene},
                      {"function", r.function},
                      {"construal", r.construal}});
    ordered_json j;
    j["table"] = "agreement";
    j["pairs"] = n_pairs;
    j["kappa"] = {{"scene", kappa_scene},
                  {"function", kappa_function},
                  {"construal", kappa_construal}};
    j["per_lemma"] = rows;
    return doc(j);
  }
  std::ostringstream out;
  out << "Doubly-annotated pairs: " << n_pairs << "\n";
  out << "Cohen's kappa: scene " << fixed(kappa_scene, 2) << ", function "
      << fixed(kappa_function, 2) << ", construal " << fixed(kappa_construal, 2) << "\n";
  if (!per_lemma.empty()) {
    size_t width = 6;
    for (const auto& r : per_lemma) width = std::max(width, r.lemma.size());
    out << std::left << std::setw(static_cast<int>(width)) << "target" << "  " << std::right
        << std::setw(5) << "n" << "  scene  fxn    cons\n";
    for (const auto& r : per_lemma)
      out << std::left << std::setw(static_cast<int>(width)) << r.lemma << "  " << std::right
          << std::setw(5) << r.n << "  " << fixed(r.scene, 2) << "   " << fixed(r.function, 2)
          << "   " << fixed(r.construal, 2) << "\n";
  }
  return out.str();
}

std::string render_eval(const EvalReport& report, OutputFormat format) {
  if (format == OutputFormat::Records) {
    ordered_json j;
    j["table"] = "eval";
    j["dimension"] = to_string(report.dimension);
    j["precision"] = report.precision();
    j["recall"] = report.recall();
    j["f1"] = report.f1();
    j["gold_b"] = report.gold_b;
    j["pred_b"] = report.pred_b;
    j["matches"] = report.matches;
    j["undefined_precision"] = report.undefined_precision;
    j["repairs"] = report.repairs;
    return doc(j);
  }
  std::ostringstream out;
  out << to_string(report.dimension) << ": P " << fixed(100.0 * report.precision(), 1) << "  R "
      << fixed(100.0 * report.recall(), 1) << "  F1 " << fixed(100.0 * report.f1(), 1)
      << "  (gold B " << report.gold_b << ", pred B " << report.pred_b << ", match "
      << report.matches << ", repairs " << report.repairs << ")";
  if (report.undefined_precision) out << "  [no predicted B: precision reported as 0]";
  out << "\n";
  return out.str();
}

std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics, OutputFormat format) {
  if (format == OutputFormat::Records) {
    ordered_json rows = ordered_json::array();
    for (const auto& d : diagnostics)
      rows.push_back({{"sent_id", d.sent_id},
                      {"token", d.token_id},
                      {"rule", d.rule},
                      {"message", d.message},
                      {"line", d.line}});
    ordered_json j;
    j["table"] = "diagnostics";
    j["count"] = diagnostics.size();
    j["rows"] = rows;
    return doc(j);
  }
  std::ostringstream out;
  for (const auto& d : diagnostics) {
    out << d.sent_id;
    if (d.token_id > 0) out << ":" << d.token_id;
    if (d.line > 0) out << " (line " << d.line << ")";
    out << " [" << d.rule << "] " << d.message << "\n";
  }
  if (diagnostics.empty()) out << "no diagnostics\n";
  return out.str();
}

std::string render_split(const Split& split, OutputFormat format) {
  if (format == OutputFormat::Records) {
    ordered_json membership = ordered_json::object();
    for (const auto& [id, bucket] : split.membership) membership[id] = to_string(bucket);
    ordered_json j;
    j["table"] = "split";
    j["seed"] = split.seed;
    j["ratios"] = {split.ratios.train, split.ratios.dev, split.ratios.test};
    j["sizes"] = {{"train", split.size(Bucket::Train)},
                  {"dev", split.size(Bucket::Dev)},
                  {"test", split.size(Bucket::Test)}};
    j["membership"] = membership;
    return doc(j);
  }
  std::ostringstream out;
  out << "seed " << split.seed << "  train " << split.size(Bucket::Train) << "  dev "
      << split.size(Bucket::Dev) << "  test " << split.size(Bucket::Test) << "\n";
  for (const auto& [id, bucket] : split.membership)
    out << id << "\t" << to_string(bucket) << "\n";
  return out.str();
}

}  // namespace snacs
