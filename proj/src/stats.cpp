#include "stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace snacs {

const char* to_string(LabelDim d) {
  switch (d) {
    case LabelDim::Scene: return "scene";
    case LabelDim::Function: return "function";
    case LabelDim::Construal: return "construal";
  }
  return "?";
}

std::optional<LabelDim> label_dim_from_string(std::string_view s) {
  if (s == "scene") return LabelDim::Scene;
  if (s == "function") return LabelDim::Function;
  if (s == "construal") return LabelDim::Construal;
  return std::nullopt;
}

std::optional<DistKey> DistKey::from_string(std::string_view s) {
  if (s == "scene") return DistKey{Scene};
  if (s == "function") return DistKey{Function};
  if (s == "construal") return DistKey{Construal};
  if (s == "lemma") return DistKey{Lemma};
  return std::nullopt;
}

const char* DistKey::name() const {
  switch (kind) {
    case Scene: return "scene";
    case Function: return "function";
    case Construal: return "construal";
    case Lemma: return "lemma";
  }
  return "?";
}

std::string construal_component(const Construal& c, LabelDim dim) {
  switch (dim) {
    case LabelDim::Scene: return c.scene;
    case LabelDim::Function: return c.function;
    case LabelDim::Construal: return c.text();
  }
  return {};
}

SummaryStats corpus_summary(const Corpus& corpus) {
  SummaryStats s;
  s.n_sentences = static_cast<long>(corpus.sentences.size());
  s.n_tokens = corpus.token_count();
  auto targets = extract_targets(corpus);
  s.n_targets = static_cast<long>(targets.size());
  std::map<TargetClass, std::set<std::string>> types;
  std::set<std::string> construal_types;
  for (const Target& t : targets) {
    ++s.by_class(t.klass).targets;
    types[t.klass].insert(t.lemma);
    construal_types.insert(t.construal.text());
    if (t.construal.congruent())
      ++s.role_equals_function;
    else
      ++s.role_differs;
  }
  for (auto& [klass, set] : types)
    s.by_class(klass).types = static_cast<long>(set.size());
  s.n_types = s.case_markers.types + s.emphatics.types + s.adpositions.types;
  s.n_construal_types = static_cast<long>(construal_types.size());
  return s;
}

CountDistribution distribution_from_targets(const std::vector<Target>& targets,
                                            std::optional<TargetClass> klass, DistKey dimension) {
  std::map<std::string, long> counts;
  long total = 0;
  for (const Target& t : targets) {
    if (klass && t.klass != *klass) continue;
    std::string key;
    switch (dimension.kind) {
      case DistKey::Scene: key = t.construal.scene; break;
      case DistKey::Function: key = t.construal.function; break;
      case DistKey::Construal: key = t.construal.text(); break;
      case DistKey::Lemma: key = t.lemma; break;
    }
    ++counts[key];
    ++total;
  }
  CountDistribution d;
  d.total = total;
  d.labels.assign(counts.begin(), counts.end());
  std::sort(d.labels.begin(), d.labels.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return d;
}

CountDistribution label_distribution(const Corpus& corpus, std::optional<TargetClass> klass,
                                     DistKey dimension) {
  return distribution_from_targets(extract_targets(corpus), klass, dimension);
}

double shannon_entropy(const CountDistribution& d) {
  if (d.total <= 0) throw std::invalid_argument("undefined entropy of empty distribution");
  double h = 0.0;
  for (const auto& [key, count] : d.labels) {
    if (count <= 0) continue;
    double p = static_cast<double>(count) / static_cast<double>(d.total);
    h -= p * std::log2(p);
  }
  return h;
}

double chao_shen_entropy(const CountDistribution& d, bool* coverage_guard) {
  if (d.total <= 0) throw std::invalid_argument("undefined entropy of empty distribution");
  if (coverage_guard) *coverage_guard = false;
  const double n = static_cast<double>(d.total);
  long f1 = 0;
  for (const auto& [key, count] : d.labels)
    if (count == 1) ++f1;
  double coverage = 1.0 - static_cast<double>(f1) / n;
  if (coverage == 0.0) {
    // all keys are singletons; fall back to the small-sample guard
    coverage = 1.0 - static_cast<double>(f1) / (n + 1.0);
    if (coverage_guard) *coverage_guard = true;
  }
  double h = 0.0;
  for (const auto& [key, count] : d.labels) {
    if (count <= 0) continue;
    double pt = coverage * static_cast<double>(count) / n;
    h += -pt * std::log2(pt) / (1.0 - std::pow(1.0 - pt, n));
  }
  return h;
}

std::vector<EntropyRow> target_entropy_table(const Corpus& corpus,
                                             const EntropyOptions& options) {
  auto targets = extract_targets(corpus);
  std::map<std::string, std::map<std::string, long>> per_lemma;
  for (const Target& t : targets) {
    if (!options.include_specials &&
        (corpus.inventory.specials.count(t.construal.scene) ||
         corpus.inventory.specials.count(t.construal.function)))
      continue;
    ++per_lemma[t.lemma][construal_component(t.construal, options.dimension)];
  }
  std::vector<EntropyRow> rows;
  for (const auto& [lemma, counts] : per_lemma) {
    long n = 0;
    CountDistribution d;
    for (const auto& [label, count] : counts) {
      d.labels.push_back({label, count});
      n += count;
    }
    d.total = n;
    if (n < options.min_n) continue;
    double h = options.estimator == EntropyEstimator::ChaoShen ? chao_shen_entropy(d)
                                                               : shannon_entropy(d);
    rows.push_back({lemma, h, n});
  }
  std::sort(rows.begin(), rows.end(), [](const EntropyRow& a, const EntropyRow& b) {
    if (a.entropy != b.entropy) return a.entropy > b.entropy;
    return a.lemma < b.lemma;
  });
  return rows;
}

}  // namespace snacs
