#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conllulex.hpp"

namespace snacs {

struct ClassStats {
  long targets = 0;
  long types = 0;
};

/// Table-1-shaped cumulative counts. Percentages are always derived from
/// the counts at render time, never stored.
struct SummaryStats {
  long n_sentences = 0;
  long n_tokens = 0;
  long n_targets = 0;
  long n_types = 0;
  ClassStats case_markers;
  ClassStats emphatics;
  ClassStats adpositions;
  long n_construal_types = 0;
  long role_equals_function = 0;
  long role_differs = 0;

  const ClassStats& by_class(TargetClass k) const {
    switch (k) {
      case TargetClass::Case: return case_markers;
      case TargetClass::Emphatic: return emphatics;
      default: return adpositions;
    }
  }
  ClassStats& by_class(TargetClass k) {
    return const_cast<ClassStats&>(std::as_const(*this).by_class(k));
  }
  static double pct(long part, long whole) {
    return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
  }
};

struct CountDistribution {
  std::vector<std::pair<std::string, long>> labels;  // sorted desc, ties lexicographic
  long total = 0;
};

enum class LabelDim { Scene, Function, Construal };
const char* to_string(LabelDim d);
std::optional<LabelDim> label_dim_from_string(std::string_view s);

/// Key dimension for label_distribution: a construal dimension or the
/// target lemma itself.
struct DistKey {
  enum Kind { Scene, Function, Construal, Lemma } kind = Scene;
  static std::optional<DistKey> from_string(std::string_view s);
  const char* name() const;
};

std::string construal_component(const Construal& c, LabelDim dim);

SummaryStats corpus_summary(const Corpus& corpus);

CountDistribution label_distribution(const Corpus& corpus, std::optional<TargetClass> klass,
                                     DistKey dimension);
CountDistribution distribution_from_targets(const std::vector<Target>& targets,
                                            std::optional<TargetClass> klass, DistKey dimension);

/// Plug-in Shannon entropy in bits. Throws std::invalid_argument on an
/// empty distribution.
double shannon_entropy(const CountDistribution& d);

/// Coverage-adjusted (Chao-Shen) entropy estimate in bits: with sample
/// coverage C = 1 - f1/n the adjusted probabilities C*p_k enter a
/// Horvitz-Thompson corrected sum. When every key is a singleton (C = 0)
/// the guard C = 1 - f1/(n+1) applies and *coverage_guard is set.
double chao_shen_entropy(const CountDistribution& d, bool* coverage_guard = nullptr);

enum class EntropyEstimator { Shannon, ChaoShen };

struct EntropyRow {
  std::string lemma;
  double entropy = 0.0;
  long n = 0;
};

struct EntropyOptions {
  long min_n = 20;
  LabelDim dimension = LabelDim::Scene;
  bool include_specials = true;
  EntropyEstimator estimator = EntropyEstimator::ChaoShen;
};

/// One row per target lemma with n >= min_n, sorted by entropy descending
/// (ties by lemma).
std::vector<EntropyRow> target_entropy_table(const Corpus& corpus,
                                             const EntropyOptions& options = {});

}  // namespace snacs
