#pragma once

#include <map>
#include <string>
#include <vector>

#include "bio.hpp"
#include "conllulex.hpp"
#include "stats.hpp"

namespace snacs {

/// Most-frequent-tag baseline: per-lemma label counts in one dimension,
/// with a global fallback for unseen lemmas. Ties break lexicographically.
struct BaselineModel {
  LabelDim dimension = LabelDim::Scene;
  std::map<std::string, std::map<std::string, long>> lemma_counts;
  std::map<std::string, long> global_counts;

  /// Most common label for the lemma, falling back to the global most
  /// common label; empty when the model is empty.
  std::string most_common(const std::string& lemma) const;

  void save(const std::string& path) const;
  static BaselineModel load(const std::string& path);
};

BaselineModel train_baseline(const Corpus& train, LabelDim dimension);

/// Tags a sentence with the baseline. With targets_known the gold spans
/// are kept and only labels predicted; otherwise spans are found by
/// longest match of the training target lemmas against the sentence's
/// lemma (or form) sequence.
TagSequence baseline_tag(const BaselineModel& model, const Sentence& sentence,
                         bool targets_known, const LabelInventory& inventory);

}  // namespace snacs
