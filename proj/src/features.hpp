#pragma once

#include <string>
#include <vector>

#include "conllulex.hpp"

namespace snacs {

/// Dense token representations can be plugged in here later (e.g. LM
/// embeddings) without touching the model; extract() folds them into the
/// feature vector as real-valued features.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual int dimension() const = 0;
  virtual std::vector<double> embed(const Sentence& sentence, int position) const = 0;
};

struct RawFeature {
  std::string name;
  double value = 1.0;
};

/// Deterministic indicator features from a fixed template set: current
/// form/lemma/upos, forms and lemmas at offsets +-1 and +-2, the target
/// class of the current lemma when known, character prefixes/suffixes of
/// length 1-3, and boundary flags.
class FeatureExtractor {
 public:
  explicit FeatureExtractor(const LabelInventory* inventory = nullptr,
                            const EmbeddingProvider* embeddings = nullptr)
      : inventory_(inventory), embeddings_(embeddings) {}

  std::vector<RawFeature> extract(const Sentence& sentence, int position) const;

 private:
  const LabelInventory* inventory_;
  const EmbeddingProvider* embeddings_;
};

}  // namespace snacs
