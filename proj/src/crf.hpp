#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bio.hpp"
#include "conllulex.hpp"
#include "features.hpp"
#include "stats.hpp"

namespace snacs {

struct Alphabet {
  std::vector<std::string> items;
  std::unordered_map<std::string, int> index;

  int intern(const std::string& s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(items.size());
    items.push_back(s);
    index.emplace(s, id);
    return id;
  }
  int lookup(const std::string& s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
  }
  int size() const { return static_cast<int>(items.size()); }
};

struct CrfConfig {
  double learning_rate = 0.001;
  double l2 = 1e-4;
  int epochs = 30;
  int batch_size = 16;
  std::uint64_t seed = 42;
  LabelDim dimension = LabelDim::Scene;
};

// One token's sparse features: (feature id, value).
using FeatureVec = std::vector<std::pair<int, double>>;
using FeatureSeq = std::vector<FeatureVec>;

/// Linear-chain CRF over BIO tags. Weight layout is feature-major for the
/// emissions: emit[f * L + y]. Transitions start->I and O->I are
/// structurally -inf so every decoded sequence is valid BIO.
struct CrfModel {
  Alphabet labels;    // "O" at 0, "I" at 1, then B-<label> tags
  Alphabet features;
  std::vector<double> emit;   // F x L
  std::vector<double> trans;  // L x L, trans[prev * L + cur]
  std::vector<double> start;
  std::vector<double> stop;
  CrfConfig config;

  int num_labels() const { return labels.size(); }
  int num_features() const { return features.size(); }

  static CrfModel init(std::vector<std::string> b_labels, Alphabet features,
                       const CrfConfig& config);
  void apply_masks();

  void save(const std::string& path) const;
  static CrfModel load(const std::string& path);
};

struct CrfGradient {
  double nll = 0.0;
  std::vector<double> emit;
  std::vector<double> trans;
  std::vector<double> start;
  std::vector<double> stop;
};

struct TrainingInstance {
  FeatureSeq features;
  std::vector<int> gold;  // label ids
};

/// Batch negative log-likelihood and gradient, including the L2 term
/// 0.5 * l2 * ||w||^2 over unmasked weights. Gradient entries for masked
/// transitions stay zero. Throws on feature ids outside the alphabet and
/// on invalid gold sequences.
CrfGradient crf_loglik_grad(const CrfModel& model,
                            const std::vector<const TrainingInstance*>& batch);

/// Forward-recursion log partition function for one sentence.
double crf_log_partition(const CrfModel& model, const FeatureSeq& features);

/// Joint score of one labeling (with masks; -inf for invalid sequences).
double crf_sequence_score(const CrfModel& model, const FeatureSeq& features,
                          const std::vector<int>& labels);

/// Max-scoring valid BIO sequence; backpointer ties break toward the
/// lowest label index.
std::vector<int> viterbi_decode_ids(const CrfModel& model, const FeatureSeq& features);
TagSequence viterbi_decode(const CrfModel& model, const FeatureSeq& features);

/// Interns raw features against a fixed alphabet, dropping unknowns.
FeatureSeq featurize(const FeatureExtractor& extractor, const Sentence& sentence,
                     const Alphabet& alphabet);

using EpochLogger =
    std::function<void(int epoch, double nll, double dev_f1, bool is_best)>;

/// Mini-batch SGD on the regularized CRF objective; returns the weights
/// from the best dev-F1 epoch. Deterministic given config.seed. Aborts
/// with std::runtime_error on non-finite loss.
CrfModel train_crf(const Corpus& train, const Corpus& dev, const CrfConfig& config,
                   const EpochLogger& log = {});

/// Tags every sentence of a corpus with the trained model.
std::vector<TagSequence> crf_tag(const CrfModel& model, const Corpus& corpus);

}  // namespace snacs
