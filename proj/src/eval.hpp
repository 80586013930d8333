#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bio.hpp"
#include "conllulex.hpp"
#include "stats.hpp"

namespace snacs {

enum class Bucket { Train, Dev, Test };
const char* to_string(Bucket b);

struct SplitRatios {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct Split {
  std::uint64_t seed = 0;
  SplitRatios ratios;
  std::map<std::string, Bucket> membership;  // sent_id -> bucket

  long size(Bucket b) const;
};

/// Sentence-level uniform shuffle with a seeded generator, then contiguous
/// assignment by ratio with largest-remainder rounding. Deterministic and
/// platform-independent given the seed. Throws on corpora smaller than 3
/// sentences or invalid ratios.
Split split_corpus(const Corpus& corpus, const SplitRatios& ratios, std::uint64_t seed);

/// The sentences of one bucket, in corpus order.
Corpus subset(const Corpus& corpus, const Split& split, Bucket bucket);

struct EvalReport {
  LabelDim dimension = LabelDim::Scene;
  long gold_b = 0;
  long pred_b = 0;
  long matches = 0;
  bool undefined_precision = false;  // no predicted B: precision reported 0
  int repairs = 0;                   // repair count from decoding, if known

  double precision() const { return pred_b == 0 ? 0.0 : static_cast<double>(matches) / pred_b; }
  double recall() const { return gold_b == 0 ? 0.0 : static_cast<double>(matches) / gold_b; }
  double f1() const {
    double p = precision(), r = recall();
    return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  }
};

/// Strict B-position evaluation: a true positive is a position where both
/// gold and prediction carry B with the same label in the evaluated
/// dimension. Micro-averaged. Throws on sentence count or length mismatch,
/// naming the sentence.
EvalReport evaluate(const std::vector<TagSequence>& gold, const std::vector<TagSequence>& pred,
                    LabelDim dimension);

}  // namespace snacs
