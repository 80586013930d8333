#pragma once

#include <string>
#include <vector>

#include "conllulex.hpp"
#include "stats.hpp"

namespace snacs {

struct AlignedPair {
  std::string sent_id;
  std::vector<int> span;
  std::string lemma;
  Construal a;
  Construal b;
};

/// Pairs up targets labeled in BOTH annotation versions; targets missing
/// or unlabeled in one version are dropped. Throws ParseError when a shared
/// sent_id has mismatched tokenization, naming the sentence.
std::vector<AlignedPair> align_double_annotations(const Corpus& a, const Corpus& b);

/// Fraction of pairs agreeing in the chosen dimension; construal requires
/// both members equal. Throws std::invalid_argument on empty input.
double raw_agreement(const std::vector<AlignedPair>& pairs, LabelDim dimension);

/// Cohen's kappa = (p_o - p_e) / (1 - p_e) with marginals over the union
/// label set. Degenerate marginals (p_e = 1) yield 1.0 for perfect
/// observed agreement and throw otherwise.
double cohens_kappa(const std::vector<AlignedPair>& pairs, LabelDim dimension);

struct AgreementRow {
  std::string lemma;
  long n = 0;
  double scene = 0.0;
  double function = 0.0;
  double construal = 0.0;
};

/// Per-lemma raw agreement for lemmas with at least min_n pairs, sorted by
/// construal agreement descending.
std::vector<AgreementRow> per_lemma_agreement(const std::vector<AlignedPair>& pairs,
                                              long min_n = 20);

}  // namespace snacs
