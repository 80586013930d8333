#include "eval.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace snacs {

const char* to_string(Bucket b) {
  switch (b) {
    case Bucket::Train: return "train";
    case Bucket::Dev: return "dev";
    case Bucket::Test: return "test";
  }
  return "?";
}

long Split::size(Bucket b) const {
  long n = 0;
  for (const auto& [id, bucket] : membership)
    if (bucket == b) ++n;
  return n;
}

namespace {

// Rejection-sampled bound so the shuffle is identical on every platform
// (std::uniform_int_distribution is implementation-defined).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  while (true) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

Split split_corpus(const Corpus& corpus, const SplitRatios& ratios, std::uint64_t seed) {
  const long n = static_cast<long>(corpus.sentences.size());
  if (n < 3) throw std::invalid_argument("corpus too small to split (need at least 3 sentences)");
  if (ratios.train <= 0 || ratios.dev <= 0 || ratios.test <= 0 ||
      std::abs(ratios.train + ratios.dev + ratios.test - 1.0) > 1e-9)
    throw std::invalid_argument("split ratios must be positive and sum to 1");

  std::vector<long> order(n);
  for (long i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (long i = n - 1; i > 0; --i) {
    long j = static_cast<long>(bounded(rng, static_cast<std::uint64_t>(i + 1)));
    std::swap(order[i], order[j]);
  }

  const double rs[3] = {ratios.train, ratios.dev, ratios.test};
  long sizes[3];
  double frac[3];
  long assigned = 0;
  for (int k = 0; k < 3; ++k) {
    double exact = rs[k] * n;
    sizes[k] = static_cast<long>(std::floor(exact));
    frac[k] = exact - std::floor(exact);
    assigned += sizes[k];
  }
  // Largest remainder; ties resolved in bucket order train, dev, test.
  while (assigned < n) {
    int best = 0;
    for (int k = 1; k < 3; ++k)
      if (frac[k] > frac[best]) best = k;
    ++sizes[best];
    frac[best] = -1.0;
    ++assigned;
  }

  Split split;
  split.seed = seed;
  split.ratios = ratios;
  long pos = 0;
  for (int k = 0; k < 3; ++k) {
    Bucket bucket = static_cast<Bucket>(k);
    for (long i = 0; i < sizes[k]; ++i, ++pos)
      split.membership[corpus.sentences[order[pos]].sent_id] = bucket;
  }
  return split;
}

Corpus subset(const Corpus& corpus, const Split& split, Bucket bucket) {
  Corpus out;
  out.inventory = corpus.inventory;
  for (const Sentence& s : corpus.sentences) {
    auto it = split.membership.find(s.sent_id);
    if (it != split.membership.end() && it->second == bucket) out.sentences.push_back(s);
  }
  return out;
}

EvalReport evaluate(const std::vector<TagSequence>& gold, const std::vector<TagSequence>& pred,
                    LabelDim dimension) {
  if (gold.size() != pred.size())
    throw std::invalid_argument("evaluate: sentence count mismatch (" +
                                std::to_string(gold.size()) + " vs " +
                                std::to_string(pred.size()) + ")");
  EvalReport report;
  report.dimension = dimension;
  for (size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size())
      throw std::invalid_argument("evaluate: length mismatch in sentence " + std::to_string(s + 1));
    for (size_t i = 0; i < gold[s].size(); ++i) {
      const Tag& g = gold[s].tags[i];
      const Tag& p = pred[s].tags[i];
      if (g.kind == Tag::B) ++report.gold_b;
      if (p.kind == Tag::B) ++report.pred_b;
      if (g.kind == Tag::B && p.kind == Tag::B) {
        auto gc = Construal::parse(g.label);
        auto pc = Construal::parse(p.label);
        if (construal_component(gc, dimension) == construal_component(pc, dimension))
          ++report.matches;
      }
    }
  }
  report.undefined_precision = report.pred_b == 0;
  return report;
}

}  // namespace snacs
