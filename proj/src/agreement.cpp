#include "agreement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace snacs {

std::vector<AlignedPair> align_double_annotations(const Corpus& a, const Corpus& b) {
  std::map<std::string, const Sentence*> b_by_id;
  for (const Sentence& s : b.sentences) b_by_id[s.sent_id] = &s;
  std::vector<AlignedPair> out;
  for (const Sentence& sa : a.sentences) {
    auto it = b_by_id.find(sa.sent_id);
    if (it == b_by_id.end()) continue;
    const Sentence& sb = *it->second;
    if (sa.tokens.size() != sb.tokens.size())
      throw ParseError("mismatched tokenization for sentence '" + sa.sent_id + "'");
    for (size_t i = 0; i < sa.tokens.size(); ++i)
      if (sa.tokens[i].form() != sb.tokens[i].form())
        throw ParseError("mismatched tokenization for sentence '" + sa.sent_id + "'");
    auto ta = extract_targets(sa, a.inventory);
    auto tb = extract_targets(sb, b.inventory);
    std::map<std::vector<int>, const Target*> b_by_span;
    for (const Target& t : tb) b_by_span[t.span] = &t;
    for (const Target& t : ta) {
      auto match = b_by_span.find(t.span);
      if (match == b_by_span.end()) continue;
      out.push_back({t.sent_id, t.span, t.lemma, t.construal, match->second->construal});
    }
  }
  return out;
}

namespace {

bool agrees(const AlignedPair& p, LabelDim dim) {
  switch (dim) {
    case LabelDim::Scene: return p.a.scene == p.b.scene;
    case LabelDim::Function: return p.a.function == p.b.function;
    case LabelDim::Construal: return p.a == p.b;
  }
  return false;
}

}  // namespace

double raw_agreement(const std::vector<AlignedPair>& pairs, LabelDim dimension) {
  if (pairs.empty()) throw std::invalid_argument("raw agreement of empty pair set");
  long equal = 0;
  for (const AlignedPair& p : pairs)
    if (agrees(p, dimension)) ++equal;
  return static_cast<double>(equal) / static_cast<double>(pairs.size());
}

double cohens_kappa(const std::vector<AlignedPair>& pairs, LabelDim dimension) {
  if (pairs.empty()) throw std::invalid_argument("kappa of empty pair set");
  const double n = static_cast<double>(pairs.size());
  std::map<std::string, long> ca, cb;
  for (const AlignedPair& p : pairs) {
    ++ca[construal_component(p.a, dimension)];
    ++cb[construal_component(p.b, dimension)];
  }
  double pe = 0.0;
  for (const auto& [label, count] : ca) {
    auto it = cb.find(label);
    if (it == cb.end()) continue;
    pe += (count / n) * (it->second / n);
  }
  double po = raw_agreement(pairs, dimension);
  if (pe >= 1.0) {
    if (po >= 1.0) return 1.0;
    throw std::invalid_argument("degenerate marginals: chance agreement is 1");
  }
  return (po - pe) / (1.0 - pe);
}

std::vector<AgreementRow> per_lemma_agreement(const std::vector<AlignedPair>& pairs, long min_n) {
  std::map<std::string, std::vector<AlignedPair>> by_lemma;
  for (const AlignedPair& p : pairs) by_lemma[p.lemma].push_back(p);
  std::vector<AgreementRow> rows;
  for (const auto& [lemma, group] : by_lemma) {
    if (static_cast<long>(group.size()) < min_n) continue;
    rows.push_back({lemma, static_cast<long>(group.size()),
                    raw_agreement(group, LabelDim::Scene),
                    raw_agreement(group, LabelDim::Function),
                    raw_agreement(group, LabelDim::Construal)});
  }
  std::sort(rows.begin(), rows.end(), [](const AgreementRow& a, const AgreementRow& b) {
    if (a.construal != b.construal) return a.construal > b.construal;
    return a.lemma < b.lemma;
  });
  return rows;
}

}  // namespace snacs
