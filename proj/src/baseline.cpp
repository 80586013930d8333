#include "baseline.hpp"

#include <algorithm>
#include <fstream>

#include "serialize.hpp"
#include "text.hpp"

namespace snacs {

namespace {

std::string argmax_label(const std::map<std::string, long>& counts) {
  std::string best;
  long best_count = -1;
  for (const auto& [label, count] : counts) {
    if (count > best_count) {  // map order makes ties lexicographic
      best = label;
      best_count = count;
    }
  }
  return best;
}

constexpr char kMagic[] = "snacs-baseline 1\n";

}  // namespace

std::string BaselineModel::most_common(const std::string& lemma) const {
  auto it = lemma_counts.find(lemma);
  if (it != lemma_counts.end() && !it->second.empty()) return argmax_label(it->second);
  return argmax_label(global_counts);
}

void BaselineModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out.write(kMagic, sizeof(kMagic) - 1);
  io::put_string(out, to_string(dimension));
  io::put_u64(out, lemma_counts.size());
  for (const auto& [lemma, counts] : lemma_counts) {
    io::put_string(out, lemma);
    io::put_u64(out, counts.size());
    for (const auto& [label, count] : counts) {
      io::put_string(out, label);
      io::put_u64(out, static_cast<std::uint64_t>(count));
    }
  }
  io::put_u64(out, global_counts.size());
  for (const auto& [label, count] : global_counts) {
    io::put_string(out, label);
    io::put_u64(out, static_cast<std::uint64_t>(count));
  }
}

BaselineModel BaselineModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::string magic(sizeof(kMagic) - 1, '\0');
  in.read(magic.data(), static_cast<std::streamsize>(magic.size()));
  if (magic != kMagic) throw std::runtime_error("not a baseline model file: " + path);
  BaselineModel m;
  auto dim = label_dim_from_string(io::get_string(in));
  if (!dim) throw std::runtime_error("bad dimension in model file");
  m.dimension = *dim;
  std::uint64_t n_lemmas = io::get_u64(in);
  for (std::uint64_t i = 0; i < n_lemmas; ++i) {
    std::string lemma = io::get_string(in);
    std::uint64_t n_labels = io::get_u64(in);
    auto& counts = m.lemma_counts[lemma];
    for (std::uint64_t k = 0; k < n_labels; ++k) {
      std::string label = io::get_string(in);
      counts[label] = static_cast<long>(io::get_u64(in));
    }
  }
  std::uint64_t n_global = io::get_u64(in);
  for (std::uint64_t k = 0; k < n_global; ++k) {
    std::string label = io::get_string(in);
    m.global_counts[label] = static_cast<long>(io::get_u64(in));
  }
  return m;
}

BaselineModel train_baseline(const Corpus& train, LabelDim dimension) {
  if (train.sentences.empty()) throw std::invalid_argument("empty training corpus");
  BaselineModel m;
  m.dimension = dimension;
  for (const Target& t : extract_targets(train)) {
    std::string label = construal_component(t.construal, dimension);
    ++m.lemma_counts[t.lemma][label];
    ++m.global_counts[label];
  }
  return m;
}

namespace {

// Lemma token sequences of the training targets, longest first.
std::vector<std::vector<std::string>> lexicon_sequences(const BaselineModel& model) {
  std::vector<std::vector<std::string>> seqs;
  for (const auto& [lemma, counts] : model.lemma_counts) seqs.push_back(split(lemma, ' '));
  std::sort(seqs.begin(), seqs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return seqs;
}

bool matches_at(const Sentence& sentence, size_t pos, const std::vector<std::string>& seq) {
  if (pos + seq.size() > sentence.tokens.size()) return false;
  bool lemmas = true, forms = true;
  for (size_t k = 0; k < seq.size(); ++k) {
    if (sentence.tokens[pos + k].lemma() != seq[k]) lemmas = false;
    if (sentence.tokens[pos + k].form() != seq[k]) forms = false;
  }
  return lemmas || forms;
}

}  // namespace

TagSequence baseline_tag(const BaselineModel& model, const Sentence& sentence,
                         bool targets_known, const LabelInventory& inventory) {
  TagSequence seq;
  seq.unit = TagSequence::Unit::Token;
  seq.tags.assign(sentence.tokens.size(), Tag{Tag::O, {}});
  if (targets_known) {
    for (const Target& t : extract_targets(sentence, inventory)) {
      for (size_t k = 0; k < t.span.size(); ++k)
        seq.tags[t.span[k] - 1] =
            k == 0 ? Tag{Tag::B, model.most_common(t.lemma)} : Tag{Tag::I, {}};
    }
    return seq;
  }
  auto lexicon = lexicon_sequences(model);
  size_t pos = 0;
  while (pos < sentence.tokens.size()) {
    size_t matched = 0;
    std::string matched_lemma;
    for (const auto& entry : lexicon) {  // longest first
      if (matches_at(sentence, pos, entry)) {
        matched = entry.size();
        matched_lemma = join(entry, " ");
        break;
      }
    }
    if (matched == 0) {
      ++pos;
      continue;
    }
    seq.tags[pos] = Tag{Tag::B, model.most_common(matched_lemma)};
    for (size_t k = 1; k < matched; ++k) seq.tags[pos + k] = Tag{Tag::I, {}};
    pos += matched;
  }
  return seq;
}

}  // namespace snacs
