#include "features.hpp"

#include "text.hpp"

namespace snacs {

std::vector<RawFeature> FeatureExtractor::extract(const Sentence& sentence, int position) const {
  const auto& tokens = sentence.tokens;
  if (position < 0 || position >= static_cast<int>(tokens.size()))
    throw std::invalid_argument("feature position out of range");
  std::vector<RawFeature> out;
  auto add = [&](std::string name) { out.push_back({std::move(name), 1.0}); };
  auto at = [&](int offset) -> const Token* {
    int idx = position + offset;
    if (idx < 0 || idx >= static_cast<int>(tokens.size())) return nullptr;
    return &tokens[idx];
  };

  const Token& cur = tokens[position];
  add("w0=" + cur.form());
  add("l0=" + cur.lemma());
  add("u0=" + cur.upos());
  for (int off : {-2, -1, 1, 2}) {
    const Token* t = at(off);
    std::string tag = std::to_string(off);
    if (t) {
      add("w" + tag + "=" + t->form());
      add("l" + tag + "=" + t->lemma());
    }
  }
  if (inventory_) {
    if (auto klass = inventory_->lookup(cur.lemma()))
      add(std::string("class=") + to_string(*klass));
  }
  auto cps = utf8_codepoints(cur.form());
  for (size_t n = 1; n <= 3 && n <= cps.size(); ++n) {
    std::string pre, suf;
    for (size_t i = 0; i < n; ++i) {
      pre += cps[i];
      suf = cps[cps.size() - 1 - i] + suf;
    }
    add("pre" + std::to_string(n) + "=" + pre);
    add("suf" + std::to_string(n) + "=" + suf);
  }
  if (position == 0) add("bos");
  if (position == static_cast<int>(tokens.size()) - 1) add("eos");

  if (embeddings_) {
    auto vec = embeddings_->embed(sentence, position);
    for (size_t i = 0; i < vec.size(); ++i)
      out.push_back({"emb" + std::to_string(i), vec[i]});
  }
  return out;
}

}  // namespace snacs
