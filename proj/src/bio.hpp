#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "conllulex.hpp"
#include "stats.hpp"

namespace snacs {

struct Tag {
  enum Kind { O, B, I } kind = O;
  std::string label;  // construal text, only on B

  bool operator==(const Tag&) const = default;
  std::string text() const;
  // Parses "O", "I", "B-<label>" (also accepts "B(<label>)").
  static Tag parse(std::string_view text);
};

struct TagSequence {
  enum class Unit { Token, Subword };
  Unit unit = Unit::Token;
  std::vector<Tag> tags;
  // When unit == Subword: subword index -> source token index (0-based,
  // monotone non-decreasing, surjective).
  std::vector<int> alignment;

  size_t size() const { return tags.size(); }
};

/// Token-level BIO encoding of a sentence's targets: the first token of a
/// target carries B with the label of the chosen dimension, remaining
/// target tokens I, everything else O. Throws on overlapping targets.
TagSequence encode_bio(const Sentence& sentence, const LabelInventory& inventory,
                       LabelDim dimension);

/// Re-tags a token-level sequence on a subword segmentation: the first
/// subword of a B token keeps the B, all other subwords of in-target
/// tokens get I, subwords of O tokens get O.
TagSequence project_subwords(const TagSequence& tokens,
                             const std::vector<std::vector<std::string>>& segmentation);

struct DecodedSpan {
  int start = 0;  // 0-based token index
  int length = 0;
  std::string label;
};

struct DecodeResult {
  std::vector<DecodedSpan> spans;
  int repairs = 0;
};

/// Total decoder: accepts any tag sequence (including invalid ones from
/// taggers). An I after O or at the start is repaired to O and counted.
/// Subword input is first collapsed to token level via the alignment,
/// taking each token's first subword tag.
DecodeResult decode_bio(const TagSequence& sequence);

using Segmenter = std::function<std::vector<std::string>(const std::string&)>;

/// Deterministic character-bigram segmenter (UTF-8 aware): groups of two
/// code points, last group possibly one.
std::vector<std::string> bigram_segmenter(const std::string& form);

/// Tagged-sentence interchange format: FORM<TAB>TAG lines, blank line
/// between sentences.
struct TaggedSentence {
  std::vector<std::string> forms;
  TagSequence tags;
};

void write_tagged(std::ostream& out, const std::vector<TaggedSentence>& sentences);
std::string write_tagged(const std::vector<TaggedSentence>& sentences);
std::vector<TaggedSentence> read_tagged(std::istream& in);

}  // namespace snacs
