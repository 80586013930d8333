#include "bio.hpp"

#include <sstream>
#include <stdexcept>

#include "text.hpp"

namespace snacs {

std::string Tag::text() const {
  switch (kind) {
    case O: return "O";
    case I: return "I";
    case B: return "B-" + label;
  }
  return "O";
}

Tag Tag::parse(std::string_view text) {
  if (text == "O") return {O, {}};
  if (text == "I") return {I, {}};
  if (starts_with(text, "B-")) return {B, std::string(text.substr(2))};
  if (starts_with(text, "B(") && text.back() == ')')
    return {B, std::string(text.substr(2, text.size() - 3))};
  throw ParseError("malformed tag '" + std::string(text) + "'");
}

TagSequence encode_bio(const Sentence& sentence, const LabelInventory& inventory,
                       LabelDim dimension) {
  TagSequence seq;
  seq.unit = TagSequence::Unit::Token;
  seq.tags.assign(sentence.tokens.size(), Tag{Tag::O, {}});
  for (const Target& t : extract_targets(sentence, inventory)) {
    for (size_t k = 0; k < t.span.size(); ++k) {
      int idx = t.span[k] - 1;
      if (idx < 0 || idx >= static_cast<int>(seq.tags.size()))
        throw ParseError("target span outside sentence '" + sentence.sent_id + "'");
      if (seq.tags[idx].kind != Tag::O)
        throw ParseError("overlapping targets in sentence '" + sentence.sent_id + "'");
      seq.tags[idx] = k == 0 ? Tag{Tag::B, construal_component(t.construal, dimension)}
                             : Tag{Tag::I, {}};
    }
  }
  return seq;
}

TagSequence project_subwords(const TagSequence& tokens,
                             const std::vector<std::vector<std::string>>& segmentation) {
  if (tokens.unit != TagSequence::Unit::Token)
    throw std::invalid_argument("project_subwords expects a token-level sequence");
  if (segmentation.size() != tokens.size())
    throw std::invalid_argument("segmentation does not cover every token");
  TagSequence out;
  out.unit = TagSequence::Unit::Subword;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const auto& pieces = segmentation[i];
    if (pieces.empty())
      throw std::invalid_argument("empty subword list for token " + std::to_string(i + 1));
    const Tag& tag = tokens.tags[i];
    for (size_t k = 0; k < pieces.size(); ++k) {
      Tag sub;
      if (tag.kind == Tag::O)
        sub = {Tag::O, {}};
      else if (k == 0)
        sub = tag;  // B keeps its label; I stays I on the first subword
      else
        sub = {Tag::I, {}};
      out.tags.push_back(std::move(sub));
      out.alignment.push_back(static_cast<int>(i));
    }
  }
  return out;
}

namespace {

std::vector<Tag> collapse_to_tokens(const TagSequence& seq) {
  if (seq.unit == TagSequence::Unit::Token) return seq.tags;
  std::vector<Tag> out;
  int prev = -1;
  for (size_t i = 0; i < seq.tags.size(); ++i) {
    int tok = i < seq.alignment.size() ? seq.alignment[i] : static_cast<int>(i);
    if (tok != prev) {
      out.push_back(seq.tags[i]);  // token label = first subword's tag
      prev = tok;
    }
  }
  return out;
}

}  // namespace

DecodeResult decode_bio(const TagSequence& sequence) {
  DecodeResult result;
  std::vector<Tag> tags = collapse_to_tokens(sequence);
  bool in_span = false;
  for (size_t i = 0; i < tags.size(); ++i) {
    const Tag& tag = tags[i];
    switch (tag.kind) {
      case Tag::B:
        result.spans.push_back({static_cast<int>(i), 1, tag.label});
        in_span = true;
        break;
      case Tag::I:
        if (in_span) {
          ++result.spans.back().length;
        } else {
          ++result.repairs;  // I after O or at start: treated as O
        }
        break;
      case Tag::O:
        in_span = false;
        break;
    }
  }
  return result;
}

std::vector<std::string> bigram_segmenter(const std::string& form) {
  auto cps = utf8_codepoints(form);
  std::vector<std::string> out;
  for (size_t i = 0; i < cps.size(); i += 2) {
    std::string piece = cps[i];
    if (i + 1 < cps.size()) piece += cps[i + 1];
    out.push_back(std::move(piece));
  }
  if (out.empty()) out.push_back("");
  return out;
}

void write_tagged(std::ostream& out, const std::vector<TaggedSentence>& sentences) {
  for (const TaggedSentence& s : sentences) {
    if (s.forms.size() != s.tags.size())
      throw std::invalid_argument("tagged sentence forms/tags length mismatch");
    for (size_t i = 0; i < s.forms.size(); ++i)
      out << s.forms[i] << '\t' << s.tags.tags[i].text() << '\n';
    out << '\n';
  }
}

std::string write_tagged(const std::vector<TaggedSentence>& sentences) {
  std::ostringstream out;
  write_tagged(out, sentences);
  return out.str();
}

std::vector<TaggedSentence> read_tagged(std::istream& in) {
  std::vector<TaggedSentence> out;
  TaggedSentence current;
  std::string line;
  int lineno = 0;
  auto flush = [&] {
    if (!current.forms.empty()) out.push_back(std::move(current));
    current = TaggedSentence{};
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    auto cols = split(line, '\t');
    if (cols.size() != 2)
      throw ParseError("tagged line needs FORM<TAB>TAG", lineno);
    current.forms.push_back(cols[0]);
    current.tags.tags.push_back(Tag::parse(cols[1]));
  }
  flush();
  return out;
}

}  // namespace snacs
