#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "inventory.hpp"

namespace snacs {

// CoNLL-U-Lex column layout: the 10 UD columns followed by 9 lexical
// columns (SMWE, LEXCAT, LEXLEMMA, SS, SS2, WMWE, WCAT, WLEMMA, LEXTAG).
inline constexpr int kNumColumns = 19;

struct Token {
  // Raw column values, "_" included, so serialization is byte-exact.
  std::vector<std::string> fields;

  // Parsed views.
  int id = 0;
  int head = 0;
  std::optional<std::pair<int, int>> smwe;  // (group id, position in group)
  std::optional<std::string> lexcat;
  std::optional<std::string> lexlemma;
  std::optional<Construal> construal;  // present iff both SS and SS2 given

  const std::string& form() const { return fields[1]; }
  const std::string& lemma() const { return fields[2]; }
  const std::string& upos() const { return fields[3]; }
  const std::string& xpos() const { return fields[4]; }
  const std::string& feats() const { return fields[5]; }
  const std::string& deprel() const { return fields[7]; }
  const std::string& deps() const { return fields[8]; }
  const std::string& misc() const { return fields[9]; }
  const std::string& ss_raw() const { return fields[13]; }
  const std::string& ss2_raw() const { return fields[14]; }
  const std::string& lextag() const { return fields[18]; }

  // Builds a token from raw column values, parsing the derived views.
  // Throws ParseError on malformed numeric fields.
  static Token from_fields(std::vector<std::string> fields, int line = 0);
};

struct Sentence {
  std::string sent_id;
  std::string text;
  std::vector<std::string> comments;  // raw comment lines, kept verbatim
  std::vector<Token> tokens;
};

struct Corpus {
  std::vector<Sentence> sentences;
  LabelInventory inventory;

  long token_count() const;
};

struct Diagnostic {
  std::string sent_id;
  int token_id = 0;  // 0 when the diagnostic is not tied to a token
  std::string rule;
  std::string message;
  int line = 0;
};

struct Target {
  std::string sent_id;
  std::vector<int> span;  // 1-based token ids, contiguous
  std::string lemma;      // canonical (lexlemma)
  TargetClass klass = TargetClass::Adposition;
  Construal construal;
};

struct ParseOptions {
  bool strict = true;
};

struct ParseResult {
  Corpus corpus;
  std::vector<Diagnostic> diagnostics;
};

/// Parses a CoNLL-U-Lex stream. In strict mode the first diagnostic is
/// thrown as ParseError; in lenient mode diagnostics are collected and
/// offending tokens kept verbatim where possible.
ParseResult parse_corpus(std::istream& in, const LabelInventory& inventory,
                         const ParseOptions& options = {});
ParseResult parse_corpus_file(const std::string& path, const LabelInventory& inventory,
                              const ParseOptions& options = {});

void write_corpus(std::ostream& out, const Corpus& corpus);
std::string write_corpus(const Corpus& corpus);

/// One Target per ss-bearing token group; spans follow SMWE grouping.
/// Lemmas missing from the target lexicon classify as adposition, with a
/// diagnostic when a sink is given.
std::vector<Target> extract_targets(const Sentence& sentence, const LabelInventory& inventory,
                                    std::vector<Diagnostic>* diagnostics = nullptr);
std::vector<Target> extract_targets(const Corpus& corpus,
                                    std::vector<Diagnostic>* diagnostics = nullptr);

/// Structural invariant checks; empty result means the corpus is well formed.
std::vector<Diagnostic> validate(const Corpus& corpus, const LabelInventory& inventory);

}  // namespace snacs
