#include "conllulex.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "text.hpp"

namespace snacs {

namespace {

bool is_empty_field(const std::string& f) { return f.empty() || f == "_"; }

int parse_int(std::string_view s, const char* what, int line) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(std::string("malformed ") + what + " '" + std::string(s) + "'", line);
  return value;
}

}  // namespace

Token Token::from_fields(std::vector<std::string> f, int line) {
  if (static_cast<int>(f.size()) != kNumColumns)
    throw ParseError("wrong column count: got " + std::to_string(f.size()) + ", expected " +
                         std::to_string(kNumColumns),
                     line);
  Token t;
  t.fields = std::move(f);
  t.id = parse_int(t.fields[0], "token id", line);
  if (t.id <= 0) throw ParseError("token id must be positive", line);
  t.head = is_empty_field(t.fields[6]) ? 0 : parse_int(t.fields[6], "head", line);
  if (t.head < 0) throw ParseError("head must be non-negative", line);
  if (!is_empty_field(t.fields[10])) {
    auto parts = split(t.fields[10], ':');
    if (parts.size() != 2)
      throw ParseError("malformed SMWE field '" + t.fields[10] + "'", line);
    int group = parse_int(parts[0], "SMWE group", line);
    int pos = parse_int(parts[1], "SMWE position", line);
    if (group <= 0 || pos <= 0) throw ParseError("SMWE indices must be positive", line);
    t.smwe = {group, pos};
  }
  if (!is_empty_field(t.fields[11])) t.lexcat = t.fields[11];
  if (!is_empty_field(t.fields[12])) t.lexlemma = t.fields[12];
  const std::string& ss = t.fields[13];
  const std::string& ss2 = t.fields[14];
  if (!is_empty_field(ss) && !is_empty_field(ss2)) {
    t.construal = Construal{Construal::parse(ss).scene, Construal::parse(ss2).scene};
  }
  return t;
}

long Corpus::token_count() const {
  long n = 0;
  for (const auto& s : sentences) n += static_cast<long>(s.tokens.size());
  return n;
}

namespace {

class Parser {
 public:
  Parser(std::istream& in, const LabelInventory& inventory, const ParseOptions& options)
      : in_(in), options_(options) {
    result_.corpus.inventory = inventory;
  }

  ParseResult run() {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) {
        flush_sentence();
        continue;
      }
      if (line[0] == '#') {
        handle_comment(line);
        continue;
      }
      handle_token_line(line);
    }
    flush_sentence();
    return std::move(result_);
  }

 private:
  void diag(std::string rule, std::string message, int token_id = 0) {
    if (options_.strict) throw ParseError(message + " (rule " + rule + ")", lineno_);
    result_.diagnostics.push_back(
        {current_.sent_id, token_id, std::move(rule), std::move(message), lineno_});
  }

  void handle_comment(const std::string& line) {
    current_.comments.push_back(line);
    std::string_view sv = trim(std::string_view(line).substr(1));
    if (starts_with(sv, "sent_id")) {
      size_t eq = sv.find('=');
      if (eq != std::string_view::npos) current_.sent_id = trim(sv.substr(eq + 1));
    } else if (starts_with(sv, "text")) {
      size_t eq = sv.find('=');
      if (eq != std::string_view::npos) current_.text = trim(sv.substr(eq + 1));
    }
    has_content_ = true;
  }

  void handle_token_line(const std::string& line) {
    auto fields = split(line, '\t');
    has_content_ = true;
    if (static_cast<int>(fields.size()) != kNumColumns) {
      diag("column-count", "wrong column count: got " + std::to_string(fields.size()) +
                               ", expected " + std::to_string(kNumColumns) + " at line " +
                               std::to_string(lineno_));
      return;
    }
    Token t;
    try {
      t = Token::from_fields(std::move(fields), lineno_);
    } catch (const ParseError& e) {
      diag("token-field", e.what());
      return;
    }
    int expected = static_cast<int>(current_.tokens.size()) + 1;
    if (t.id != expected)
      diag("token-id", "non-consecutive token id " + std::to_string(t.id) + " (expected " +
                           std::to_string(expected) + ")",
           t.id);
    bool ss_set = !is_empty_field(t.fields[13]);
    bool ss2_set = !is_empty_field(t.fields[14]);
    if (ss_set != ss2_set)
      diag("unpaired-construal",
           "construal with only one member on token " + std::to_string(t.id), t.id);
    if (t.construal) {
      const auto& inv = result_.corpus.inventory;
      for (const std::string& label : {t.construal->scene, t.construal->function})
        if (!inv.has_label(label))
          diag("unknown-label", "label '" + label + "' not in inventory", t.id);
    }
    current_.tokens.push_back(std::move(t));
  }

  void flush_sentence() {
    if (!has_content_) return;
    if (current_.sent_id.empty())
      current_.sent_id = "s" + std::to_string(result_.corpus.sentences.size() + 1);
    if (!current_.tokens.empty() || !current_.comments.empty())
      result_.corpus.sentences.push_back(std::move(current_));
    current_ = Sentence{};
    has_content_ = false;
  }

  std::istream& in_;
  ParseOptions options_;
  ParseResult result_;
  Sentence current_;
  bool has_content_ = false;
  int lineno_ = 0;
};

}  // namespace

ParseResult parse_corpus(std::istream& in, const LabelInventory& inventory,
                         const ParseOptions& options) {
  return Parser(in, inventory, options).run();
}

ParseResult parse_corpus_file(const std::string& path, const LabelInventory& inventory,
                              const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path);
  return parse_corpus(in, inventory, options);
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& sentence : corpus.sentences) {
    for (const auto& comment : sentence.comments) out << comment << '\n';
    for (const auto& token : sentence.tokens) out << join(token.fields, "\t") << '\n';
    out << '\n';
  }
}

std::string write_corpus(const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(out, corpus);
  return out.str();
}

std::vector<Target> extract_targets(const Sentence& sentence, const LabelInventory& inventory,
                                    std::vector<Diagnostic>* diagnostics) {
  std::vector<Target> out;
  auto diag = [&](int token_id, std::string rule, std::string message) {
    if (diagnostics)
      diagnostics->push_back({sentence.sent_id, token_id, std::move(rule), std::move(message), 0});
  };
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& t = sentence.tokens[i];
    if (!t.construal) continue;
    if (t.smwe && t.smwe->second != 1) {
      diag(t.id, "label-on-mwe-continuation",
           "construal on non-initial MWE member " + std::to_string(t.id));
      continue;
    }
    Target target;
    target.sent_id = sentence.sent_id;
    target.construal = *t.construal;
    if (t.smwe) {
      int group = t.smwe->first;
      for (const Token& m : sentence.tokens)
        if (m.smwe && m.smwe->first == group) target.span.push_back(m.id);
    } else {
      target.span.push_back(t.id);
    }
    if (t.lexlemma) {
      target.lemma = *t.lexlemma;
    } else {
      std::vector<std::string> lemmas;
      for (int id : target.span) lemmas.push_back(sentence.tokens[id - 1].lemma());
      target.lemma = join(lemmas, " ");
    }
    if (auto klass = inventory.lookup(target.lemma)) {
      target.klass = *klass;
    } else {
      target.klass = TargetClass::Adposition;
      diag(t.id, "unknown-target-lemma",
           "lemma '" + target.lemma + "' not in target lexicon; classified adposition");
    }
    out.push_back(std::move(target));
  }
  return out;
}

std::vector<Target> extract_targets(const Corpus& corpus, std::vector<Diagnostic>* diagnostics) {
  std::vector<Target> out;
  for (const auto& sentence : corpus.sentences) {
    auto targets = extract_targets(sentence, corpus.inventory, diagnostics);
    out.insert(out.end(), std::make_move_iterator(targets.begin()),
               std::make_move_iterator(targets.end()));
  }
  return out;
}

std::vector<Diagnostic> validate(const Corpus& corpus, const LabelInventory& inventory) {
  std::vector<Diagnostic> out;
  std::set<std::string> seen_ids;
  for (const auto& sentence : corpus.sentences) {
    auto diag = [&](int token_id, std::string rule, std::string message) {
      out.push_back({sentence.sent_id, token_id, std::move(rule), std::move(message), 0});
    };
    if (!seen_ids.insert(sentence.sent_id).second)
      diag(0, "duplicate-sent-id", "sent_id '" + sentence.sent_id + "' not unique");
    for (size_t i = 0; i < sentence.tokens.size(); ++i) {
      const Token& t = sentence.tokens[i];
      if (t.id != static_cast<int>(i) + 1)
        diag(t.id, "token-id", "token id " + std::to_string(t.id) +
                                   " does not match position " + std::to_string(i + 1));
      bool ss_set = !(t.fields[13].empty() || t.fields[13] == "_");
      bool ss2_set = !(t.fields[14].empty() || t.fields[14] == "_");
      if (ss_set != ss2_set)
        diag(t.id, "unpaired-construal", "construal with only one member");
      if (t.smwe && t.smwe->second > 1 && t.construal)
        diag(t.id, "label-on-mwe-continuation", "construal on non-initial MWE member");
      if (t.construal) {
        for (const std::string& label : {t.construal->scene, t.construal->function})
          if (!inventory.has_label(label))
            diag(t.id, "unknown-label", "label '" + label + "' not in inventory");
        if (inventory.specials.count(t.construal->scene) && !t.construal->congruent())
          diag(t.id, "special-construal",
               "special scene label '" + t.construal->scene + "' must equal the function");
      }
    }
    // MWE groups must be contiguous spans with positions 1..k.
    std::map<int, std::vector<std::pair<int, int>>> groups;  // group -> (token id, pos)
    for (const Token& t : sentence.tokens)
      if (t.smwe) groups[t.smwe->first].push_back({t.id, t.smwe->second});
    for (const auto& [group, members] : groups) {
      for (size_t k = 0; k < members.size(); ++k) {
        if (members[k].second != static_cast<int>(k) + 1 ||
            (k > 0 && members[k].first != members[k - 1].first + 1)) {
          out.push_back({sentence.sent_id, members[k].first, "mwe-span",
                         "MWE group " + std::to_string(group) + " is not a contiguous span", 0});
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace snacs
