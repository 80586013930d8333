#include "snacs.h"

#include <cstring>
#include <iostream>
#include <sstream>
#include <string>

#include "agreement.hpp"
#include "baseline.hpp"
#include "bio.hpp"
#include "conllulex.hpp"
#include "crf.hpp"
#include "eval.hpp"
#include "render.hpp"
#include "stats.hpp"

using namespace snacs;

struct snacs_inventory {
  LabelInventory inv;
};
struct snacs_corpus {
  Corpus corpus;
};
struct snacs_split {
  Split split;
};
struct snacs_baseline {
  BaselineModel model;
};
struct snacs_crf {
  CrfModel model;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, mapping exceptions onto status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(SNACS_ERR_INPUT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SNACS_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(SNACS_ERR_INTERNAL, e.what());
  }
}

int parse_format(const char* format, OutputFormat* out) {
  auto f = output_format_from_string(format ? format : "text");
  if (!f) return fail(SNACS_ERR_INPUT, std::string("unknown format '") + format + "'");
  *out = *f;
  return SNACS_OK;
}

int parse_dim(const char* dimension, LabelDim* out) {
  auto d = label_dim_from_string(dimension ? dimension : "scene");
  if (!d) return fail(SNACS_ERR_INPUT, std::string("unknown dimension '") + dimension + "'");
  *out = *d;
  return SNACS_OK;
}

}  // namespace

extern "C" {

const char* snacs_version(void) { return "0.1.0"; }

const char* snacs_last_error(void) { return g_last_error.c_str(); }

void snacs_string_free(char* s) { std::free(s); }

int snacs_inventory_builtin(snacs_inventory** out) {
  return guarded([&] {
    *out = new snacs_inventory{LabelInventory::builtin()};
    return SNACS_OK;
  });
}

int snacs_inventory_load(const char* path, snacs_inventory** out) {
  return guarded([&] {
    *out = new snacs_inventory{LabelInventory::load_file(path)};
    return SNACS_OK;
  });
}

int snacs_inventory_parse(const char* config_text, snacs_inventory** out) {
  return guarded([&] {
    std::istringstream in(config_text ? config_text : "");
    *out = new snacs_inventory{LabelInventory::parse(in)};
    return SNACS_OK;
  });
}

const char* snacs_inventory_builtin_text(void) { return builtin_inventory_text().c_str(); }

void snacs_inventory_free(snacs_inventory* inv) { delete inv; }

int snacs_corpus_parse_file(const snacs_inventory* inv, const char* path, int strict,
                            snacs_corpus** out) {
  return guarded([&] {
    if (!inv) return fail(SNACS_ERR_INPUT, "null inventory");
    auto result = parse_corpus_file(path, inv->inv, ParseOptions{strict != 0});
    *out = new snacs_corpus{std::move(result.corpus)};
    return SNACS_OK;
  });
}

int snacs_corpus_parse_text(const snacs_inventory* inv, const char* text, int strict,
                            snacs_corpus** out) {
  return guarded([&] {
    if (!inv) return fail(SNACS_ERR_INPUT, "null inventory");
    std::istringstream in(text ? text : "");
    auto result = parse_corpus(in, inv->inv, ParseOptions{strict != 0});
    *out = new snacs_corpus{std::move(result.corpus)};
    return SNACS_OK;
  });
}

int snacs_corpus_write(const snacs_corpus* corpus, char** out) {
  return guarded([&] {
    if (!corpus) return fail(SNACS_ERR_INPUT, "null corpus");
    *out = dup_string(write_corpus(corpus->corpus));
    return SNACS_OK;
  });
}

int64_t snacs_corpus_sentences(const snacs_corpus* corpus) {
  return corpus ? static_cast<int64_t>(corpus->corpus.sentences.size()) : -1;
}

int64_t snacs_corpus_tokens(const snacs_corpus* corpus) {
  return corpus ? corpus->corpus.token_count() : -1;
}

int64_t snacs_corpus_targets(const snacs_corpus* corpus) {
  if (!corpus) return -1;
  return static_cast<int64_t>(extract_targets(corpus->corpus).size());
}

void snacs_corpus_free(snacs_corpus* corpus) { delete corpus; }

int snacs_corpus_validate(const snacs_corpus* corpus, const char* format, char** out,
                          int64_t* n_diagnostics) {
  return guarded([&] {
    if (!corpus) return fail(SNACS_ERR_INPUT, "null corpus");
    OutputFormat f;
    if (int rc = parse_format(format, &f)) return rc;
    auto diagnostics = validate(corpus->corpus, corpus->corpus.inventory);
    if (n_diagnostics) *n_diagnostics = static_cast<int64_t>(diagnostics.size());
    if (out) *out = dup_string(render_diagnostics(diagnostics, f));
    return SNACS_OK;
  });
}

int snacs_stats_summary(const snacs_corpus* corpus, const char* format, char** out) {
  return guarded([&] {
    if (!corpus) return fail(SNACS_ERR_INPUT, "null corpus");
    OutputFormat f;
    if (int rc = parse_format(format, &f)) return rc;
    *out = dup_string(render_summary(corpus_summary(corpus->corpus), f));
    return SNACS_OK;
  });
}

int snacs_label_distribution(const snacs_corpus* corpus, const char* klass,
                             const char* dimension, const char* format, char** out) {
  return guarded([&] {
    if (!corpus) return fail(SNACS_ERR_INPUT, "null corpus");
    OutputFormat f;
    if (int rc = parse_format(format, &f)) return rc;
    auto key = DistKey::from_string(dimension ? dimension : "scene");
    if (!key) return fail(SNACS_ERR_INPUT, std::string("unknown dimension '") + dimension + "'");
    std::optional<TargetClass> filter;
    if (klass && *klass) {
      filter = target_class_from_string(klass);
      if (!filter) return fail(SNACS_ERR_INPUT, std::string("unknown class '") + klass + "'");
    }
    auto targets = extract_targets(corpus->corpus);
    auto dist = distribution_from_targets(targets, filter, *key);
    std::string title = std::string(key->name());
    if (filter) title = std::string(to_string(*filter)) + " " + title;
    *out = dup_string(
        render_distribution(dist, title, static_cast<long>(targets.size()), f));
    return SNACS_OK;
  });
}

int snacs_entropy_table(const snacs_corpus* corpus, const char* dimension, int64_t min_n,
                        int include_specials, const char* estimator, const char* format,
                        char** out) {
  return guarded([&] {
    if (!corpus) return fail(SNACS_ERR_INPUT, "null corpus");
    OutputFormat f;
    if (int rc = parse_format(format, &f)) return rc;
    EntropyOptions options;
    if (int rc = parse_dim(dimension, &options.dimension)) return rc;
    options.min_n = min_n;
    options.include_specials = include_specials != 0;
    std::string est = estimator ? estimator : "chao-shen";
    if (est == "chao-shen")
      options.estimator = EntropyEstimator::ChaoShen;
    else if (est == "shannon")
      options.estimator = EntropyEstimator::Shannon;
    else
      return fail(SNACS_ERR_INPUT, "unknown estimator '" + est + "'");
    *out = dup_string(render_entropy_table(target_entropy_table(corpus->corpus, options), f));
    return SNACS_OK;
  });
}

int snacs_agreement(const snacs_corpus* a, const snacs_corpus* b, int64_t min_n,
                    const char* format, char** out) {
  return guarded([&] {
    if (!a || !b) return fail(SNACS_ERR_INPUT, "null corpus");
    OutputFormat f;
    if (int rc = parse_format(format, &f)) return rc;
    auto pairs = align_double_annotations(a->corpus, b->corpus);
    if (pairs.empty()) return fail(SNACS_ERR_INPUT, "no doubly-annotated targets");
    *out = dup_string(render_agreement(
        cohens_kappa(pairs, LabelDim::Scene), cohens_kappa(pairs, LabelDim::Function),
        cohens_kappa(pairs, LabelDim::Construal), per_lemma_agreement(pairs, min_n),
        static_cast<long>(pairs.size()), f));
    return SNACS_OK;
  });
}

int snacs_bio_encode(const snacs_corpus* corpus, const char* dimension, char** out) {
  return guarded([&] {
    if (!corpus) return fail(SNACS_ERR_INPUT, "null corpus");
    LabelDim dim;
    if (int rc = parse_dim(dimension, &dim)) return rc;
    std::vector<TaggedSentence> tagged;
    for (const Sentence& s : corpus->corpus.sentences) {
      TaggedSentence ts;
      for (const Token& t : s.tokens) ts.forms.push_back(t.form());
      ts.tags = encode_bio(s, corpus->corpus.inventory, dim);
      tagged.push_back(std::move(ts));
    }
    *out = dup_string(write_tagged(tagged));
    return SNACS_OK;
  });
}

int snacs_bio_decode(const char* tagged_text, const char* format, char** out) {
  return guarded([&] {
    OutputFormat f;
    if (int rc = parse_format(format, &f)) return rc;
    std::istringstream in(tagged_text ? tagged_text : "");
    auto sentences = read_tagged(in);
    std::ostringstream text;
    nlohmann::ordered_json docs = nlohmann::ordered_json::array();
    for (size_t i = 0; i < sentences.size(); ++i) {
      auto result = decode_bio(sentences[i].tags);
      if (f == OutputFormat::Text) {
        text << "sentence " << i + 1 << ": " << result.spans.size() << " spans, "
             << result.repairs << " repairs\n";
        for (const auto& span : result.spans)
          text << "  [" << span.start + 1 << ".." << span.start + span.length << "] "
               << span.label << "\n";
      } else {
        nlohmann::ordered_json spans = nlohmann::ordered_json::array();
        for (const auto& span : result.spans)
          spans.push_back(
              {{"start", span.start + 1}, {"length", span.length}, {"label", span.label}});
        docs.push_back({{"sentence", i + 1}, {"repairs", result.repairs}, {"spans", spans}});
      }
    }
    if (f == OutputFormat::Text)
      *out = dup_string(text.str());
    else
      *out = dup_string(nlohmann::ordered_json{{"table", "spans"}, {"rows", docs}}.dump() + "\n");
    return SNACS_OK;
  });
}

int snacs_split_corpus(const snacs_corpus* corpus, double train, double dev, double test,
                       uint64_t seed, snacs_split** out) {
  return guarded([&] {
    if (!corpus) return fail(SNACS_ERR_INPUT, "null corpus");
    *out = new snacs_split{split_corpus(corpus->corpus, SplitRatios{train, dev, test}, seed)};
    return SNACS_OK;
  });
}

int snacs_split_render(const snacs_split* split, const char* format, char** out) {
  return guarded([&] {
    if (!split) return fail(SNACS_ERR_INPUT, "null split");
    OutputFormat f;
    if (int rc = parse_format(format, &f)) return rc;
    *out = dup_string(render_split(split->split, f));
    return SNACS_OK;
  });
}

int snacs_corpus_subset(const snacs_corpus* corpus, const snacs_split* split,
                        const char* bucket, snacs_corpus** out) {
  return guarded([&] {
    if (!corpus || !split) return fail(SNACS_ERR_INPUT, "null corpus or split");
    Bucket b;
    std::string name = bucket ? bucket : "";
    if (name == "train")
      b = Bucket::Train;
    else if (name == "dev")
      b = Bucket::Dev;
    else if (name == "test")
      b = Bucket::Test;
    else
      return fail(SNACS_ERR_INPUT, "unknown bucket '" + name + "'");
    *out = new snacs_corpus{subset(corpus->corpus, split->split, b)};
    return SNACS_OK;
  });
}

void snacs_split_free(snacs_split* split) { delete split; }

int snacs_baseline_train(const snacs_corpus* train, const char* dimension,
                         snacs_baseline** out) {
  return guarded([&] {
    if (!train) return fail(SNACS_ERR_INPUT, "null corpus");
    LabelDim dim;
    if (int rc = parse_dim(dimension, &dim)) return rc;
    *out = new snacs_baseline{train_baseline(train->corpus, dim)};
    return SNACS_OK;
  });
}

int snacs_baseline_save(const snacs_baseline* model, const char* path) {
  return guarded([&] {
    if (!model) return fail(SNACS_ERR_INPUT, "null model");
    model->model.save(path);
    return SNACS_OK;
  });
}

int snacs_baseline_load(const char* path, snacs_baseline** out) {
  return guarded([&] {
    *out = new snacs_baseline{BaselineModel::load(path)};
    return SNACS_OK;
  });
}

int snacs_baseline_tag(const snacs_baseline* model, const snacs_corpus* corpus,
                       int targets_known, char** out) {
  return guarded([&] {
    if (!model || !corpus) return fail(SNACS_ERR_INPUT, "null model or corpus");
    std::vector<TaggedSentence> tagged;
    for (const Sentence& s : corpus->corpus.sentences) {
      TaggedSentence ts;
      for (const Token& t : s.tokens) ts.forms.push_back(t.form());
      ts.tags = baseline_tag(model->model, s, targets_known != 0, corpus->corpus.inventory);
      tagged.push_back(std::move(ts));
    }
    *out = dup_string(write_tagged(tagged));
    return SNACS_OK;
  });
}

void snacs_baseline_free(snacs_baseline* model) { delete model; }

int snacs_crf_train(const snacs_corpus* train, const snacs_corpus* dev,
                    const char* dimension, const snacs_crf_params* params, int quiet,
                    snacs_crf** out) {
  return guarded([&] {
    if (!train || !dev) return fail(SNACS_ERR_INPUT, "null corpus");
    CrfConfig config;
    if (int rc = parse_dim(dimension, &config.dimension)) return rc;
    if (params) {
      config.learning_rate = params->learning_rate;
      config.l2 = params->l2;
      config.epochs = static_cast<int>(params->epochs);
      config.batch_size = static_cast<int>(params->batch_size);
      config.seed = params->seed;
    }
    EpochLogger logger;
    if (!quiet)
      logger = [](int epoch, double nll, double f1, bool is_best) {
        std::cerr << "epoch " << epoch << "  nll " << nll << "  dev F1 " << f1
                  << (is_best ? "  *" : "") << "\n";
      };
    *out = new snacs_crf{train_crf(train->corpus, dev->corpus, config, logger)};
    return SNACS_OK;
  });
}

int snacs_crf_save(const snacs_crf* model, const char* path) {
  return guarded([&] {
    if (!model) return fail(SNACS_ERR_INPUT, "null model");
    model->model.save(path);
    return SNACS_OK;
  });
}

int snacs_crf_load(const char* path, snacs_crf** out) {
  return guarded([&] {
    *out = new snacs_crf{CrfModel::load(path)};
    return SNACS_OK;
  });
}

int snacs_crf_tag(const snacs_crf* model, const snacs_corpus* corpus, char** out) {
  return guarded([&] {
    if (!model || !corpus) return fail(SNACS_ERR_INPUT, "null model or corpus");
    auto sequences = crf_tag(model->model, corpus->corpus);
    std::vector<TaggedSentence> tagged;
    for (size_t i = 0; i < sequences.size(); ++i) {
      TaggedSentence ts;
      for (const Token& t : corpus->corpus.sentences[i].tokens) ts.forms.push_back(t.form());
      ts.tags = std::move(sequences[i]);
      tagged.push_back(std::move(ts));
    }
    *out = dup_string(write_tagged(tagged));
    return SNACS_OK;
  });
}

void snacs_crf_free(snacs_crf* model) { delete model; }

int snacs_evaluate(const char* gold_tagged, const char* pred_tagged, const char* dimension,
                   const char* format, char** out) {
  return guarded([&] {
    OutputFormat f;
    if (int rc = parse_format(format, &f)) return rc;
    LabelDim dim;
    if (int rc = parse_dim(dimension, &dim)) return rc;
    std::istringstream gin(gold_tagged ? gold_tagged : "");
    std::istringstream pin(pred_tagged ? pred_tagged : "");
    auto gold = read_tagged(gin);
    auto pred = read_tagged(pin);
    std::vector<TagSequence> gseq, pseq;
    for (auto& s : gold) gseq.push_back(std::move(s.tags));
    int repairs = 0;
    for (auto& s : pred) {
      repairs += decode_bio(s.tags).repairs;
      pseq.push_back(std::move(s.tags));
    }
    auto report = evaluate(gseq, pseq, dim);
    report.repairs = repairs;
    *out = dup_string(render_eval(report, f));
    return SNACS_OK;
  });
}

}  // extern "C"
