// Command-line front end; all functionality goes through the public C API.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "snacs.h"

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { snacs_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

int report(int rc) {
  if (rc != SNACS_OK) std::cerr << "error: " << snacs_last_error() << "\n";
  return rc;
}

using InventoryPtr = std::unique_ptr<snacs_inventory, decltype(&snacs_inventory_free)>;
using CorpusPtr = std::unique_ptr<snacs_corpus, decltype(&snacs_corpus_free)>;
using SplitPtr = std::unique_ptr<snacs_split, decltype(&snacs_split_free)>;

InventoryPtr load_inventory(const std::string& path) {
  snacs_inventory* inv = nullptr;
  int rc;
  if (!path.empty()) {
    rc = snacs_inventory_load(path.c_str(), &inv);
  } else if (const char* env = std::getenv("SNACS_INVENTORY"); env && *env) {
    rc = snacs_inventory_load(env, &inv);
  } else {
    rc = snacs_inventory_builtin(&inv);
  }
  report(rc);
  return InventoryPtr(inv, snacs_inventory_free);
}

CorpusPtr load_corpus(const snacs_inventory* inv, const std::string& path, bool strict = true) {
  snacs_corpus* corpus = nullptr;
  if (inv) report(snacs_corpus_parse_file(inv, path.c_str(), strict ? 1 : 0, &corpus));
  return CorpusPtr(corpus, snacs_corpus_free);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << content;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SNACS corpus toolkit and sequence tagger"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(snacs_version()));

  std::string inventory_path;
  std::string format = "text";
  app.add_option("--inventory", inventory_path,
                 "label inventory config (default: $SNACS_INVENTORY or builtin)");
  app.add_option("--format", format, "output format: text or records")
      ->check(CLI::IsMember({"text", "records"}));

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check corpus invariants");
  std::string validate_corpus;
  cmd_validate->add_option("corpus", validate_corpus, "CoNLL-U-Lex file")->required();

  // stats
  auto* cmd_stats = app.add_subcommand("stats", "corpus summary or label distributions");
  std::string stats_corpus, stats_dist, stats_class;
  cmd_stats->add_option("corpus", stats_corpus)->required();
  cmd_stats->add_option("--distribution", stats_dist,
                        "emit a distribution instead: scene|function|construal|lemma");
  cmd_stats->add_option("--class", stats_class, "restrict to case|emphatic|adposition");

  // entropy
  auto* cmd_entropy = app.add_subcommand("entropy", "per-target semantic-range entropy");
  std::string entropy_corpus, entropy_dim = "scene", entropy_estimator = "chao-shen";
  long entropy_min_n = 20;
  bool entropy_no_specials = false;
  cmd_entropy->add_option("corpus", entropy_corpus)->required();
  cmd_entropy->add_option("--dimension", entropy_dim)->check(CLI::IsMember({"scene", "function", "construal"}));
  cmd_entropy->add_option("--min-n", entropy_min_n, "minimum target instances (default 20)");
  cmd_entropy->add_option("--estimator", entropy_estimator)->check(CLI::IsMember({"chao-shen", "shannon"}));
  cmd_entropy->add_flag("--no-specials", entropy_no_specials, "exclude `d/NONSNACS instances");

  // agree
  auto* cmd_agree = app.add_subcommand("agree", "inter-annotator agreement");
  std::string agree_a, agree_b;
  long agree_min_n = 20;
  cmd_agree->add_option("--a", agree_a, "annotation version A")->required();
  cmd_agree->add_option("--b", agree_b, "annotation version B")->required();
  cmd_agree->add_option("--min-n", agree_min_n, "per-target table threshold (default 20)");

  // bio
  auto* cmd_bio = app.add_subcommand("bio", "BIO encode a corpus (or decode tags)");
  std::string bio_corpus, bio_dim = "scene", bio_decode;
  cmd_bio->add_option("corpus", bio_corpus, "CoNLL-U-Lex file (encode mode)");
  cmd_bio->add_option("--dimension", bio_dim)->check(CLI::IsMember({"scene", "function", "construal"}));
  cmd_bio->add_option("--decode", bio_decode, "decode a FORM<TAB>TAG file to spans");

  // split
  auto* cmd_split = app.add_subcommand("split", "seeded train/dev/test split");
  std::string split_corpus_path, split_prefix;
  double split_train = 0.8, split_dev = 0.1, split_test = 0.1;
  std::uint64_t split_seed = 42;
  cmd_split->add_option("corpus", split_corpus_path)->required();
  cmd_split->add_option("--train", split_train, "train ratio (default 0.8)");
  cmd_split->add_option("--dev", split_dev, "dev ratio (default 0.1)");
  cmd_split->add_option("--test", split_test, "test ratio (default 0.1)");
  cmd_split->add_option("--seed", split_seed, "random seed (default 42)");
  cmd_split->add_option("--out-prefix", split_prefix,
                        "write PREFIX.{train,dev,test}.conllulex files");

  // train-baseline
  auto* cmd_tb = app.add_subcommand("train-baseline", "train the most-frequent-tag baseline");
  std::string tb_train, tb_dim = "scene", tb_model;
  cmd_tb->add_option("--train", tb_train)->required();
  cmd_tb->add_option("--dimension", tb_dim)->check(CLI::IsMember({"scene", "function", "construal"}));
  cmd_tb->add_option("--model", tb_model, "output model path")->required();

  // train-crf
  auto* cmd_tc = app.add_subcommand("train-crf", "train the linear-chain CRF tagger");
  std::string tc_train, tc_dev, tc_dim = "scene", tc_model;
  snacs_crf_params tc_params{0.001, 1e-4, 30, 16, 42};
  bool tc_quiet = false;
  cmd_tc->add_option("--train", tc_train)->required();
  cmd_tc->add_option("--dev", tc_dev)->required();
  cmd_tc->add_option("--dimension", tc_dim)->check(CLI::IsMember({"scene", "function", "construal"}));
  cmd_tc->add_option("--model", tc_model, "output model path")->required();
  cmd_tc->add_option("--lr", tc_params.learning_rate, "learning rate (default 0.001)");
  cmd_tc->add_option("--l2", tc_params.l2, "L2 strength (default 1e-4)");
  cmd_tc->add_option("--epochs", tc_params.epochs, "epochs (default 30)");
  cmd_tc->add_option("--batch", tc_params.batch_size, "mini-batch size (default 16)");
  cmd_tc->add_option("--seed", tc_params.seed, "random seed (default 42)");
  cmd_tc->add_flag("--quiet", tc_quiet, "suppress per-epoch progress");

  // tag
  auto* cmd_tag = app.add_subcommand("tag", "tag a corpus with a trained model");
  std::string tag_model, tag_corpus;
  bool tag_targets_known = false;
  cmd_tag->add_option("--model", tag_model)->required();
  cmd_tag->add_option("corpus", tag_corpus)->required();
  cmd_tag->add_flag("--targets-known", tag_targets_known,
                    "baseline only: keep gold spans, predict labels");

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "score predicted tags against gold");
  std::string eval_gold, eval_pred, eval_dim = "scene";
  cmd_eval->add_option("--gold", eval_gold, "gold FORM<TAB>TAG file")->required();
  cmd_eval->add_option("--pred", eval_pred, "predicted FORM<TAB>TAG file")->required();
  cmd_eval->add_option("--dimension", eval_dim)->check(CLI::IsMember({"scene", "function", "construal"}));

  // repro
  auto* cmd_repro = app.add_subcommand("repro", "summary, entropy table, and baseline scores");
  std::string repro_corpus;
  std::uint64_t repro_seed = 42;
  cmd_repro->add_option("--corpus", repro_corpus)->required();
  cmd_repro->add_option("--seed", repro_seed, "split seed (default 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  auto inv = load_inventory(inventory_path);
  if (!inv) return 1;
  const char* fmt = format.c_str();

  if (cmd_validate->parsed()) {
    auto corpus = load_corpus(inv.get(), validate_corpus, /*strict=*/false);
    if (!corpus) return 1;
    StringOut out;
    int64_t n = 0;
    if (int rc = report(snacs_corpus_validate(corpus.get(), fmt, &out.s, &n))) return rc;
    std::cout << out.str();
    return n == 0 ? 0 : 1;
  }

  if (cmd_stats->parsed()) {
    auto corpus = load_corpus(inv.get(), stats_corpus);
    if (!corpus) return 1;
    StringOut out;
    int rc;
    if (stats_dist.empty())
      rc = snacs_stats_summary(corpus.get(), fmt, &out.s);
    else
      rc = snacs_label_distribution(corpus.get(),
                                    stats_class.empty() ? nullptr : stats_class.c_str(),
                                    stats_dist.c_str(), fmt, &out.s);
    if (report(rc)) return rc;
    std::cout << out.str();
    return 0;
  }

  if (cmd_entropy->parsed()) {
    auto corpus = load_corpus(inv.get(), entropy_corpus);
    if (!corpus) return 1;
    StringOut out;
    if (int rc = report(snacs_entropy_table(corpus.get(), entropy_dim.c_str(), entropy_min_n,
                                            entropy_no_specials ? 0 : 1,
                                            entropy_estimator.c_str(), fmt, &out.s)))
      return rc;
    std::cout << out.str();
    return 0;
  }

  if (cmd_agree->parsed()) {
    auto a = load_corpus(inv.get(), agree_a);
    auto b = load_corpus(inv.get(), agree_b);
    if (!a || !b) return 1;
    StringOut out;
    if (int rc = report(snacs_agreement(a.get(), b.get(), agree_min_n, fmt, &out.s))) return rc;
    std::cout << out.str();
    return 0;
  }

  if (cmd_bio->parsed()) {
    if (!bio_decode.empty()) {
      std::string tagged;
      if (!read_file(bio_decode, tagged)) return 1;
      StringOut out;
      if (int rc = report(snacs_bio_decode(tagged.c_str(), fmt, &out.s))) return rc;
      std::cout << out.str();
      return 0;
    }
    if (bio_corpus.empty()) {
      std::cerr << "error: bio needs a corpus (encode) or --decode FILE\n";
      return 1;
    }
    auto corpus = load_corpus(inv.get(), bio_corpus);
    if (!corpus) return 1;
    StringOut out;
    if (int rc = report(snacs_bio_encode(corpus.get(), bio_dim.c_str(), &out.s))) return rc;
    std::cout << out.str();
    return 0;
  }

  if (cmd_split->parsed()) {
    auto corpus = load_corpus(inv.get(), split_corpus_path);
    if (!corpus) return 1;
    snacs_split* split = nullptr;
    if (int rc = report(snacs_split_corpus(corpus.get(), split_train, split_dev, split_test,
                                           split_seed, &split)))
      return rc;
    SplitPtr split_ptr(split, snacs_split_free);
    if (!split_prefix.empty()) {
      for (const char* bucket : {"train", "dev", "test"}) {
        snacs_corpus* part = nullptr;
        if (int rc = report(snacs_corpus_subset(corpus.get(), split, bucket, &part))) return rc;
        CorpusPtr part_ptr(part, snacs_corpus_free);
        StringOut text;
        if (int rc = report(snacs_corpus_write(part, &text.s))) return rc;
        if (!write_file(split_prefix + "." + bucket + ".conllulex", text.str())) return 1;
      }
    }
    StringOut out;
    if (int rc = report(snacs_split_render(split, fmt, &out.s))) return rc;
    std::cout << out.str();
    return 0;
  }

  if (cmd_tb->parsed()) {
    auto corpus = load_corpus(inv.get(), tb_train);
    if (!corpus) return 1;
    snacs_baseline* model = nullptr;
    if (int rc = report(snacs_baseline_train(corpus.get(), tb_dim.c_str(), &model))) return rc;
    int rc = report(snacs_baseline_save(model, tb_model.c_str()));
    snacs_baseline_free(model);
    return rc;
  }

  if (cmd_tc->parsed()) {
    auto train = load_corpus(inv.get(), tc_train);
    auto dev = load_corpus(inv.get(), tc_dev);
    if (!train || !dev) return 1;
    snacs_crf* model = nullptr;
    if (int rc = report(snacs_crf_train(train.get(), dev.get(), tc_dim.c_str(), &tc_params,
                                        tc_quiet ? 1 : 0, &model)))
      return rc;
    int rc = report(snacs_crf_save(model, tc_model.c_str()));
    snacs_crf_free(model);
    return rc;
  }

  if (cmd_tag->parsed()) {
    auto corpus = load_corpus(inv.get(), tag_corpus);
    if (!corpus) return 1;
    StringOut out;
    snacs_crf* crf = nullptr;
    if (snacs_crf_load(tag_model.c_str(), &crf) == SNACS_OK) {
      int rc = report(snacs_crf_tag(crf, corpus.get(), &out.s));
      snacs_crf_free(crf);
      if (rc) return rc;
    } else {
      snacs_baseline* baseline = nullptr;
      if (int rc = report(snacs_baseline_load(tag_model.c_str(), &baseline))) return rc;
      int rc = report(snacs_baseline_tag(baseline, corpus.get(), tag_targets_known ? 1 : 0,
                                         &out.s));
      snacs_baseline_free(baseline);
      if (rc) return rc;
    }
    std::cout << out.str();
    return 0;
  }

  if (cmd_eval->parsed()) {
    std::string gold, pred;
    if (!read_file(eval_gold, gold) || !read_file(eval_pred, pred)) return 1;
    StringOut out;
    if (int rc = report(snacs_evaluate(gold.c_str(), pred.c_str(), eval_dim.c_str(), fmt,
                                       &out.s)))
      return rc;
    std::cout << out.str();
    return 0;
  }

  if (cmd_repro->parsed()) {
    auto corpus = load_corpus(inv.get(), repro_corpus);
    if (!corpus) return 1;
    StringOut summary;
    if (int rc = report(snacs_stats_summary(corpus.get(), fmt, &summary.s))) return rc;
    std::cout << summary.str();
    StringOut entropy;
    if (int rc = report(snacs_entropy_table(corpus.get(), "scene", 20, 1, "chao-shen", fmt,
                                            &entropy.s)))
      return rc;
    std::cout << entropy.str();

    snacs_split* split = nullptr;
    if (int rc = report(snacs_split_corpus(corpus.get(), 0.8, 0.1, 0.1, repro_seed, &split)))
      return rc;
    SplitPtr split_ptr(split, snacs_split_free);
    snacs_corpus *train = nullptr, *test = nullptr;
    if (int rc = report(snacs_corpus_subset(corpus.get(), split, "train", &train))) return rc;
    CorpusPtr train_ptr(train, snacs_corpus_free);
    if (int rc = report(snacs_corpus_subset(corpus.get(), split, "test", &test))) return rc;
    CorpusPtr test_ptr(test, snacs_corpus_free);

    for (const char* dim : {"scene", "function"}) {
      snacs_baseline* model = nullptr;
      if (int rc = report(snacs_baseline_train(train, dim, &model))) return rc;
      StringOut gold, pred, result;
      int rc = snacs_bio_encode(test, dim, &gold.s);
      if (rc == SNACS_OK) rc = snacs_baseline_tag(model, test, 0, &pred.s);
      if (rc == SNACS_OK) rc = snacs_evaluate(gold.s, pred.s, dim, fmt, &result.s);
      snacs_baseline_free(model);
      if (report(rc)) return rc;
      std::cout << "baseline " << result.str();
    }
    return 0;
  }

  std::cerr << app.help();
  return 1;
}
