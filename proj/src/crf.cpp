#include "crf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "eval.hpp"
#include "serialize.hpp"

namespace snacs {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double logsumexp(const std::vector<double>& xs, int n) {
  double m = kNegInf;
  for (int i = 0; i < n; ++i) m = std::max(m, xs[i]);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    if (xs[i] != kNegInf) s += std::exp(xs[i] - m);
  return m + std::log(s);
}

constexpr char kMagic[] = "snacs-crf 1\n";

}  // namespace

CrfModel CrfModel::init(std::vector<std::string> b_labels, Alphabet features,
                        const CrfConfig& config) {
  CrfModel m;
  m.labels.intern("O");
  m.labels.intern("I");
  std::sort(b_labels.begin(), b_labels.end());
  for (const auto& label : b_labels) m.labels.intern("B-" + label);
  m.features = std::move(features);
  m.config = config;
  const int L = m.num_labels();
  m.emit.assign(static_cast<size_t>(m.num_features()) * L, 0.0);
  m.trans.assign(static_cast<size_t>(L) * L, 0.0);
  m.start.assign(L, 0.0);
  m.stop.assign(L, 0.0);
  m.apply_masks();
  return m;
}

void CrfModel::apply_masks() {
  const int L = num_labels();
  const int o = labels.lookup("O");
  const int i = labels.lookup("I");
  if (i < 0) return;
  start[i] = kNegInf;
  if (o >= 0) trans[static_cast<size_t>(o) * L + i] = kNegInf;
}

namespace {

// Emission scores for every position: out[t*L + y].
void emission_scores(const CrfModel& model, const FeatureSeq& features,
                     std::vector<double>& out) {
  const int L = model.num_labels();
  const int T = static_cast<int>(features.size());
  out.assign(static_cast<size_t>(T) * L, 0.0);
  for (int t = 0; t < T; ++t) {
    double* row = out.data() + static_cast<size_t>(t) * L;
    for (const auto& [f, v] : features[t]) {
      if (f < 0 || f >= model.num_features())
        throw std::invalid_argument("feature id outside alphabet: " + std::to_string(f));
      const double* w = model.emit.data() + static_cast<size_t>(f) * L;
      for (int y = 0; y < L; ++y) row[y] += w[y] * v;
    }
  }
}

struct ForwardBackward {
  std::vector<double> scores;  // T x L emissions
  std::vector<double> alpha;   // T x L
  std::vector<double> beta;    // T x L
  double log_z = 0.0;
};

void run_forward_backward(const CrfModel& model, const FeatureSeq& features,
                          ForwardBackward& fb) {
  const int L = model.num_labels();
  const int T = static_cast<int>(features.size());
  emission_scores(model, features, fb.scores);
  fb.alpha.assign(static_cast<size_t>(T) * L, kNegInf);
  fb.beta.assign(static_cast<size_t>(T) * L, kNegInf);
  std::vector<double> tmp(L);
  for (int y = 0; y < L; ++y)
    fb.alpha[y] = model.start[y] + fb.scores[y];
  for (int t = 1; t < T; ++t) {
    const double* prev = fb.alpha.data() + static_cast<size_t>(t - 1) * L;
    double* cur = fb.alpha.data() + static_cast<size_t>(t) * L;
    for (int y = 0; y < L; ++y) {
      for (int p = 0; p < L; ++p) tmp[p] = prev[p] + model.trans[static_cast<size_t>(p) * L + y];
      cur[y] = logsumexp(tmp, L) + fb.scores[static_cast<size_t>(t) * L + y];
    }
  }
  double* last = fb.beta.data() + static_cast<size_t>(T - 1) * L;
  for (int y = 0; y < L; ++y) last[y] = model.stop[y];
  for (int t = T - 2; t >= 0; --t) {
    const double* next = fb.beta.data() + static_cast<size_t>(t + 1) * L;
    double* cur = fb.beta.data() + static_cast<size_t>(t) * L;
    for (int y = 0; y < L; ++y) {
      for (int n = 0; n < L; ++n)
        tmp[n] = model.trans[static_cast<size_t>(y) * L + n] +
                 fb.scores[static_cast<size_t>(t + 1) * L + n] + next[n];
      cur[y] = logsumexp(tmp, L);
    }
  }
  for (int y = 0; y < L; ++y)
    tmp[y] = fb.alpha[static_cast<size_t>(T - 1) * L + y] + model.stop[y];
  fb.log_z = logsumexp(tmp, L);
}

}  // namespace

double crf_log_partition(const CrfModel& model, const FeatureSeq& features) {
  if (features.empty()) return 0.0;
  ForwardBackward fb;
  run_forward_backward(model, features, fb);
  return fb.log_z;
}

double crf_sequence_score(const CrfModel& model, const FeatureSeq& features,
                          const std::vector<int>& labels) {
  if (features.size() != labels.size())
    throw std::invalid_argument("feature/label length mismatch");
  if (features.empty()) return 0.0;
  const int L = model.num_labels();
  std::vector<double> scores;
  emission_scores(model, features, scores);
  const int T = static_cast<int>(features.size());
  double s = model.start[labels[0]] + scores[labels[0]];
  for (int t = 1; t < T; ++t)
    s += model.trans[static_cast<size_t>(labels[t - 1]) * L + labels[t]] +
         scores[static_cast<size_t>(t) * L + labels[t]];
  s += model.stop[labels[T - 1]];
  return s;
}

CrfGradient crf_loglik_grad(const CrfModel& model,
                            const std::vector<const TrainingInstance*>& batch) {
  const int L = model.num_labels();
  CrfGradient g;
  g.emit.assign(model.emit.size(), 0.0);
  g.trans.assign(model.trans.size(), 0.0);
  g.start.assign(model.start.size(), 0.0);
  g.stop.assign(model.stop.size(), 0.0);

  ForwardBackward fb;
  for (const TrainingInstance* inst : batch) {
    const int T = static_cast<int>(inst->features.size());
    if (T == 0) continue;
    if (static_cast<int>(inst->gold.size()) != T)
      throw std::invalid_argument("gold sequence length mismatch");
    for (int y : inst->gold)
      if (y < 0 || y >= L) throw std::invalid_argument("gold label id outside alphabet");

    run_forward_backward(model, inst->features, fb);
    double gold = crf_sequence_score(model, inst->features, inst->gold);
    if (!(gold > kNegInf))
      throw std::invalid_argument("gold sequence violates structural masks");
    g.nll += fb.log_z - gold;

    // node marginals into emissions / start / stop
    for (int t = 0; t < T; ++t) {
      const double* a = fb.alpha.data() + static_cast<size_t>(t) * L;
      const double* b = fb.beta.data() + static_cast<size_t>(t) * L;
      for (const auto& [f, v] : inst->features[t]) {
        double* row = g.emit.data() + static_cast<size_t>(f) * L;
        for (int y = 0; y < L; ++y) {
          double m = a[y] + b[y] - fb.log_z;
          if (m != kNegInf) row[y] += std::exp(m) * v;
        }
        row[inst->gold[t]] -= v;
      }
    }
    for (int y = 0; y < L; ++y) {
      double m0 = fb.alpha[y] + fb.beta[y] - fb.log_z;
      if (m0 != kNegInf) g.start[y] += std::exp(m0);
      double mt = fb.alpha[static_cast<size_t>(T - 1) * L + y] + model.stop[y] - fb.log_z;
      if (mt != kNegInf) g.stop[y] += std::exp(mt);
    }
    g.start[inst->gold[0]] -= 1.0;
    g.stop[inst->gold[T - 1]] -= 1.0;

    // edge marginals into transitions
    for (int t = 0; t + 1 < T; ++t) {
      const double* a = fb.alpha.data() + static_cast<size_t>(t) * L;
      const double* b = fb.beta.data() + static_cast<size_t>(t + 1) * L;
      const double* sc = fb.scores.data() + static_cast<size_t>(t + 1) * L;
      for (int p = 0; p < L; ++p) {
        if (a[p] == kNegInf) continue;
        for (int y = 0; y < L; ++y) {
          double tr = model.trans[static_cast<size_t>(p) * L + y];
          if (tr == kNegInf) continue;
          double m = a[p] + tr + sc[y] + b[y] - fb.log_z;
          g.trans[static_cast<size_t>(p) * L + y] += std::exp(m);
        }
      }
      g.trans[static_cast<size_t>(inst->gold[t]) * L + inst->gold[t + 1]] -= 1.0;
    }
  }

  // L2 over unmasked weights
  const double l2 = model.config.l2;
  if (l2 != 0.0) {
    auto reg = [&](const std::vector<double>& w, std::vector<double>& gw) {
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == kNegInf) continue;
        g.nll += 0.5 * l2 * w[i] * w[i];
        gw[i] += l2 * w[i];
      }
    };
    reg(model.emit, g.emit);
    reg(model.trans, g.trans);
    reg(model.start, g.start);
    reg(model.stop, g.stop);
  }
  // zero gradient on masked entries
  for (size_t i = 0; i < model.trans.size(); ++i)
    if (model.trans[i] == kNegInf) g.trans[i] = 0.0;
  for (size_t i = 0; i < model.start.size(); ++i)
    if (model.start[i] == kNegInf) g.start[i] = 0.0;
  return g;
}

std::vector<int> viterbi_decode_ids(const CrfModel& model, const FeatureSeq& features) {
  const int L = model.num_labels();
  const int T = static_cast<int>(features.size());
  if (T == 0) return {};
  std::vector<double> scores;
  emission_scores(model, features, scores);
  std::vector<double> delta(static_cast<size_t>(T) * L, kNegInf);
  std::vector<int> back(static_cast<size_t>(T) * L, 0);
  for (int y = 0; y < L; ++y) delta[y] = model.start[y] + scores[y];
  for (int t = 1; t < T; ++t) {
    const double* prev = delta.data() + static_cast<size_t>(t - 1) * L;
    for (int y = 0; y < L; ++y) {
      double best = kNegInf;
      int arg = 0;
      for (int p = 0; p < L; ++p) {
        double cand = prev[p] + model.trans[static_cast<size_t>(p) * L + y];
        if (cand > best) {  // strict: ties keep the lowest index
          best = cand;
          arg = p;
        }
      }
      delta[static_cast<size_t>(t) * L + y] = best + scores[static_cast<size_t>(t) * L + y];
      back[static_cast<size_t>(t) * L + y] = arg;
    }
  }
  double best = kNegInf;
  int arg = 0;
  for (int y = 0; y < L; ++y) {
    double cand = delta[static_cast<size_t>(T - 1) * L + y] + model.stop[y];
    if (cand > best) {
      best = cand;
      arg = y;
    }
  }
  std::vector<int> out(T);
  out[T - 1] = arg;
  for (int t = T - 1; t > 0; --t) out[t - 1] = back[static_cast<size_t>(t) * L + out[t]];
  return out;
}

TagSequence viterbi_decode(const CrfModel& model, const FeatureSeq& features) {
  TagSequence seq;
  seq.unit = TagSequence::Unit::Token;
  for (int id : viterbi_decode_ids(model, features))
    seq.tags.push_back(Tag::parse(model.labels.items[id]));
  return seq;
}

FeatureSeq featurize(const FeatureExtractor& extractor, const Sentence& sentence,
                     const Alphabet& alphabet) {
  FeatureSeq seq;
  seq.reserve(sentence.tokens.size());
  for (int t = 0; t < static_cast<int>(sentence.tokens.size()); ++t) {
    FeatureVec vec;
    for (const RawFeature& rf : extractor.extract(sentence, t)) {
      int id = alphabet.lookup(rf.name);
      if (id >= 0) vec.push_back({id, rf.value});
    }
    seq.push_back(std::move(vec));
  }
  return seq;
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (~bound + 1) % bound;
  while (true) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

CrfModel train_crf(const Corpus& train, const Corpus& dev, const CrfConfig& config,
                   const EpochLogger& log) {
  if (train.sentences.empty()) throw std::invalid_argument("empty training corpus");
  FeatureExtractor extractor(&train.inventory);

  // alphabets: labels sorted, features in first-seen order
  std::set<std::string> b_labels;
  std::vector<std::vector<Tag>> gold_tags;
  for (const Sentence& s : train.sentences) {
    auto seq = encode_bio(s, train.inventory, config.dimension);
    for (const Tag& tag : seq.tags)
      if (tag.kind == Tag::B) b_labels.insert(tag.label);
    gold_tags.push_back(std::move(seq.tags));
  }
  Alphabet features;
  for (const Sentence& s : train.sentences)
    for (int t = 0; t < static_cast<int>(s.tokens.size()); ++t)
      for (const RawFeature& rf : extractor.extract(s, t)) features.intern(rf.name);

  CrfModel model = CrfModel::init({b_labels.begin(), b_labels.end()}, std::move(features),
                                  config);

  std::vector<TrainingInstance> instances;
  instances.reserve(train.sentences.size());
  for (size_t i = 0; i < train.sentences.size(); ++i) {
    TrainingInstance inst;
    inst.features = featurize(extractor, train.sentences[i], model.features);
    for (const Tag& tag : gold_tags[i]) inst.gold.push_back(model.labels.lookup(tag.text()));
    instances.push_back(std::move(inst));
  }

  std::vector<TagSequence> dev_gold;
  for (const Sentence& s : dev.sentences)
    dev_gold.push_back(encode_bio(s, dev.inventory, config.dimension));

  auto dev_f1 = [&]() {
    if (dev.sentences.empty()) return 0.0;
    std::vector<TagSequence> pred;
    for (const Sentence& s : dev.sentences)
      pred.push_back(viterbi_decode(model, featurize(extractor, s, model.features)));
    return evaluate(dev_gold, pred, config.dimension).f1();
  };

  std::mt19937_64 rng(config.seed);
  std::vector<size_t> order(instances.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  double best_f1 = -1.0;
  int best_epoch = -1;
  CrfModel best = model;
  const int batch_size = std::max(1, config.batch_size);
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    for (size_t i = order.size() - 1; i > 0; --i) {
      size_t j = bounded(rng, i + 1);
      std::swap(order[i], order[j]);
    }
    double epoch_nll = 0.0;
    for (size_t pos = 0; pos < order.size(); pos += batch_size) {
      std::vector<const TrainingInstance*> batch;
      for (size_t k = pos; k < std::min(order.size(), pos + batch_size); ++k)
        batch.push_back(&instances[order[k]]);
      CrfGradient g = crf_loglik_grad(model, batch);
      if (!std::isfinite(g.nll))
        throw std::runtime_error("non-finite loss at epoch " + std::to_string(epoch));
      epoch_nll += g.nll;
      const double lr = config.learning_rate;
      auto step = [&](std::vector<double>& w, const std::vector<double>& gw) {
        for (size_t i2 = 0; i2 < w.size(); ++i2)
          if (w[i2] != -std::numeric_limits<double>::infinity()) w[i2] -= lr * gw[i2];
      };
      step(model.emit, g.emit);
      step(model.trans, g.trans);
      step(model.start, g.start);
      step(model.stop, g.stop);
    }
    double f1 = dev_f1();
    bool is_best = f1 > best_f1;
    if (is_best) {
      best_f1 = f1;
      best_epoch = epoch;
      best = model;
    }
    if (log) log(epoch, epoch_nll, f1, is_best);
  }
  (void)best_epoch;
  return best;
}

std::vector<TagSequence> crf_tag(const CrfModel& model, const Corpus& corpus) {
  FeatureExtractor extractor(&corpus.inventory);
  std::vector<TagSequence> out;
  for (const Sentence& s : corpus.sentences)
    out.push_back(viterbi_decode(model, featurize(extractor, s, model.features)));
  return out;
}

void CrfModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out.write(kMagic, sizeof(kMagic) - 1);
  io::put_string(out, to_string(config.dimension));
  io::put_f64(out, config.learning_rate);
  io::put_f64(out, config.l2);
  io::put_u64(out, static_cast<std::uint64_t>(config.epochs));
  io::put_u64(out, static_cast<std::uint64_t>(config.batch_size));
  io::put_u64(out, config.seed);
  io::put_u64(out, static_cast<std::uint64_t>(labels.size()));
  for (const auto& s : labels.items) io::put_string(out, s);
  io::put_u64(out, static_cast<std::uint64_t>(features.size()));
  for (const auto& s : features.items) io::put_string(out, s);
  io::put_f64_vec(out, emit);
  io::put_f64_vec(out, trans);
  io::put_f64_vec(out, start);
  io::put_f64_vec(out, stop);
}

CrfModel CrfModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::string magic(sizeof(kMagic) - 1, '\0');
  in.read(magic.data(), static_cast<std::streamsize>(magic.size()));
  if (magic != kMagic) throw std::runtime_error("not a CRF model file: " + path);
  CrfModel m;
  auto dim = label_dim_from_string(io::get_string(in));
  if (!dim) throw std::runtime_error("bad dimension in model file");
  m.config.dimension = *dim;
  m.config.learning_rate = io::get_f64(in);
  m.config.l2 = io::get_f64(in);
  m.config.epochs = static_cast<int>(io::get_u64(in));
  m.config.batch_size = static_cast<int>(io::get_u64(in));
  m.config.seed = io::get_u64(in);
  std::uint64_t n_labels = io::get_u64(in);
  for (std::uint64_t i = 0; i < n_labels; ++i) m.labels.intern(io::get_string(in));
  std::uint64_t n_features = io::get_u64(in);
  for (std::uint64_t i = 0; i < n_features; ++i) m.features.intern(io::get_string(in));
  m.emit = io::get_f64_vec(in);
  m.trans = io::get_f64_vec(in);
  m.start = io::get_f64_vec(in);
  m.stop = io::get_f64_vec(in);
  if (m.emit.size() != static_cast<size_t>(m.num_features()) * m.num_labels() ||
      m.trans.size() != static_cast<size_t>(m.num_labels()) * m.num_labels())
    throw std::runtime_error("corrupt model file: " + path);
  return m;
}

}  // namespace snacs
