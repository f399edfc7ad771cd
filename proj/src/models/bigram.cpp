#include "redbench/models/bigram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <nlohmann/json.hpp>

#include "redbench/errors.hpp"
#include "redbench/util/fs.hpp"
#include "redbench/util/rng.hpp"

namespace redbench::models {

namespace {

double logsumexp(const std::vector<double>& xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

BigramModel BigramModel::from_logits(std::vector<std::string> vocab,
                                     std::vector<std::vector<double>> logits) {
  if (vocab.empty()) fail(Errc::invalid_state, "bigram vocab is empty");
  if (logits.size() != vocab.size())
    fail(Errc::invalid_state, "logits row count != vocab size");
  for (const auto& row : logits) {
    if (row.size() != vocab.size())
      fail(Errc::invalid_state, "logits column count != vocab size");
  }
  BigramModel m;
  m.vocab_ = std::move(vocab);
  m.logits_ = std::move(logits);
  m.finalize();
  return m;
}

BigramModel BigramModel::from_counts(
    std::vector<std::string> vocab,
    const std::vector<std::vector<double>>& counts) {
  std::vector<std::vector<double>> logits(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) {
    logits[i].resize(counts[i].size());
    for (size_t j = 0; j < counts[i].size(); ++j) {
      double c = counts[i][j];
      if (c < 0) fail(Errc::invalid_state, "negative count");
      logits[i][j] = c > 0 ? std::log(c)
                           : -std::numeric_limits<double>::infinity();
    }
  }
  return from_logits(std::move(vocab), std::move(logits));
}

BigramModel BigramModel::uniform(std::vector<std::string> vocab) {
  size_t v = vocab.size();
  return from_logits(std::move(vocab),
                     std::vector<std::vector<double>>(v, std::vector<double>(v, 0.0)));
}

void BigramModel::finalize() {
  logprobs_.resize(logits_.size());
  for (size_t i = 0; i < logits_.size(); ++i) {
    double lse = logsumexp(logits_[i]);
    if (!std::isfinite(lse))
      fail(Errc::invalid_state,
           "logits row " + std::to_string(i) + " has no finite entry");
    logprobs_[i].resize(logits_[i].size());
    for (size_t j = 0; j < logits_[i].size(); ++j)
      logprobs_[i][j] = logits_[i][j] - lse;
  }
}

BigramModel BigramModel::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    fail(Errc::unknown_model, "model file not found: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(util::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::schema_error, "bad model file " + path.string() + ": " + e.what());
  }
  if (!j.contains("vocab"))
    fail(Errc::schema_error, "model file missing 'vocab': " + path.string());
  std::vector<std::string> vocab = j["vocab"].get<std::vector<std::string>>();
  BigramModel m;
  if (j.contains("logits")) {
    m = from_logits(vocab, j["logits"].get<std::vector<std::vector<double>>>());
  } else if (j.contains("counts")) {
    m = from_counts(vocab, j["counts"].get<std::vector<std::vector<double>>>());
  } else {
    fail(Errc::schema_error,
         "model file needs 'logits' or 'counts': " + path.string());
  }
  if (j.contains("eos")) m.eos_ = j["eos"].get<int>();
  if (j.contains("unk")) m.unk_ = j["unk"].get<int>();
  return m;
}

void BigramModel::save(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["vocab"] = vocab_;
  j["logits"] = logits_;
  if (eos_) j["eos"] = *eos_;
  if (unk_) j["unk"] = *unk_;
  util::write_file(path, j.dump(2));
}

std::vector<int> BigramModel::tokenize(std::string_view text) const {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    int best = -1;
    size_t best_len = 0;
    for (size_t v = 0; v < vocab_.size(); ++v) {
      const std::string& piece = vocab_[v];
      if (piece.empty() || piece.size() < best_len) continue;
      if (text.compare(pos, piece.size(), piece) == 0 &&
          piece.size() > best_len) {
        best = static_cast<int>(v);
        best_len = piece.size();
      }
    }
    if (best < 0) {
      if (unk_) {
        out.push_back(*unk_);
        ++pos;
        continue;
      }
      fail(Errc::tokenization_failed,
           "no vocab entry matches input at byte " + std::to_string(pos));
    }
    out.push_back(best);
    pos += best_len;
  }
  return out;
}

std::string BigramModel::detokenize(std::span<const int> tokens) const {
  std::string out;
  for (int t : tokens) {
    check_token(t);
    out += vocab_[static_cast<size_t>(t)];
  }
  return out;
}

void BigramModel::check_token(int token) const {
  if (token < 0 || static_cast<size_t>(token) >= vocab_.size())
    fail(Errc::tokenization_failed, "token id out of range: " + std::to_string(token));
}

const std::vector<double>& BigramModel::next_logprobs(int prev) const {
  check_token(prev);
  return logprobs_[static_cast<size_t>(prev)];
}

std::vector<double> BigramModel::next_probs(int prev) const {
  const auto& lp = next_logprobs(prev);
  std::vector<double> p(lp.size());
  for (size_t i = 0; i < lp.size(); ++i) p[i] = std::exp(lp[i]);
  return p;
}

double BigramModel::logprob(int prev, int next) const {
  check_token(next);
  return next_logprobs(prev)[static_cast<size_t>(next)];
}

double BigramModel::sequence_nll(std::span<const int> tokens) const {
  if (tokens.empty()) fail(Errc::tokenization_failed, "empty token sequence");
  if (tokens.size() == 1) return 0.0;
  double nll = 0.0;
  for (size_t i = 1; i < tokens.size(); ++i)
    nll -= logprob(tokens[i - 1], tokens[i]);
  return nll / static_cast<double>(tokens.size() - 1);
}

GradientInfo BigramModel::loss_and_grad(std::span<const int> tokens,
                                        Slice target) const {
  if (target.empty())
    fail(Errc::slice_out_of_bounds, "target slice is empty");
  if (target.end > tokens.size())
    fail(Errc::slice_out_of_bounds, "target slice exceeds sequence length");
  if (target.start == 0)
    fail(Errc::slice_out_of_bounds,
         "target slice cannot start at position 0 (no conditioning token)");
  for (int t : tokens) check_token(t);

  const size_t v = vocab_.size();
  const double inv_n = 1.0 / static_cast<double>(target.size());

  GradientInfo out;
  out.grad.assign(tokens.size(), std::vector<double>(v, 0.0));

  // Loss treats the scored tokens as fixed labels; each position p only
  // influences the logits of position p + 1. The gradient row for p is
  //   (1/|T|) * W^T (softmax(z_{p+1}) - onehot(y_{p+1}))  when p+1 in T.
  for (size_t t = target.start; t < target.end; ++t) {
    int prev = tokens[t - 1];
    int label = tokens[t];
    const auto& lp = next_logprobs(prev);
    out.loss -= lp[static_cast<size_t>(label)] * inv_n;

    std::vector<double> delta(v);
    for (size_t j = 0; j < v; ++j) {
      delta[j] = std::exp(lp[j]) - (static_cast<int>(j) == label ? 1.0 : 0.0);
    }
    auto& row = out.grad[t - 1];
    for (size_t i = 0; i < v; ++i) {
      double g = 0.0;
      const auto& w = logits_[i];
      for (size_t j = 0; j < v; ++j) {
        if (std::isfinite(w[j])) g += w[j] * delta[j];
      }
      row[i] += g * inv_n;
    }
  }
  if (!std::isfinite(out.loss))
    fail(Errc::invalid_state, "non-finite loss (zero-probability label)");
  return out;
}

std::string BigramModel::generate(std::span<const int> prompt,
                                  const GenerationConfig& config) const {
  config.validate();
  if (prompt.empty())
    fail(Errc::tokenization_failed, "prompt tokenized to zero tokens");
  for (int t : prompt) check_token(t);

  util::Rng rng(config.seed);
  std::vector<int> generated;
  int prev = prompt.back();
  for (int step = 0; step < config.max_new_tokens; ++step) {
    int next;
    if (config.temperature == 0.0) {
      const auto& lp = next_logprobs(prev);
      next = static_cast<int>(std::max_element(lp.begin(), lp.end()) - lp.begin());
    } else {
      const auto& lp = next_logprobs(prev);
      std::vector<double> scaled(lp.size());
      for (size_t i = 0; i < lp.size(); ++i) scaled[i] = lp[i] / config.temperature;
      double lse = logsumexp(scaled);
      std::vector<double> probs(lp.size());
      for (size_t i = 0; i < lp.size(); ++i) probs[i] = std::exp(scaled[i] - lse);

      if (config.top_p < 1.0) {
        // Nucleus: keep the smallest prefix of the sorted distribution whose
        // mass reaches top_p, then renormalize.
        std::vector<size_t> order(probs.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return probs[a] > probs[b]; });
        double cum = 0.0;
        std::vector<double> kept(probs.size(), 0.0);
        for (size_t idx : order) {
          kept[idx] = probs[idx];
          cum += probs[idx];
          if (cum >= config.top_p) break;
        }
        double norm = std::accumulate(kept.begin(), kept.end(), 0.0);
        for (auto& p : kept) p /= norm;
        probs = std::move(kept);
      }
      std::discrete_distribution<int> dist(probs.begin(), probs.end());
      next = dist(rng);
    }
    if (eos_ && next == *eos_) break;
    generated.push_back(next);
    prev = next;
  }
  return detokenize(generated);
}

}  // namespace redbench::models
