#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "redbench/models/types.hpp"

namespace redbench::models {

// Tiny first-order language model used as the local backend. Next-token
// logits depend only on the previous token: one row of a [V x V] table.
// Probabilities are the softmax of a row, so a table built from ln(counts)
// reproduces count ratios exactly.
class BigramModel {
 public:
  BigramModel() = default;

  static BigramModel from_logits(std::vector<std::string> vocab,
                                 std::vector<std::vector<double>> logits);
  // counts[i][j] >= 0; zero count maps to -inf logit (probability zero).
  static BigramModel from_counts(std::vector<std::string> vocab,
                                 const std::vector<std::vector<double>>& counts);
  static BigramModel uniform(std::vector<std::string> vocab);

  static BigramModel load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  size_t vocab_size() const { return vocab_.size(); }
  const std::vector<std::string>& vocab() const { return vocab_; }
  const std::vector<std::vector<double>>& logits() const { return logits_; }
  std::optional<int> eos() const { return eos_; }

  // Greedy longest-match over vocab entries. Unknown input maps to the
  // declared unk token, or fails when the model has none.
  std::vector<int> tokenize(std::string_view text) const;
  std::string detokenize(std::span<const int> tokens) const;

  const std::vector<double>& next_logprobs(int prev) const;
  std::vector<double> next_probs(int prev) const;
  double logprob(int prev, int next) const;

  // Mean NLL of tokens[1..]; nats per token. Needs >= 1 token; a single
  // token scores 0 (no conditionals).
  double sequence_nll(std::span<const int> tokens) const;

  // Mean NLL over the target slice plus its gradient with respect to one-hot
  // token indicators. Rows for positions that do not feed any scored logit
  // are zero but still present.
  GradientInfo loss_and_grad(std::span<const int> tokens, Slice target) const;

  std::string generate(std::span<const int> prompt,
                       const GenerationConfig& config) const;

 private:
  void finalize();
  void check_token(int token) const;

  std::vector<std::string> vocab_;
  std::vector<std::vector<double>> logits_;
  std::vector<std::vector<double>> logprobs_;  // log-softmax rows, cached
  std::optional<int> eos_;
  std::optional<int> unk_;
};

}  // namespace redbench::models
