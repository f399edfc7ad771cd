#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redbench/models/bigram.hpp"
#include "redbench/models/types.hpp"

namespace redbench::models {

// One entry of a request->response table. A rule matches when the last user
// message satisfies all of its conditions; rules are evaluated in order and
// the first match wins.
struct ScriptRule {
  std::optional<std::string> equals;
  std::vector<std::string> contains_all;
  std::string response;
  bool fail = false;  // matching this rule simulates a backend failure

  bool matches(std::string_view last_user) const;
};

enum class EchoMode { none, last_user, all };

// Deterministic stand-in backend. Responses come from, in precedence order:
// fail_first injection, the rule table, the call sequence, the echo mode,
// then the default response. Optionally embeds a BigramModel so scripted
// handles can also serve log-probabilities and gradients.
class ScriptedModel {
 public:
  std::vector<ScriptRule> rules;
  std::vector<std::string> sequence;  // k-th call returns sequence[min(k, n-1)]
  EchoMode echo = EchoMode::none;
  std::optional<std::string> default_response;
  int fail_first = 0;
  std::optional<int> uniform_vocab;   // uniform logprob capability
  std::optional<BigramModel> lm;      // full toy-LM capability

  std::string generate(const Conversation& conversation,
                       const GenerationConfig& config);

  bool has_logprobs() const { return uniform_vocab.has_value() || lm.has_value(); }

  std::vector<int> tokenize(std::string_view text) const;
  std::vector<TokenScore> continuation_logprobs(std::span<const int> prompt,
                                                std::span<const int> continuation);
  double sequence_nll(std::span<const int> tokens);
  GradientInfo loss_and_grad(std::span<const int> tokens, Slice target);

  long calls() const { return calls_.load(); }
  void reset_counters() {
    calls_.store(0);
    generate_calls_.store(0);
    seq_index_.store(0);
  }
  long generate_calls() const { return generate_calls_.load(); }

  static std::shared_ptr<ScriptedModel> load(const std::filesystem::path& path);

 private:
  std::string respond(const Conversation& conversation);

  std::atomic<long> calls_{0};           // every backend touch
  std::atomic<long> generate_calls_{0};  // generate() only
  std::atomic<long> seq_index_{0};
};

// Concatenated message contents, the "concat" chat template used by toy LMs.
std::string flatten_for_lm(const Conversation& conversation);

}  // namespace redbench::models
