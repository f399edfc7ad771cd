#include "redbench/models/scripted.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "redbench/errors.hpp"
#include "redbench/util/fs.hpp"
#include "redbench/util/strings.hpp"

namespace redbench::models {

bool ScriptRule::matches(std::string_view last_user) const {
  if (equals && last_user != *equals) return false;
  for (const auto& needle : contains_all) {
    if (!util::contains(last_user, needle)) return false;
  }
  return true;
}

std::string ScriptedModel::generate(const Conversation& conversation,
                                    const GenerationConfig& config) {
  long call = calls_.fetch_add(1);
  generate_calls_.fetch_add(1);
  if (call < fail_first)
    fail(Errc::backend_unavailable,
         "scripted failure " + std::to_string(call + 1) + "/" +
             std::to_string(fail_first));
  (void)config;
  return respond(conversation);
}

std::string ScriptedModel::respond(const Conversation& conversation) {
  const Message* last = conversation.last_user();
  std::string last_user = last ? last->content : "";

  for (const auto& rule : rules) {
    if (rule.matches(last_user)) {
      if (rule.fail)
        fail(Errc::backend_unavailable, "scripted rule failure");
      return rule.response;
    }
  }
  if (!sequence.empty()) {
    size_t idx = static_cast<size_t>(seq_index_.fetch_add(1));
    if (idx >= sequence.size()) idx = sequence.size() - 1;
    return sequence[idx];
  }
  switch (echo) {
    case EchoMode::last_user:
      return last_user;
    case EchoMode::all: {
      std::string out;
      for (const auto& m : conversation.messages) {
        out += role_name(m.role);
        out += ": ";
        out += m.content;
        out += "\n";
      }
      return out;
    }
    case EchoMode::none:
      break;
  }
  if (lm) {
    auto tokens = lm->tokenize(flatten_for_lm(conversation));
    GenerationConfig cfg;  // scripted LM generation is always greedy
    cfg.max_new_tokens = 16;
    return lm->generate(tokens, cfg);
  }
  if (default_response) return *default_response;
  fail(Errc::script_key_missing, "no rule matched and no default response: \"" +
                                     last_user.substr(0, 80) + "\"");
}

std::vector<int> ScriptedModel::tokenize(std::string_view text) const {
  if (lm) return lm->tokenize(text);
  if (uniform_vocab) {
    // Byte-level fallback so any text is scoreable against the uniform model.
    std::vector<int> out;
    out.reserve(text.size());
    for (unsigned char c : text) out.push_back(static_cast<int>(c) % *uniform_vocab);
    return out;
  }
  fail(Errc::capability_missing, "scripted model has no tokenizer");
}

std::vector<TokenScore> ScriptedModel::continuation_logprobs(
    std::span<const int> prompt, std::span<const int> continuation) {
  calls_.fetch_add(1);
  if (lm) {
    std::vector<TokenScore> out;
    int prev = prompt.back();
    for (int tok : continuation) {
      out.push_back({tok, lm->logprob(prev, tok)});
      prev = tok;
    }
    return out;
  }
  if (uniform_vocab) {
    double lp = -std::log(static_cast<double>(*uniform_vocab));
    std::vector<TokenScore> out;
    for (int tok : continuation) out.push_back({tok, lp});
    return out;
  }
  fail(Errc::capability_missing, "scripted model has no log-probability support");
}

double ScriptedModel::sequence_nll(std::span<const int> tokens) {
  calls_.fetch_add(1);
  if (lm) return lm->sequence_nll(tokens);
  if (uniform_vocab) {
    if (tokens.size() <= 1) return 0.0;
    return std::log(static_cast<double>(*uniform_vocab));
  }
  fail(Errc::capability_missing, "scripted model has no log-probability support");
}

GradientInfo ScriptedModel::loss_and_grad(std::span<const int> tokens,
                                          Slice target) {
  calls_.fetch_add(1);
  if (!lm)
    fail(Errc::capability_missing, "scripted model has no gradient support");
  return lm->loss_and_grad(tokens, target);
}

std::string flatten_for_lm(const Conversation& conversation) {
  std::string out;
  for (const auto& m : conversation.messages) out += m.content;
  return out;
}

std::shared_ptr<ScriptedModel> ScriptedModel::load(
    const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    fail(Errc::unknown_model, "script file not found: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(util::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::schema_error, "bad script file " + path.string() + ": " + e.what());
  }
  auto model = std::make_shared<ScriptedModel>();
  if (j.contains("rules")) {
    for (const auto& r : j["rules"]) {
      ScriptRule rule;
      if (r.contains("equals")) rule.equals = r["equals"].get<std::string>();
      if (r.contains("contains"))
        rule.contains_all.push_back(r["contains"].get<std::string>());
      if (r.contains("contains_all"))
        for (const auto& c : r["contains_all"])
          rule.contains_all.push_back(c.get<std::string>());
      rule.response = r.value("response", "");
      rule.fail = r.value("fail", false);
      model->rules.push_back(std::move(rule));
    }
  }
  if (j.contains("sequence"))
    model->sequence = j["sequence"].get<std::vector<std::string>>();
  if (j.contains("echo")) {
    std::string mode = j["echo"].get<std::string>();
    if (mode == "last_user") model->echo = EchoMode::last_user;
    else if (mode == "all") model->echo = EchoMode::all;
    else fail(Errc::schema_error, "unknown echo mode: " + mode);
  }
  if (j.contains("default"))
    model->default_response = j["default"].get<std::string>();
  model->fail_first = j.value("fail_first", 0);
  if (j.contains("uniform_vocab"))
    model->uniform_vocab = j["uniform_vocab"].get<int>();
  if (j.contains("lm")) {
    const auto& lm = j["lm"];
    std::vector<std::string> vocab = lm["vocab"].get<std::vector<std::string>>();
    if (lm.contains("counts"))
      model->lm = BigramModel::from_counts(
          vocab, lm["counts"].get<std::vector<std::vector<double>>>());
    else
      model->lm = BigramModel::from_logits(
          vocab, lm["logits"].get<std::vector<std::vector<double>>>());
  }
  return model;
}

}  // namespace redbench::models
