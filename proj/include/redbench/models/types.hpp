#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace redbench::models {

enum class Role { system, user, assistant };

const char* role_name(Role role);

struct Message {
  Role role = Role::user;
  std::string content;
};

// A chat transcript. At most one system message, always first; after it the
// roles alternate user/assistant and must end on user when handed to a
// backend for generation.
struct Conversation {
  std::vector<Message> messages;

  // Learned continuous prompt prefix (see defense::dro). Backends that have
  // no way to consume a relaxed token vector ignore it.
  std::vector<double> soft_prefix;

  static Conversation from_user(std::string text) {
    Conversation c;
    c.messages.push_back({Role::user, std::move(text)});
    return c;
  }

  const Message* system() const {
    if (!messages.empty() && messages.front().role == Role::system)
      return &messages.front();
    return nullptr;
  }

  const Message* last_user() const {
    for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
      if (it->role == Role::user) return &*it;
    }
    return nullptr;
  }

  // Throws InvalidConversation when the structural invariants do not hold.
  void validate_for_generation() const;
};

struct GenerationConfig {
  int max_new_tokens = 64;
  double temperature = 0.0;  // 0 = greedy
  double top_p = 1.0;
  uint64_t seed = 0;

  void validate() const;
};

enum class BackendKind { local, api, scripted };
enum class Access { black, gray, white };

const char* backend_name(BackendKind kind);
const char* access_name(Access access);

struct ModelHandle {
  BackendKind backend = BackendKind::scripted;
  Access access = Access::black;
  // local: filesystem path of a model file, or "mem:<name>" for a registered
  // in-memory model. api: base URL, optionally "#<model-name>" suffixed.
  // scripted: script file path or "mem:<name>".
  std::string identity;
  std::string chat_template = "plain";
  int retry_limit = 0;           // api only
  int retry_backoff_ms = 1000;   // first backoff; doubles per retry, 30s cap

  void validate() const;
};

struct TokenScore {
  int token_id = 0;
  double logprob = 0.0;  // <= 0
};

// Index range over a token sequence, half-open [start, end).
struct Slice {
  size_t start = 0;
  size_t end = 0;

  size_t size() const { return end > start ? end - start : 0; }
  bool empty() const { return end <= start; }
  bool overlaps(const Slice& other) const {
    return start < other.end && other.start < end;
  }
};

// Loss plus the gradient of that loss with respect to one-hot token
// indicators: grad[p][v] answers "how does the loss move if position p's
// indicator vector gains weight on vocab entry v".
struct GradientInfo {
  double loss = 0.0;
  std::vector<std::vector<double>> grad;  // [sequence_length][vocab_size]
};

}  // namespace redbench::models
