#include "redbench/models/types.hpp"

#include "redbench/errors.hpp"

namespace redbench::models {

const char* role_name(Role role) {
  switch (role) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
  }
  return "?";
}

const char* backend_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::local: return "local";
    case BackendKind::api: return "api";
    case BackendKind::scripted: return "scripted";
  }
  return "?";
}

const char* access_name(Access access) {
  switch (access) {
    case Access::black: return "black";
    case Access::gray: return "gray";
    case Access::white: return "white";
  }
  return "?";
}

void Conversation::validate_for_generation() const {
  if (messages.empty())
    fail(Errc::invalid_conversation, "conversation is empty");
  size_t i = 0;
  if (messages[0].role == Role::system) i = 1;
  for (size_t k = 0; k < messages.size(); ++k) {
    const Message& m = messages[k];
    if (m.role == Role::system && k != 0)
      fail(Errc::invalid_conversation,
           "system message must be first (found at index " + std::to_string(k) + ")");
    if (m.content.empty() && m.role != Role::system)
      fail(Errc::invalid_conversation,
           std::string(role_name(m.role)) + " message content is empty");
  }
  // Alternation after the optional system message, ending in user.
  Role expected = Role::user;
  for (; i < messages.size(); ++i) {
    if (messages[i].role != expected)
      fail(Errc::invalid_conversation,
           "expected " + std::string(role_name(expected)) + " at index " +
               std::to_string(i) + ", got " +
               role_name(messages[i].role));
    expected = (expected == Role::user) ? Role::assistant : Role::user;
  }
  if (messages.back().role != Role::user)
    fail(Errc::invalid_conversation, "conversation must end with a user message");
}

void GenerationConfig::validate() const {
  if (max_new_tokens <= 0)
    fail(Errc::invalid_generation_config, "max_new_tokens must be positive");
  if (temperature < 0.0)
    fail(Errc::invalid_generation_config, "temperature must be >= 0");
  if (top_p <= 0.0 || top_p > 1.0)
    fail(Errc::invalid_generation_config, "top_p must be in (0, 1]");
}

void ModelHandle::validate() const {
  if (identity.empty()) fail(Errc::invalid_handle, "identity is empty");
  if (access == Access::white && backend == BackendKind::api)
    fail(Errc::invalid_handle, "white-box access requires a local or scripted backend");
  if (access == Access::gray && backend == BackendKind::api)
    fail(Errc::invalid_handle,
         "gray-box access requires a backend with log-probability support "
         "(local or scripted)");
  if (retry_limit < 0) fail(Errc::invalid_handle, "retry_limit must be >= 0");
}

}  // namespace redbench::models
