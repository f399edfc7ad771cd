#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "redbench/models/bigram.hpp"
#include "redbench/models/scripted.hpp"

namespace redbench::models {

// A loaded local model plus its invocation counter. The counter advances on
// every backend touch (generation, scoring, gradients), mirroring the
// scripted backend so budget accounting can be checked against either kind.
struct LocalModel {
  BigramModel model;
  std::atomic<long> calls{0};
  std::atomic<long> generate_calls{0};
};

// Resolves handle identities to backend objects. Identities of the form
// "mem:<name>" refer to models registered programmatically (tests, demos);
// anything else is treated as a file path, loaded once and cached.
class ModelRegistry {
 public:
  static ModelRegistry& instance();

  void register_local(const std::string& name, BigramModel model);
  void register_scripted(const std::string& name,
                         std::shared_ptr<ScriptedModel> model);

  std::shared_ptr<LocalModel> local(const std::string& identity);
  std::shared_ptr<ScriptedModel> scripted(const std::string& identity);

  // Total backend touches for a local or scripted identity.
  long call_count(const std::string& identity);
  void reset_counters();
  void clear();

 private:
  ModelRegistry() = default;

  std::mutex mu_;
  std::map<std::string, std::shared_ptr<LocalModel>> locals_;
  std::map<std::string, std::shared_ptr<ScriptedModel>> scripted_;
};

}  // namespace redbench::models
