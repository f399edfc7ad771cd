#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace redbench {

// Every failure surfaced by the library carries one of these codes so
// callers (and tests) can branch on the condition instead of parsing text.
enum class Errc {
  // model gateway
  backend_unavailable,
  template_mismatch,
  access_denied,
  capability_missing,
  slice_out_of_bounds,
  empty_batch,
  invalid_conversation,
  invalid_generation_config,
  invalid_handle,
  tokenization_failed,
  unknown_model,
  script_key_missing,
  vocabulary_mismatch,
  // dataset
  source_not_found,
  schema_error,
  // attack engine
  access_mismatch,
  unknown_method,
  missing_attacker_model,
  unknown_mutator,
  mixed_ranking_keys,
  budget_exhausted,
  empty_seed_set,
  unknown_template,
  unknown_scheme,
  missing_translator,
  invalid_budget,
  empty_rewriter_set,
  invalid_state,
  // defense
  stage_conflict,
  classifier_unavailable,
  input_too_large_for_subsequence_mode,
  unknown_defender,
  // scorers
  unknown_scorer,
  judge_unavailable,
  parse_error,
  empty_target,
  slot_missing,
  // harness
  empty_input,
  empty_grid,
  corrupt_record,
  // config / logging
  config_parse_error,
  unknown_key,
  missing_required,
  sink_unwritable,
  // generic
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace redbench
