#include "redbench/errors.hpp"

namespace redbench {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::backend_unavailable: return "BackendUnavailable";
    case Errc::template_mismatch: return "TemplateMismatch";
    case Errc::access_denied: return "AccessDenied";
    case Errc::capability_missing: return "CapabilityMissing";
    case Errc::slice_out_of_bounds: return "SliceOutOfBounds";
    case Errc::empty_batch: return "EmptyBatch";
    case Errc::invalid_conversation: return "InvalidConversation";
    case Errc::invalid_generation_config: return "InvalidGenerationConfig";
    case Errc::invalid_handle: return "InvalidHandle";
    case Errc::tokenization_failed: return "TokenizationFailed";
    case Errc::unknown_model: return "UnknownModel";
    case Errc::script_key_missing: return "ScriptKeyMissing";
    case Errc::vocabulary_mismatch: return "VocabularyMismatch";
    case Errc::source_not_found: return "SourceNotFound";
    case Errc::schema_error: return "SchemaError";
    case Errc::access_mismatch: return "AccessMismatch";
    case Errc::unknown_method: return "UnknownMethod";
    case Errc::missing_attacker_model: return "MissingAttackerModel";
    case Errc::unknown_mutator: return "UnknownMutator";
    case Errc::mixed_ranking_keys: return "MixedRankingKeys";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::empty_seed_set: return "EmptySeedSet";
    case Errc::unknown_template: return "UnknownTemplate";
    case Errc::unknown_scheme: return "UnknownScheme";
    case Errc::missing_translator: return "MissingTranslator";
    case Errc::invalid_budget: return "InvalidBudget";
    case Errc::empty_rewriter_set: return "EmptyRewriterSet";
    case Errc::invalid_state: return "InvalidState";
    case Errc::stage_conflict: return "StageConflict";
    case Errc::classifier_unavailable: return "ClassifierUnavailable";
    case Errc::input_too_large_for_subsequence_mode:
      return "InputTooLargeForSubsequenceMode";
    case Errc::unknown_defender: return "UnknownDefender";
    case Errc::unknown_scorer: return "UnknownScorer";
    case Errc::judge_unavailable: return "JudgeUnavailable";
    case Errc::parse_error: return "ParseError";
    case Errc::empty_target: return "EmptyTarget";
    case Errc::slot_missing: return "SlotMissing";
    case Errc::empty_input: return "EmptyInput";
    case Errc::empty_grid: return "EmptyGrid";
    case Errc::corrupt_record: return "CorruptRecord";
    case Errc::config_parse_error: return "ConfigParseError";
    case Errc::unknown_key: return "UnknownKey";
    case Errc::missing_required: return "MissingRequired";
    case Errc::sink_unwritable: return "SinkUnwritable";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace redbench
