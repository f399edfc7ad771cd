#include "redbench/util/strings.hpp"

#include <unordered_set>

namespace redbench::util {

bool is_function_word(std::string_view word) {
  static const std::unordered_set<std::string> kFunctionWords = {
      "a",     "an",    "the",   "and",  "or",    "but",  "if",    "then",
      "else",  "of",    "in",    "on",   "at",    "to",   "from",  "by",
      "with",  "for",   "as",    "is",   "are",   "was",  "were",  "be",
      "been",  "being", "am",    "do",   "does",  "did",  "will",  "would",
      "can",   "could", "shall", "should", "may", "might", "must", "not",
      "no",    "nor",   "so",    "that", "this",  "these", "those", "it",
      "its",   "he",    "she",   "they", "them",  "his",  "her",   "their",
      "we",    "us",    "our",   "you",  "your",  "i",    "me",    "my",
      "who",   "whom",  "which", "what", "when",  "where", "why",  "how",
      "than",  "too",   "very",  "just", "there", "here", "up",    "down",
      "out",   "into",  "over",  "under", "again", "once", "about", "any",
      "all",   "each",  "both",  "some", "such",  "only", "own",   "same",
  };
  std::string folded = casefold(word);
  return kFunctionWords.count(folded) > 0;
}

}  // namespace redbench::util
