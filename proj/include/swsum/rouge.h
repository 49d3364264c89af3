#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace swsum {

enum class RougeMetric { kRougeN, kRougeSU };

struct RougeScore {
  RougeMetric metric = RougeMetric::kRougeN;
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  std::size_t match_count = 0;
  std::size_t candidate_count = 0;
  std::size_t reference_count = 0;
  // Set when the reference yields no counting units (recall forced to 0).
  bool empty_reference = false;
};

struct RougeOptions {
  bool stem = true;
  bool remove_stopwords = false;
  int skip_distance = 4;
};

// Tokens grouped by sentence.
using SegmentedTokens = std::vector<std::vector<std::string>>;

// Lowercases, splits on non-alphanumeric characters and optionally stems.
std::vector<std::string> normalize_tokens(std::string_view text,
                                          const RougeOptions& options = {});

// Sentence-segmented tokens (line breaks and sentence punctuation split).
SegmentedTokens normalize_segmented(std::string_view text,
                                    const RougeOptions& options = {});

// Clipped n-gram overlap; n-grams never span two sentences.
RougeScore rouge_n(const SegmentedTokens& candidate,
                   const SegmentedTokens& reference, int n = 2);
RougeScore rouge_n(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, int n = 2);

// Clipped overlap of unigrams plus ordered in-sentence pairs (t_i, t_j) with
// i < j <= i + skip_distance.
RougeScore rouge_su(const SegmentedTokens& candidate,
                    const SegmentedTokens& reference, int skip_distance = 4);
RougeScore rouge_su(const std::vector<std::string>& candidate,
                    const std::vector<std::string>& reference,
                    int skip_distance = 4);

// (ROUGE-2, ROUGE-SU4) of a system summary against a model summary.
// Throws EmptyInput when either text is blank.
std::pair<RougeScore, RougeScore> score_summary(std::string_view candidate,
                                                std::string_view reference,
                                                const RougeOptions& options = {});

}  // namespace swsum
