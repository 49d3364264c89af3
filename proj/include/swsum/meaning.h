#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "swsum/corpus.h"

namespace swsum {

/// log10 of the binomial coefficient C(k, m), accumulated in log space.
/// Throws DomainError when m > k.
double log_binomial(long long k, long long m);

/// log10 of the number of false alarms for a concept seen in `m` sentences of
/// a paragraph and `k` sentences of the document, where `length_ratio` is
/// floor(L / B):
///
///   log10 NFA = log10 C(k, m) - (m - 1) * log10(length_ratio)
///
/// Requires 1 <= m <= k and length_ratio >= 1.
double nfa_log10(long long k, long long m, long long length_ratio);

/// Meaningfulness of a concept inside one paragraph: -(1/m) * log10 NFA.
double meaning_in_paragraph(long long k, long long m, long long length_ratio);

struct ParagraphMeaning {
  std::size_t paragraph = 0;
  std::size_t m = 0;             // sentences of the paragraph holding the concept
  std::size_t concept_mass = 0;  // B: concept occurrences in the paragraph
  std::size_t length_ratio = 1;  // N = max(1, floor(L / B))
  double nfa_log10 = 0.0;
  double meaning = 0.0;
};

struct MeaningEntry {
  std::string concept_id;
  std::string label;
  std::size_t k = 0;  // sentences of the document holding the concept
  std::vector<ParagraphMeaning> per_paragraph;
  double document_meaning = 0.0;  // max over per_paragraph
};

struct MeaningTable {
  double epsilon = 0.0;
  std::size_t total_concepts = 0;  // L
  std::map<std::string, MeaningEntry> entries;
  // Concepts with document_meaning > epsilon, descending meaning then id.
  std::vector<std::string> meaningful;
  // Set when no sentence carries any concept; the table is then empty.
  bool empty_concept_space = false;

  std::unordered_set<std::string> meaningful_set() const;
  bool is_meaningful(const std::string& concept_id) const;
};

/// Computes per-paragraph and document-level meaningfulness for every concept
/// and thresholds strictly at epsilon. Occurrence counts are per sentence.
/// `threads` > 1 spreads the per-concept work; the result does not depend on it.
MeaningTable build_meaning_table(const Document& doc, double epsilon,
                                 std::size_t threads = 1);

/// Re-thresholds an existing table at a new epsilon.
MeaningTable rethreshold(const MeaningTable& table, double epsilon);

/// JSON used by `--dump-meaning`.
std::string meaning_table_to_json(const MeaningTable& table);

}  // namespace swsum
