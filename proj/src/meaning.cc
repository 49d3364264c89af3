#include "swsum/meaning.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "swsum/errors.h"
#include "swsum/parallel.h"

namespace swsum {

double log_binomial(long long k, long long m) {
  if (k < 0 || m < 0 || m > k)
    throw DomainError("log_binomial requires 0 <= m <= k");
  const long long r = std::min(m, k - m);
  double sum = 0.0;
  for (long long i = 1; i <= r; ++i) {
    sum += std::log10(static_cast<double>(k - r + i)) -
           std::log10(static_cast<double>(i));
  }
  return sum;
}

double nfa_log10(long long k, long long m, long long length_ratio) {
  if (m < 1 || m > k)
    throw DomainError("nfa requires 1 <= m <= k");
  if (length_ratio < 1) throw DomainError("nfa requires N >= 1");
  return log_binomial(k, m) -
         static_cast<double>(m - 1) * std::log10(static_cast<double>(length_ratio));
}

double meaning_in_paragraph(long long k, long long m, long long length_ratio) {
  const double nfa = nfa_log10(k, m, length_ratio);
  return nfa == 0.0 ? 0.0 : -nfa / static_cast<double>(m);
}

std::unordered_set<std::string> MeaningTable::meaningful_set() const {
  return {meaningful.begin(), meaningful.end()};
}

bool MeaningTable::is_meaningful(const std::string& concept_id) const {
  auto it = entries.find(concept_id);
  return it != entries.end() && it->second.document_meaning > epsilon;
}

namespace {

void select_meaningful(MeaningTable& table) {
  table.meaningful.clear();
  for (const auto& [id, entry] : table.entries) {
    if (entry.document_meaning > table.epsilon) table.meaningful.push_back(id);
  }
  std::stable_sort(table.meaningful.begin(), table.meaningful.end(),
                   [&](const std::string& a, const std::string& b) {
                     const double ma = table.entries.at(a).document_meaning;
                     const double mb = table.entries.at(b).document_meaning;
                     if (ma != mb) return ma > mb;
                     return a < b;
                   });
}

}  // namespace

MeaningTable build_meaning_table(const Document& doc, double epsilon,
                                 std::size_t threads) {
  if (!std::isfinite(epsilon)) throw DomainError("epsilon must be finite");
  MeaningTable table;
  table.epsilon = epsilon;
  table.total_concepts = doc.total_concepts();
  if (table.total_concepts == 0) {
    table.empty_concept_space = true;
    return table;
  }

  const auto& paragraphs = doc.paragraphs();
  std::vector<std::size_t> mass(paragraphs.size());
  for (std::size_t p = 0; p < paragraphs.size(); ++p)
    mass[p] = doc.paragraph_concepts(p);

  // Per concept: sentence count per paragraph (sparse, paragraph order).
  std::map<std::string, MeaningEntry> entries;
  for (const Paragraph& para : paragraphs) {
    for (std::size_t i = para.first; i < para.end(); ++i) {
      for (const Concept& c : doc.sentences()[i].concepts) {
        MeaningEntry& entry = entries[c.id];
        if (entry.concept_id.empty()) {
          entry.concept_id = c.id;
          entry.label = c.label.empty() ? c.id : c.label;
        }
        ++entry.k;
        if (entry.per_paragraph.empty() ||
            entry.per_paragraph.back().paragraph != para.index) {
          ParagraphMeaning pm;
          pm.paragraph = para.index;
          entry.per_paragraph.push_back(pm);
        }
        ++entry.per_paragraph.back().m;
      }
    }
  }

  std::vector<MeaningEntry*> work;
  work.reserve(entries.size());
  for (auto& [id, entry] : entries) work.push_back(&entry);

  const std::size_t total = table.total_concepts;
  parallel_for(work.size(), threads, [&](std::size_t w) {
    MeaningEntry& entry = *work[w];
    double best = -std::numeric_limits<double>::infinity();
    for (ParagraphMeaning& pm : entry.per_paragraph) {
      pm.concept_mass = mass[pm.paragraph];
      pm.length_ratio = std::max<std::size_t>(1, total / pm.concept_mass);
      const auto k = static_cast<long long>(entry.k);
      const auto m = static_cast<long long>(pm.m);
      const auto n = static_cast<long long>(pm.length_ratio);
      pm.nfa_log10 = nfa_log10(k, m, n);
      pm.meaning = meaning_in_paragraph(k, m, n);
      best = std::max(best, pm.meaning);
    }
    entry.document_meaning = best;
  });

  table.entries = std::move(entries);
  select_meaningful(table);
  return table;
}

MeaningTable rethreshold(const MeaningTable& table, double epsilon) {
  if (!std::isfinite(epsilon)) throw DomainError("epsilon must be finite");
  MeaningTable copy = table;
  copy.epsilon = epsilon;
  select_meaningful(copy);
  return copy;
}

std::string meaning_table_to_json(const MeaningTable& table) {
  using nlohmann::json;
  json concepts = json::array();
  std::vector<const MeaningEntry*> ordered;
  for (const auto& [id, entry] : table.entries) ordered.push_back(&entry);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const MeaningEntry* a, const MeaningEntry* b) {
                     if (a->document_meaning != b->document_meaning)
                       return a->document_meaning > b->document_meaning;
                     return a->concept_id < b->concept_id;
                   });
  for (const MeaningEntry* entry : ordered) {
    json per = json::array();
    for (const ParagraphMeaning& pm : entry->per_paragraph) {
      per.push_back({{"paragraph", pm.paragraph},
                     {"m", pm.m},
                     {"B", pm.concept_mass},
                     {"N", pm.length_ratio},
                     {"nfa_log10", pm.nfa_log10},
                     {"meaning", pm.meaning}});
    }
    concepts.push_back({{"id", entry->concept_id},
                        {"label", entry->label},
                        {"k", entry->k},
                        {"document_meaning", entry->document_meaning},
                        {"per_paragraph", std::move(per)}});
  }
  json root = {{"epsilon", table.epsilon},
               {"L", table.total_concepts},
               {"empty_concept_space", table.empty_concept_space},
               {"concepts", std::move(concepts)},
               {"meaningful", table.meaningful}};
  return root.dump(2) + "\n";
}

}  // namespace swsum
