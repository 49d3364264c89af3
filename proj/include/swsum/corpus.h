#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace swsum {

// A concept found in a sentence. Identity is the id alone; label and
// semantic type are carried along for display and filtering.
struct Concept {
  std::string id;
  std::string label;
  std::optional<std::string> semantic_type;

  friend bool operator==(const Concept& a, const Concept& b) {
    return a.id == b.id;
  }
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  // Unique by id, kept in first-occurrence order.
  std::vector<Concept> concepts;

  bool contains(std::string_view concept_id) const;
  // Appends the concept unless a concept with the same id is present.
  bool add_concept(Concept c);
};

// A contiguous, non-empty run of sentences [first, first + count).
struct Paragraph {
  std::size_t index = 0;
  std::size_t first = 0;
  std::size_t count = 0;

  std::size_t end() const { return first + count; }
};

class Document {
 public:
  Document() = default;
  // Validates that paragraphs partition the sentences and that sentence
  // indices run 0..N-1. Throws SchemaError otherwise.
  Document(std::string id, std::vector<Sentence> sentences,
           std::vector<Paragraph> paragraphs);

  // Builds a document from per-paragraph sentence lists, assigning indices.
  static Document from_paragraphs(std::string id,
                                  std::vector<std::vector<Sentence>> paragraphs);

  const std::string& id() const { return id_; }
  const std::vector<Sentence>& sentences() const { return sentences_; }
  const std::vector<Paragraph>& paragraphs() const { return paragraphs_; }
  std::size_t size() const { return sentences_.size(); }

  // L: concept occurrences summed over all sentences.
  std::size_t total_concepts() const;
  // B_j: concept occurrences summed over the sentences of paragraph j.
  std::size_t paragraph_concepts(std::size_t paragraph) const;

  // Same structure with the given per-sentence concept lists.
  Document with_concepts(std::vector<std::vector<Concept>> concepts) const;

  friend bool operator==(const Document& a, const Document& b);

 private:
  std::string id_;
  std::vector<Sentence> sentences_;
  std::vector<Paragraph> paragraphs_;
};

// The nine broad semantic types dropped before analysis.
const std::set<std::string>& default_generic_types();

// Small English stopword list used by the surrogate annotator.
const std::set<std::string>& default_stopwords();

// Splits a paragraph into sentences on '.', '?' or '!' followed by
// whitespace and an uppercase letter, or by the end of the paragraph.
// Internal whitespace runs are collapsed to one space.
std::vector<std::string> split_sentences(std::string_view paragraph);

// Splits text into paragraphs on blank lines.
std::vector<std::string> split_paragraphs(std::string_view text);

// Plain UTF-8 text; concept sets are left empty. Throws EmptyDocument.
Document load_plain_text(std::string_view text, std::string id = "document");

// Annotated JSON; throws SchemaError or DuplicateSentenceIndex.
Document load_annotated(std::string_view json_text);

// Inverse of load_annotated (pretty-printed JSON).
std::string serialize_annotated(const Document& doc);

Document filter_generic_types(
    const Document& doc,
    const std::set<std::string>& generic_types = default_generic_types());

// Each sentence gets its unique lowercase alphabetic tokens of length >= 3
// that are not stopwords, as concepts without a semantic type.
Document surrogate_annotate(
    const Document& doc,
    const std::set<std::string>& stopwords = default_stopwords());

}  // namespace swsum
