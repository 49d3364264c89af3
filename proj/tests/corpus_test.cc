#include "swsum/corpus.h"

#include <random>

#include "doctest.h"
#include "oracles.h"
#include "swsum/errors.h"

using namespace swsum;

namespace {

std::vector<std::string> texts(const Document& doc, std::size_t paragraph) {
  std::vector<std::string> out;
  const Paragraph& p = doc.paragraphs()[paragraph];
  for (std::size_t i = p.first; i < p.end(); ++i)
    out.push_back(doc.sentences()[i].text);
  return out;
}

const char* kAnnotated = R"({
  "id": "doc1",
  "paragraphs": [
    {"sentences": [
      {"text": "SHANK3 is a gene.",
       "concepts": [{"id": "C0017337", "label": "Genes", "semantic_type": "Gene or Genome"},
                    {"id": "C0017337", "label": "Genes", "semantic_type": "Gene or Genome"}]},
      {"text": "It matters a lot.",
       "concepts": [{"id": "C1", "semantic_type": "Qualitative Concept"}]}
    ]},
    {"sentences": [
      {"text": "Synapses form.", "concepts": [{"id": "C0039062"}]}
    ]}
  ]
})";

}  // namespace

TEST_CASE("plain text splits paragraphs on blank lines and sentences on terminators") {
  const Document doc = load_plain_text("A b. C d.\n\nE f.");
  REQUIRE(doc.paragraphs().size() == 2);
  CHECK(texts(doc, 0) == std::vector<std::string>{"A b.", "C d."});
  CHECK(texts(doc, 1) == std::vector<std::string>{"E f."});
  CHECK(doc.sentences()[2].index == 2);
  for (const auto& s : doc.sentences()) CHECK(s.concepts.empty());
}

TEST_CASE("plain text without a terminator is one sentence") {
  const Document doc = load_plain_text("One sentence only");
  CHECK(doc.paragraphs().size() == 1);
  CHECK(doc.size() == 1);
  CHECK(doc.sentences()[0].text == "One sentence only");
}

TEST_CASE("empty plain text is rejected") {
  CHECK_THROWS_AS(load_plain_text(""), EmptyDocument);
  CHECK_THROWS_AS(load_plain_text("  \n\n \t\n"), EmptyDocument);
}

TEST_CASE("sentence splitting needs an uppercase start after the terminator") {
  CHECK(split_sentences("Use e.g. this one. Then stop!") ==
        std::vector<std::string>{"Use e.g. this one.", "Then stop!"});
  CHECK(split_sentences("Really?! Yes.") ==
        std::vector<std::string>{"Really?!", "Yes."});
  CHECK(split_sentences("wrapped\nline. Next") ==
        std::vector<std::string>{"wrapped line.", "Next"});
}

TEST_CASE("annotated loading mirrors the file and deduplicates concepts") {
  const Document doc = load_annotated(kAnnotated);
  CHECK(doc.id() == "doc1");
  REQUIRE(doc.size() == 3);
  REQUIRE(doc.paragraphs().size() == 2);
  CHECK(doc.paragraphs()[1].first == 2);
  const Sentence& first = doc.sentences()[0];
  REQUIRE(first.concepts.size() == 1);
  CHECK(first.concepts[0].id == "C0017337");
  CHECK(first.concepts[0].semantic_type == "Gene or Genome");
  CHECK(doc.sentences()[2].concepts[0].label == "C0039062");
  CHECK_FALSE(doc.sentences()[2].concepts[0].semantic_type.has_value());
  CHECK(doc.total_concepts() == 3);
  CHECK(doc.paragraph_concepts(0) == 2);
}

TEST_CASE("annotated schema errors") {
  CHECK_THROWS_AS(load_annotated(R"({"id":"x","paragraphs":[]})"), SchemaError);
  CHECK_THROWS_AS(load_annotated(R"({"id":"x","paragraphs":[{"sentences":[]}]})"),
                  SchemaError);
  CHECK_THROWS_AS(load_annotated(R"({"paragraphs":[]})"), SchemaError);
  CHECK_THROWS_AS(load_annotated(R"({"id":"x","paragraphs":[{"sentences":[{"concepts":[]}]}]})"),
                  SchemaError);
  CHECK_THROWS_AS(load_annotated("not json"), SchemaError);
  CHECK_THROWS_AS(
      load_annotated(R"({"id":"x","paragraphs":[{"sentences":[{"text":"a","concepts":[{"id":""}]}]}]})"),
      SchemaError);
}

TEST_CASE("explicit sentence indices must be unique") {
  const char* dup = R"({"id":"x","paragraphs":[{"sentences":[
      {"index":0,"text":"A."},{"index":0,"text":"B."}]}]})";
  CHECK_THROWS_AS(load_annotated(dup), DuplicateSentenceIndex);
  const char* ok = R"({"id":"x","paragraphs":[{"sentences":[
      {"index":0,"text":"A."},{"index":1,"text":"B."}]}]})";
  CHECK(load_annotated(ok).size() == 2);
}

TEST_CASE("generic semantic types are filtered") {
  const Document doc = load_annotated(kAnnotated);
  const Document filtered = filter_generic_types(doc);
  CHECK(filtered.sentences()[0].concepts.size() == 1);  // Gene or Genome kept
  CHECK(filtered.sentences()[1].concepts.empty());      // Qualitative Concept
  CHECK(filtered.sentences()[2].concepts.size() == 1);  // no type: kept
  CHECK(filter_generic_types(doc, {}) == doc);
  CHECK(filter_generic_types(filtered) == filtered);
  CHECK(default_generic_types().size() == 9);
  CHECK(default_generic_types().count("Idea or Concept"));
}

TEST_CASE("surrogate annotation keeps unique non-stopword tokens") {
  const Document base = load_plain_text("The cat sat on the mat.\n\nThe on the.\n\nmat mat mat");
  const Document doc = surrogate_annotate(base, {"the", "on"});
  std::vector<std::string> ids;
  for (const auto& c : doc.sentences()[0].concepts) ids.push_back(c.id);
  CHECK(ids == std::vector<std::string>{"cat", "sat", "mat"});
  CHECK(doc.sentences()[1].concepts.empty());
  CHECK(doc.size() == 3);
  REQUIRE(doc.sentences()[2].concepts.size() == 1);
  CHECK(doc.sentences()[2].concepts[0].id == "mat");
  CHECK(surrogate_annotate(base, {"the", "on"}) == doc);
  // Surrogate concepts have no semantic type, so the filter leaves them.
  CHECK(filter_generic_types(doc) == doc);
}

TEST_CASE("property: paragraphs partition sentences and serialization round-trips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Document doc = testing::random_document(rng, 20, 10, 5);
    std::size_t next = 0;
    for (const auto& p : doc.paragraphs()) {
      CHECK(p.first == next);
      CHECK(p.count > 0);
      next = p.end();
    }
    CHECK(next == doc.size());
    CHECK(load_annotated(serialize_annotated(doc)) == doc);
  }
}
