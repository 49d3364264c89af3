#include "swsum/corpus.h"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "json.hpp"
#include "swsum/errors.h"

namespace swsum {

using nlohmann::json;

bool Sentence::contains(std::string_view concept_id) const {
  return std::any_of(concepts.begin(), concepts.end(),
                     [&](const Concept& c) { return c.id == concept_id; });
}

bool Sentence::add_concept(Concept c) {
  if (contains(c.id)) return false;
  concepts.push_back(std::move(c));
  return true;
}

Document::Document(std::string id, std::vector<Sentence> sentences,
                   std::vector<Paragraph> paragraphs)
    : id_(std::move(id)),
      sentences_(std::move(sentences)),
      paragraphs_(std::move(paragraphs)) {
  if (sentences_.empty() || paragraphs_.empty())
    throw SchemaError("document needs at least one sentence and paragraph");
  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    if (sentences_[i].index != i)
      throw SchemaError("sentence indices must run 0..N-1 in order");
  }
  std::size_t next = 0;
  for (std::size_t p = 0; p < paragraphs_.size(); ++p) {
    const Paragraph& para = paragraphs_[p];
    if (para.index != p || para.first != next || para.count == 0)
      throw SchemaError("paragraphs must partition the sentences");
    next = para.end();
  }
  if (next != sentences_.size())
    throw SchemaError("paragraphs must cover every sentence");
}

Document Document::from_paragraphs(
    std::string id, std::vector<std::vector<Sentence>> paragraphs) {
  std::vector<Sentence> sentences;
  std::vector<Paragraph> ranges;
  for (auto& group : paragraphs) {
    if (group.empty()) continue;
    ranges.push_back({ranges.size(), sentences.size(), group.size()});
    for (auto& s : group) {
      s.index = sentences.size();
      sentences.push_back(std::move(s));
    }
  }
  return Document(std::move(id), std::move(sentences), std::move(ranges));
}

std::size_t Document::total_concepts() const {
  std::size_t total = 0;
  for (const auto& s : sentences_) total += s.concepts.size();
  return total;
}

std::size_t Document::paragraph_concepts(std::size_t paragraph) const {
  const Paragraph& para = paragraphs_.at(paragraph);
  std::size_t total = 0;
  for (std::size_t i = para.first; i < para.end(); ++i)
    total += sentences_[i].concepts.size();
  return total;
}

Document Document::with_concepts(
    std::vector<std::vector<Concept>> concepts) const {
  if (concepts.size() != sentences_.size())
    throw DomainError("concept lists do not match sentence count");
  Document copy = *this;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    copy.sentences_[i].concepts.clear();
    for (auto& c : concepts[i]) copy.sentences_[i].add_concept(std::move(c));
  }
  return copy;
}

bool operator==(const Document& a, const Document& b) {
  if (a.id_ != b.id_ || a.sentences_.size() != b.sentences_.size() ||
      a.paragraphs_.size() != b.paragraphs_.size())
    return false;
  for (std::size_t p = 0; p < a.paragraphs_.size(); ++p) {
    if (a.paragraphs_[p].first != b.paragraphs_[p].first ||
        a.paragraphs_[p].count != b.paragraphs_[p].count)
      return false;
  }
  for (std::size_t i = 0; i < a.sentences_.size(); ++i) {
    const Sentence& x = a.sentences_[i];
    const Sentence& y = b.sentences_[i];
    if (x.text != y.text || x.concepts.size() != y.concepts.size())
      return false;
    for (std::size_t c = 0; c < x.concepts.size(); ++c) {
      const Concept& cx = x.concepts[c];
      const Concept& cy = y.concepts[c];
      if (cx.id != cy.id || cx.label != cy.label ||
          cx.semantic_type != cy.semantic_type)
        return false;
    }
  }
  return true;
}

const std::set<std::string>& default_generic_types() {
  static const std::set<std::string> types = {
      "Temporal Concept",     "Spatial Concept",      "Qualitative Concept",
      "Quantitative Concept", "Language",             "Mental Process",
      "Intellectual Product", "Idea or Concept",      "Functional Concept"};
  return types;
}

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words = {
      "a",      "about",   "above", "after", "again",  "against", "all",
      "also",   "am",      "an",    "and",   "any",    "are",     "as",
      "at",     "be",      "been",  "before", "being", "below",   "between",
      "both",   "but",     "by",    "can",   "could",  "did",     "do",
      "does",   "doing",   "down",  "during", "each",  "few",     "for",
      "from",   "further", "had",   "has",   "have",   "having",  "he",
      "her",    "here",    "hers",  "him",   "his",    "how",     "however",
      "i",      "if",      "in",    "into",  "is",     "it",      "its",
      "itself", "may",     "more",  "most",  "much",   "must",    "my",
      "no",     "nor",     "not",   "now",   "of",     "off",     "on",
      "once",   "only",    "or",    "other", "our",    "ours",    "out",
      "over",   "own",     "same",  "she",   "should", "since",   "so",
      "some",   "such",    "than",  "that",  "the",    "their",   "theirs",
      "them",   "then",    "there", "these", "they",   "this",    "those",
      "through", "thus",   "to",    "too",   "under",  "until",   "up",
      "upon",   "very",    "was",   "we",    "were",   "what",    "when",
      "where",  "whereas", "which", "while", "who",    "whom",    "why",
      "will",   "with",    "within", "without", "would", "yet",   "you",
      "your",   "yours"};
  return words;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), is_space);
}

}  // namespace

std::vector<std::string> split_paragraphs(std::string_view text) {
  std::vector<std::string> paragraphs;
  std::string current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (is_blank(line)) {
      if (!current.empty()) paragraphs.push_back(std::move(current));
      current.clear();
    } else {
      if (!current.empty()) current.push_back('\n');
      current.append(line);
    }
    pos = nl + 1;
  }
  if (!current.empty()) paragraphs.push_back(std::move(current));
  return paragraphs;
}

std::vector<std::string> split_sentences(std::string_view paragraph) {
  const std::string text = collapse_whitespace(paragraph);
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '?' && c != '!') continue;
    // Absorb runs like "?!" or "...".
    std::size_t j = i;
    while (j + 1 < text.size() &&
           (text[j + 1] == '.' || text[j + 1] == '?' || text[j + 1] == '!'))
      ++j;
    const bool at_end = j + 1 == text.size();
    const bool boundary =
        at_end || (j + 2 < text.size() && text[j + 1] == ' ' &&
                   std::isupper(static_cast<unsigned char>(text[j + 2])));
    if (boundary) {
      sentences.push_back(text.substr(start, j + 1 - start));
      start = at_end ? text.size() : j + 2;
    }
    i = j;
  }
  if (start < text.size()) sentences.push_back(text.substr(start));
  return sentences;
}

Document load_plain_text(std::string_view text, std::string id) {
  std::vector<std::vector<Sentence>> paragraphs;
  for (const auto& para : split_paragraphs(text)) {
    std::vector<Sentence> group;
    for (auto& s : split_sentences(para)) {
      Sentence sentence;
      sentence.text = std::move(s);
      group.push_back(std::move(sentence));
    }
    if (!group.empty()) paragraphs.push_back(std::move(group));
  }
  if (paragraphs.empty()) throw EmptyDocument("no sentence found in input");
  return Document::from_paragraphs(std::move(id), std::move(paragraphs));
}

namespace {

const json& require(const json& node, const char* key, json::value_t type,
                    const std::string& where) {
  auto it = node.find(key);
  if (it == node.end())
    throw SchemaError(where + ": missing field '" + key + "'");
  if (it->type() != type &&
      !(type == json::value_t::number_unsigned && it->is_number_integer()))
    throw SchemaError(where + ": field '" + key + "' has the wrong type");
  return *it;
}

std::optional<std::string> optional_string(const json& node, const char* key,
                                           const std::string& where) {
  auto it = node.find(key);
  if (it == node.end() || it->is_null()) return std::nullopt;
  if (!it->is_string())
    throw SchemaError(where + ": field '" + key + "' must be a string");
  return it->get<std::string>();
}

}  // namespace

Document load_annotated(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("document must be a JSON object");
  const std::string id =
      require(root, "id", json::value_t::string, "document").get<std::string>();
  const json& paras =
      require(root, "paragraphs", json::value_t::array, "document");

  std::vector<std::vector<Sentence>> paragraphs;
  std::unordered_set<long long> explicit_indices;
  std::size_t position = 0;
  for (std::size_t p = 0; p < paras.size(); ++p) {
    const std::string pwhere = "paragraph " + std::to_string(p);
    if (!paras[p].is_object()) throw SchemaError(pwhere + " must be an object");
    const json& sents =
        require(paras[p], "sentences", json::value_t::array, pwhere);
    if (sents.empty()) throw SchemaError(pwhere + " has no sentences");
    std::vector<Sentence> group;
    for (std::size_t s = 0; s < sents.size(); ++s, ++position) {
      const std::string where = pwhere + " sentence " + std::to_string(s);
      const json& node = sents[s];
      if (!node.is_object()) throw SchemaError(where + " must be an object");
      // Indices are implicit; an explicit one must agree with position.
      if (auto it = node.find("index"); it != node.end()) {
        if (!it->is_number_integer())
          throw SchemaError(where + ": index must be an integer");
        const long long index = it->get<long long>();
        if (!explicit_indices.insert(index).second)
          throw DuplicateSentenceIndex("duplicate sentence index " +
                                       std::to_string(index));
        if (index != static_cast<long long>(position))
          throw SchemaError(where + ": index does not match document order");
      }
      Sentence sentence;
      sentence.text =
          require(node, "text", json::value_t::string, where).get<std::string>();
      if (auto it = node.find("concepts"); it != node.end() && !it->is_null()) {
        if (!it->is_array())
          throw SchemaError(where + ": concepts must be an array");
        for (const json& cnode : *it) {
          if (!cnode.is_object())
            throw SchemaError(where + ": concept must be an object");
          Concept c;
          c.id = require(cnode, "id", json::value_t::string, where)
                     .get<std::string>();
          if (c.id.empty()) throw SchemaError(where + ": empty concept id");
          c.label = optional_string(cnode, "label", where).value_or(c.id);
          c.semantic_type = optional_string(cnode, "semantic_type", where);
          if (!c.semantic_type)
            c.semantic_type = optional_string(cnode, "semtype", where);
          sentence.add_concept(std::move(c));
        }
      }
      group.push_back(std::move(sentence));
    }
    paragraphs.push_back(std::move(group));
  }
  if (paragraphs.empty()) throw SchemaError("document has no sentences");
  return Document::from_paragraphs(id, std::move(paragraphs));
}

std::string serialize_annotated(const Document& doc) {
  json paras = json::array();
  for (const Paragraph& para : doc.paragraphs()) {
    json sents = json::array();
    for (std::size_t i = para.first; i < para.end(); ++i) {
      const Sentence& s = doc.sentences()[i];
      json concepts = json::array();
      for (const Concept& c : s.concepts) {
        json cnode = {{"id", c.id}, {"label", c.label}};
        if (c.semantic_type) cnode["semantic_type"] = *c.semantic_type;
        concepts.push_back(std::move(cnode));
      }
      sents.push_back({{"text", s.text}, {"concepts", std::move(concepts)}});
    }
    paras.push_back({{"sentences", std::move(sents)}});
  }
  json root = {{"id", doc.id()}, {"paragraphs", std::move(paras)}};
  return root.dump(2) + "\n";
}

Document filter_generic_types(const Document& doc,
                              const std::set<std::string>& generic_types) {
  std::vector<std::vector<Concept>> kept(doc.size());
  for (const Sentence& s : doc.sentences()) {
    for (const Concept& c : s.concepts) {
      if (c.semantic_type && generic_types.count(*c.semantic_type)) continue;
      kept[s.index].push_back(c);
    }
  }
  return doc.with_concepts(std::move(kept));
}

Document surrogate_annotate(const Document& doc,
                            const std::set<std::string>& stopwords) {
  std::vector<std::vector<Concept>> concepts(doc.size());
  for (const Sentence& s : doc.sentences()) {
    std::string token;
    auto flush = [&] {
      if (token.size() >= 3 && !stopwords.count(token)) {
        Concept c;
        c.id = token;
        c.label = token;
        concepts[s.index].push_back(std::move(c));
      }
      token.clear();
    };
    for (char ch : s.text) {
      const auto u = static_cast<unsigned char>(ch);
      if (std::isalpha(u) && u < 0x80) {
        token.push_back(static_cast<char>(std::tolower(u)));
      } else {
        flush();
      }
    }
    flush();
  }
  return doc.with_concepts(std::move(concepts));
}

}  // namespace swsum
