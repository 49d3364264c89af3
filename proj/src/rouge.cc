#include "swsum/rouge.h"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "swsum/corpus.h"
#include "swsum/errors.h"
#include "swsum/porter_stemmer.h"

namespace swsum {

std::vector<std::string> normalize_tokens(std::string_view text,
                                          const RougeOptions& options) {
  std::vector<std::string> tokens;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (!(options.remove_stopwords && default_stopwords().count(token)))
      tokens.push_back(options.stem ? porter_stem(token) : token);
    token.clear();
  };
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    if (u < 0x80 && std::isalnum(u)) {
      token.push_back(static_cast<char>(std::tolower(u)));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

SegmentedTokens normalize_segmented(std::string_view text,
                                    const RougeOptions& options) {
  SegmentedTokens out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    for (const auto& sentence : split_sentences(text.substr(pos, nl - pos))) {
      auto tokens = normalize_tokens(sentence, options);
      if (!tokens.empty()) out.push_back(std::move(tokens));
    }
    pos = nl + 1;
  }
  return out;
}

namespace {

// A view over sentences so flat and segmented inputs share one code path.
struct Sentences {
  const std::vector<std::string>* flat = nullptr;
  const SegmentedTokens* segmented = nullptr;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (flat) {
      fn(*flat);
    } else {
      for (const auto& s : *segmented) fn(s);
    }
  }
};

// Token ids shared by both sides of one comparison.
class Vocabulary {
 public:
  Vocabulary(const Sentences& a, const Sentences& b) {
    auto collect = [&](const std::vector<std::string>& s) {
      for (const auto& t : s) words_.push_back(t);
    };
    a.for_each(collect);
    b.for_each(collect);
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  }

  std::uint64_t id(std::string_view token) const {
    return static_cast<std::uint64_t>(
               std::lower_bound(words_.begin(), words_.end(), token) -
               words_.begin()) +
           1;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::vector<std::string_view> words_;
};

// Counting units are packed into integers in base (V + 1) with ids 1..V, so
// distinct id sequences of one width map to distinct keys, and a pair key
// (>= V + 2) never equals a unigram key (<= V).
using Key = std::uint64_t;

bool packable(std::size_t vocab_size, int width) {
  long double capacity = 1.0L;
  for (int i = 0; i < width; ++i) capacity *= static_cast<long double>(vocab_size + 1);
  return capacity < 1.8e19L;
}

std::vector<Key> ngram_keys(const Sentences& text, const Vocabulary& vocab,
                            int n) {
  std::vector<Key> keys;
  const auto width = static_cast<std::size_t>(n);
  const Key base = vocab.size() + 1;
  text.for_each([&](const std::vector<std::string>& sentence) {
    for (std::size_t i = 0; i + width <= sentence.size(); ++i) {
      Key key = 0;
      for (std::size_t j = 0; j < width; ++j)
        key = key * base + vocab.id(sentence[i + j]);
      keys.push_back(key);
    }
  });
  return keys;
}

// Fallback for n-grams too wide to pack.
std::vector<std::vector<Key>> ngram_sequences(const Sentences& text,
                                              const Vocabulary& vocab, int n) {
  std::vector<std::vector<Key>> units;
  const auto width = static_cast<std::size_t>(n);
  text.for_each([&](const std::vector<std::string>& sentence) {
    for (std::size_t i = 0; i + width <= sentence.size(); ++i) {
      std::vector<Key> unit(width);
      for (std::size_t j = 0; j < width; ++j) unit[j] = vocab.id(sentence[i + j]);
      units.push_back(std::move(unit));
    }
  });
  return units;
}

std::vector<Key> skip_keys(const Sentences& text, const Vocabulary& vocab,
                           int skip_distance) {
  std::vector<Key> keys;
  std::vector<Key> ids;
  const auto skip = static_cast<std::size_t>(skip_distance);
  const Key base = vocab.size() + 1;
  text.for_each([&](const std::vector<std::string>& sentence) {
    ids.resize(sentence.size());
    for (std::size_t i = 0; i < sentence.size(); ++i) ids[i] = vocab.id(sentence[i]);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      keys.push_back(ids[i]);
      for (std::size_t j = i + 1; j < ids.size() && j <= i + skip; ++j)
        keys.push_back(ids[i] * base + ids[j]);
    }
  });
  return keys;
}

// Sorted merge of the two unit multisets; a shared unit matches
// min(candidate count, reference count) times.
template <typename Unit>
RougeScore clipped_score(RougeMetric metric, std::vector<Unit> candidate,
                         std::vector<Unit> reference) {
  RougeScore score;
  score.metric = metric;
  score.candidate_count = candidate.size();
  score.reference_count = reference.size();
  std::sort(candidate.begin(), candidate.end());
  std::sort(reference.begin(), reference.end());
  auto c = candidate.begin();
  auto r = reference.begin();
  while (c != candidate.end() && r != reference.end()) {
    if (*c < *r) {
      ++c;
    } else if (*r < *c) {
      ++r;
    } else {
      ++score.match_count;
      ++c;
      ++r;
    }
  }
  const auto matches = static_cast<double>(score.match_count);
  score.empty_reference = score.reference_count == 0;
  if (score.reference_count > 0)
    score.recall = matches / static_cast<double>(score.reference_count);
  if (score.candidate_count > 0)
    score.precision = matches / static_cast<double>(score.candidate_count);
  if (score.recall + score.precision > 0.0)
    score.f1 = 2.0 * score.precision * score.recall /
               (score.precision + score.recall);
  return score;
}

RougeScore rouge_n_impl(const Sentences& candidate, const Sentences& reference,
                        int n) {
  if (n < 1) throw DomainError("rouge_n requires n >= 1");
  const Vocabulary vocab(candidate, reference);
  if (packable(vocab.size(), n)) {
    return clipped_score(RougeMetric::kRougeN, ngram_keys(candidate, vocab, n),
                         ngram_keys(reference, vocab, n));
  }
  return clipped_score(RougeMetric::kRougeN,
                       ngram_sequences(candidate, vocab, n),
                       ngram_sequences(reference, vocab, n));
}

RougeScore rouge_su_impl(const Sentences& candidate, const Sentences& reference,
                         int skip_distance) {
  if (skip_distance < 1) throw DomainError("rouge_su requires skip >= 1");
  const Vocabulary vocab(candidate, reference);
  if (!packable(vocab.size(), 2))
    throw DomainError("vocabulary too large for skip-bigram keys");
  return clipped_score(RougeMetric::kRougeSU,
                       skip_keys(candidate, vocab, skip_distance),
                       skip_keys(reference, vocab, skip_distance));
}

}  // namespace

RougeScore rouge_n(const SegmentedTokens& candidate,
                   const SegmentedTokens& reference, int n) {
  return rouge_n_impl({nullptr, &candidate}, {nullptr, &reference}, n);
}

RougeScore rouge_n(const std::vector<std::string>& candidate,
                   const std::vector<std::string>& reference, int n) {
  return rouge_n_impl({&candidate, nullptr}, {&reference, nullptr}, n);
}

RougeScore rouge_su(const SegmentedTokens& candidate,
                    const SegmentedTokens& reference, int skip_distance) {
  return rouge_su_impl({nullptr, &candidate}, {nullptr, &reference},
                       skip_distance);
}

RougeScore rouge_su(const std::vector<std::string>& candidate,
                    const std::vector<std::string>& reference,
                    int skip_distance) {
  return rouge_su_impl({&candidate, nullptr}, {&reference, nullptr},
                       skip_distance);
}

std::pair<RougeScore, RougeScore> score_summary(std::string_view candidate,
                                                std::string_view reference,
                                                const RougeOptions& options) {
  auto blank = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
  };
  if (blank(candidate) || blank(reference))
    throw EmptyInput("summary and model summary must be non-empty");
  const SegmentedTokens cand = normalize_segmented(candidate, options);
  const SegmentedTokens ref = normalize_segmented(reference, options);
  return {rouge_n(cand, ref, 2), rouge_su(cand, ref, options.skip_distance)};
}

}  // namespace swsum
