#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "swsum/corpus.h"

namespace swsum::testing {

// 100 sentences in 10 paragraphs of 10. Every sentence of paragraph p holds
// the topic concept "topic<p>"; a few topics also appear in one sentence of a
// far paragraph, giving long-range shortcuts. "noise<i>" concepts each sit in
// two sentences of two different paragraphs; their meaning is small but
// positive, so at epsilon = 0 they densify the graph into a random-like mesh.
inline Document clustered_document(std::size_t noise_concepts = 600,
                                   unsigned seed = 7) {
  constexpr std::size_t kParagraphs = 10;
  constexpr std::size_t kPerParagraph = 10;
  std::vector<std::vector<std::vector<std::string>>> ids(
      kParagraphs, std::vector<std::vector<std::string>>(kPerParagraph));
  for (std::size_t p = 0; p < kParagraphs; ++p)
    for (std::size_t s = 0; s < kPerParagraph; ++s)
      ids[p][s].push_back("topic" + std::to_string(p));

  // Shortcuts: topic p leaks into the middle sentence of paragraph p + 5.
  for (std::size_t p = 0; p < 4; ++p)
    ids[(p + 5) % kParagraphs][5].push_back("topic" + std::to_string(p));

  std::mt19937 rng(seed);
  auto draw = [&](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };
  for (std::size_t i = 0; i < noise_concepts; ++i) {
    const std::string id = "noise" + std::to_string(i);
    const std::size_t a = draw(kParagraphs);
    std::size_t b = draw(kParagraphs - 1);
    if (b >= a) ++b;
    for (std::size_t para : {a, b}) {
      const std::size_t first = draw(kPerParagraph);
      std::size_t second = draw(kPerParagraph - 1);
      if (second >= first) ++second;
      ids[para][first].push_back(id);
      ids[para][second].push_back(id);
    }
  }

  std::vector<std::vector<Sentence>> paragraphs;
  std::size_t counter = 0;
  for (const auto& para : ids) {
    std::vector<Sentence> group;
    for (const auto& concepts : para) {
      Sentence s;
      s.text = "Synthetic sentence " + std::to_string(counter++) + ".";
      for (const auto& id : concepts) s.add_concept({id, id, std::nullopt});
      group.push_back(std::move(s));
    }
    paragraphs.push_back(std::move(group));
  }
  return Document::from_paragraphs("clustered", std::move(paragraphs));
}

}  // namespace swsum::testing
