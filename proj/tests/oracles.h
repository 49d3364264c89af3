#pragma once

// Independent reference implementations used only by the tests. Each one
// recomputes a quantity the slow, obvious way so the library can be checked
// against it.

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "swsum/corpus.h"
#include "swsum/graph.h"

namespace swsum::testing {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial_exact(unsigned k, unsigned m) {
  return factorial(k) / (factorial(m) * factorial(k - m));
}

// NFA = C(k, m) / N^(m-1) as an exact rational.
inline Rational nfa_exact(unsigned k, unsigned m, unsigned n) {
  BigInt denominator = 1;
  for (unsigned i = 1; i < m; ++i) denominator *= n;
  return Rational(binomial_exact(k, m), denominator);
}

inline double log10_rational(const Rational& r) {
  const BigFloat num(boost::multiprecision::numerator(r));
  const BigFloat den(boost::multiprecision::denominator(r));
  return static_cast<double>(boost::multiprecision::log10(num) -
                             boost::multiprecision::log10(den));
}

inline double meaning_exact(unsigned k, unsigned m, unsigned n) {
  return -log10_rational(nfa_exact(k, m, n)) / static_cast<double>(m);
}

// Document-level meaning per concept, counted by scanning every sentence for
// every concept.
inline std::map<std::string, double> brute_force_meanings(const Document& doc) {
  std::set<std::string> ids;
  unsigned total = 0;
  for (const auto& s : doc.sentences()) {
    for (const auto& c : s.concepts) ids.insert(c.id);
    total += static_cast<unsigned>(s.concepts.size());
  }
  std::map<std::string, double> out;
  for (const auto& id : ids) {
    unsigned k = 0;
    for (const auto& s : doc.sentences()) k += s.contains(id) ? 1 : 0;
    double best = -1e300;
    for (const auto& para : doc.paragraphs()) {
      unsigned m = 0;
      unsigned mass = 0;
      for (std::size_t i = para.first; i < para.first + para.count; ++i) {
        m += doc.sentences()[i].contains(id) ? 1 : 0;
        mass += static_cast<unsigned>(doc.sentences()[i].concepts.size());
      }
      if (m == 0) continue;
      const unsigned n = std::max(1u, total / mass);
      best = std::max(best, meaning_exact(k, m, n));
    }
    out[id] = best;
  }
  return out;
}

// Random document: up to max_sentences sentences in up to max_paragraphs
// paragraphs, concepts drawn from c0..c(max_concepts-1).
inline Document random_document(std::mt19937_64& rng, std::size_t max_sentences,
                                std::size_t max_concepts,
                                std::size_t max_paragraphs,
                                double density = 0.3) {
  std::uniform_int_distribution<std::size_t> sentence_count(1, max_sentences);
  const std::size_t n = sentence_count(rng);
  std::uniform_int_distribution<std::size_t> paragraph_count(
      1, std::min(n, max_paragraphs));
  const std::size_t p = paragraph_count(rng);
  // Choose p - 1 distinct cut points in 1..n-1.
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i < n; ++i) cuts.push_back(i);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(p - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  std::bernoulli_distribution take(density);
  std::vector<std::vector<Sentence>> paragraphs;
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    std::vector<Sentence> group;
    for (std::size_t i = start; i < cut; ++i) {
      Sentence s;
      s.text = "Sentence " + std::to_string(i) + ".";
      for (std::size_t c = 0; c < max_concepts; ++c) {
        if (take(rng)) s.add_concept({"c" + std::to_string(c), "", std::nullopt});
      }
      group.push_back(std::move(s));
    }
    paragraphs.push_back(std::move(group));
    start = cut;
  }
  return Document::from_paragraphs("random", std::move(paragraphs));
}

// Edge set from testing all sentence pairs directly.
inline std::set<std::pair<std::size_t, std::size_t>> brute_force_edges(
    const Document& doc, const std::set<std::string>& meaningful) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  const auto& s = doc.sentences();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      bool linked = j == i + 1;
      for (const auto& c : s[i].concepts) {
        if (meaningful.count(c.id) && s[j].contains(c.id)) linked = true;
      }
      if (linked) edges.insert({i, j});
    }
  }
  return edges;
}

inline std::set<std::pair<std::size_t, std::size_t>> edge_set(
    const SentenceGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [pair, info] : g.edges()) edges.insert(pair);
  return edges;
}

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency_matrix(const SentenceGraph& g) {
  Matrix a(g.size(), std::vector<int>(g.size(), 0));
  for (const auto& [pair, info] : g.edges()) {
    a[pair.first][pair.second] = 1;
    a[pair.second][pair.first] = 1;
  }
  return a;
}

// Floyd-Warshall average over unordered pairs; -1 when disconnected.
inline double brute_force_path_length(const SentenceGraph& g) {
  const std::size_t n = g.size();
  const int inf = 1 << 28;
  Matrix d = adjacency_matrix(g);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) d[i][j] = 0;
      else if (!d[i][j]) d[i][j] = inf;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[i][j] >= inf) return -1.0;
      sum += static_cast<std::uint64_t>(d[i][j]);
    }
  }
  return static_cast<double>(sum) /
         (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

// Local clustering by checking every neighbor pair in the matrix.
inline double brute_force_clustering(const SentenceGraph& g) {
  const std::size_t n = g.size();
  const Matrix a = adjacency_matrix(g);
  double sum = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t k = 0;
    std::size_t links = 0;
    for (std::size_t x = 0; x < n; ++x) k += static_cast<std::size_t>(a[v][x]);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (a[v][x] && a[v][y] && a[x][y]) ++links;
    if (k < 2) continue;
    sum += 2.0 * static_cast<double>(links) /
           (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

// 3 * triangles over connected triples, counting both by enumeration.
inline double brute_force_transitivity(const SentenceGraph& g) {
  const std::size_t n = g.size();
  const Matrix a = adjacency_matrix(g);
  std::uint64_t triangles = 0;
  std::uint64_t triples = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if (a[x][y] && a[y][z] && a[x][z]) ++triangles;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (x != v && y != v && a[v][x] && a[v][y]) ++triples;
  if (triples == 0) return 0.0;
  return static_cast<double>(3 * triangles) / static_cast<double>(triples);
}

inline SentenceGraph random_graph(std::mt19937_64& rng, std::size_t n,
                                  double p) {
  SentenceGraph g(n);
  std::bernoulli_distribution edge(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

// Clipped match count of two unit lists by greedy pairing: every candidate
// unit claims one unclaimed equal reference unit.
inline std::size_t greedy_matches(
    const std::vector<std::vector<std::string>>& candidate,
    const std::vector<std::vector<std::string>>& reference) {
  std::vector<bool> used(reference.size(), false);
  std::size_t matches = 0;
  for (const auto& unit : candidate) {
    for (std::size_t r = 0; r < reference.size(); ++r) {
      if (!used[r] && reference[r] == unit) {
        used[r] = true;
        ++matches;
        break;
      }
    }
  }
  return matches;
}

inline std::vector<std::vector<std::string>> all_ngrams(
    const std::vector<std::string>& tokens, std::size_t n) {
  std::vector<std::vector<std::string>> units;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i)
    units.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                       tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
  return units;
}

inline std::vector<std::vector<std::string>> all_skip_units(
    const std::vector<std::string>& tokens, std::size_t skip) {
  std::vector<std::vector<std::string>> units;
  for (std::size_t i = 0; i < tokens.size(); ++i) units.push_back({tokens[i]});
  for (std::size_t i = 0; i < tokens.size(); ++i)
    for (std::size_t j = i + 1; j < tokens.size(); ++j)
      if (j - i <= skip) units.push_back({tokens[i], tokens[j]});
  return units;
}

// Two-sided Wilcoxon p-value by listing all 2^n sign patterns of the
// absolute differences. Zero differences are dropped first.
inline double enumerate_wilcoxon_p(const std::vector<double>& differences) {
  std::vector<double> d;
  for (double x : differences)
    if (x != 0.0) d.push_back(x);
  const std::size_t n = d.size();
  if (n == 0) return 1.0;
  // Average ranks of |d| by counting smaller and equal magnitudes.
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t less = 0;
    std::size_t equal = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(d[j]) < std::abs(d[i])) ++less;
      if (std::abs(d[j]) == std::abs(d[i])) ++equal;
    }
    rank[i] = static_cast<double>(less) + (static_cast<double>(equal) + 1.0) / 2.0;
  }
  double plus = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += rank[i];
    if (d[i] > 0) plus += rank[i];
  }
  const double observed = std::min(plus, total - plus);
  std::uint64_t hits = 0;
  const std::uint64_t patterns = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) w += rank[i];
    if (std::min(w, total - w) <= observed + 1e-9) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(patterns);
}

}  // namespace swsum::testing
