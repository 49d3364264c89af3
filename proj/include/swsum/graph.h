#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "swsum/corpus.h"

namespace swsum {

enum class EdgeKind { kLocal, kDistant, kBoth };

const char* to_string(EdgeKind kind);

struct EdgeInfo {
  EdgeKind kind = EdgeKind::kLocal;
  // Meaningful concepts shared by the two sentences, sorted.
  std::vector<std::string> shared_concepts;
};

// Undirected simple graph over sentence indices.
class SentenceGraph {
 public:
  explicit SentenceGraph(std::size_t n = 0);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  // Sorted neighbor list.
  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adjacency_[v];
  }
  bool has_edge(std::size_t u, std::size_t v) const;
  // Keyed by (min, max).
  const std::map<std::pair<std::size_t, std::size_t>, EdgeInfo>& edges() const {
    return edges_;
  }

  // Adds u--v (no-op if present or u == v). Used for synthetic graphs.
  void add_edge(std::size_t u, std::size_t v, EdgeInfo info = {});

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::map<std::pair<std::size_t, std::size_t>, EdgeInfo> edges_;
};

// Local edges join consecutive sentences; distant edges join non-consecutive
// sentences sharing at least one meaningful concept. A consecutive pair that
// also shares a meaningful concept is a single edge tagged kBoth.
SentenceGraph build_graph(const Document& doc,
                          const std::unordered_set<std::string>& meaningful);

struct RankedSentence {
  std::size_t rank = 0;  // 1-based
  std::size_t sentence_index = 0;
  std::size_t degree = 0;

  friend bool operator==(const RankedSentence&, const RankedSentence&) = default;
};

// Descending degree; equal degrees keep ascending sentence index.
std::vector<RankedSentence> degree_ranking(const SentenceGraph& g);

struct Summary {
  std::vector<std::size_t> selected;  // document order
  std::vector<RankedSentence> ranked;
  double compression_rate = 0.0;
};

// round_half_up(rate * n), clamped to [1, n]. Throws DomainError unless
// 0 < rate <= 1.
std::size_t summary_size(std::size_t n, double rate);

Summary select_summary(const std::vector<RankedSentence>& ranking,
                       std::size_t n, double rate);

std::string export_dot(const SentenceGraph& g);
std::string graph_to_json(const SentenceGraph& g);

}  // namespace swsum
