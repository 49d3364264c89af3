#include "swsum/graph.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "swsum/errors.h"

namespace swsum {

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kLocal:
      return "local";
    case EdgeKind::kDistant:
      return "distant";
    case EdgeKind::kBoth:
      return "both";
  }
  return "local";
}

SentenceGraph::SentenceGraph(std::size_t n) : adjacency_(n) {}

bool SentenceGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u == v || u >= size() || v >= size()) return false;
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

void SentenceGraph::add_edge(std::size_t u, std::size_t v, EdgeInfo info) {
  if (u == v) return;
  if (u >= size() || v >= size()) throw DomainError("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  if (!edges_.emplace(std::make_pair(u, v), std::move(info)).second) return;
  auto insert_sorted = [](std::vector<std::size_t>& row, std::size_t x) {
    row.insert(std::lower_bound(row.begin(), row.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
}

SentenceGraph build_graph(const Document& doc,
                          const std::unordered_set<std::string>& meaningful) {
  const std::size_t n = doc.size();

  // Inverted index: meaningful concept -> sentences holding it (ascending).
  std::map<std::string, std::vector<std::size_t>> holders;
  for (const Sentence& s : doc.sentences()) {
    for (const Concept& c : s.concepts) {
      if (meaningful.count(c.id)) holders[c.id].push_back(s.index);
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::string>> shared;
  for (const auto& [id, list] : holders) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b)
        shared[{list[a], list[b]}].insert(id);
    }
  }

  SentenceGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    EdgeInfo info;
    if (auto it = shared.find({i, i + 1}); it != shared.end()) {
      info.kind = EdgeKind::kBoth;
      info.shared_concepts.assign(it->second.begin(), it->second.end());
    }
    g.add_edge(i, i + 1, std::move(info));
  }
  for (const auto& [pair, concepts] : shared) {
    if (pair.second - pair.first < 2) continue;
    EdgeInfo info;
    info.kind = EdgeKind::kDistant;
    info.shared_concepts.assign(concepts.begin(), concepts.end());
    g.add_edge(pair.first, pair.second, std::move(info));
  }
  return g;
}

std::vector<RankedSentence> degree_ranking(const SentenceGraph& g) {
  std::vector<RankedSentence> ranking(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) ranking[v] = {0, v, g.degree(v)};
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const RankedSentence& a, const RankedSentence& b) {
                     return a.degree > b.degree;
                   });
  for (std::size_t r = 0; r < ranking.size(); ++r) ranking[r].rank = r + 1;
  return ranking;
}

std::size_t summary_size(std::size_t n, double rate) {
  if (!(rate > 0.0 && rate <= 1.0))
    throw DomainError("compression rate must lie in (0, 1]");
  // The small nudge keeps products like 0.3 * 85 = 25.499999... on the
  // intended side of the half.
  const double scaled = rate * static_cast<double>(n);
  auto size = static_cast<std::size_t>(std::floor(scaled + 0.5 + 1e-9));
  return std::clamp<std::size_t>(size, 1, std::max<std::size_t>(n, 1));
}

Summary select_summary(const std::vector<RankedSentence>& ranking,
                       std::size_t n, double rate) {
  if (ranking.size() != n)
    throw DomainError("ranking must cover every sentence");
  Summary summary;
  summary.compression_rate = rate;
  summary.ranked = ranking;
  const std::size_t size = std::min(summary_size(n, rate), n);
  for (std::size_t r = 0; r < size; ++r)
    summary.selected.push_back(ranking[r].sentence_index);
  std::sort(summary.selected.begin(), summary.selected.end());
  return summary;
}

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string export_dot(const SentenceGraph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (std::size_t v = 0; v < g.size(); ++v) out << "  S" << v << ";\n";
  for (const auto& [pair, info] : g.edges()) {
    out << "  S" << pair.first << " -- S" << pair.second;
    if (!info.shared_concepts.empty()) {
      out << " [label=\"" << dot_escape(join(info.shared_concepts, ","))
          << "\"";
      if (info.kind == EdgeKind::kDistant) out << ", style=dashed";
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const SentenceGraph& g) {
  using nlohmann::json;
  json edges = json::array();
  for (const auto& [pair, info] : g.edges()) {
    edges.push_back({{"u", pair.first},
                     {"v", pair.second},
                     {"kind", to_string(info.kind)},
                     {"concepts", info.shared_concepts}});
  }
  json root = {{"n", g.size()}, {"edges", std::move(edges)}};
  return root.dump(2) + "\n";
}

}  // namespace swsum
