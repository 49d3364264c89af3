#pragma once

#include <cstddef>
#include <string>

#include "swsum/graph.h"

namespace swsum {

enum class Regime { kRegular, kSmallWorld, kRandomLike };

const char* to_string(Regime regime);

struct TopologyReport {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  double char_path_length = 0.0;
  double mean_clustering = 0.0;
  double transitivity = 0.0;
  // Erdos-Renyi expectations for the same n and mean degree.
  double random_path_length = 0.0;
  double random_clustering = 0.0;
  double sigma = 0.0;
  Regime regime = Regime::kRegular;
};

// Mean shortest-path length over all unordered pairs, BFS from every node.
// Throws DomainError when n < 2 or the graph is disconnected.
double characteristic_path_length(const SentenceGraph& g,
                                  std::size_t threads = 1);

// Mean of local clustering; nodes of degree < 2 contribute 0.
double mean_clustering(const SentenceGraph& g);

// 3 * triangles / connected triples; 0 without triples.
double transitivity(const SentenceGraph& g);

// Requires n >= 3.
TopologyReport small_world_report(const SentenceGraph& g,
                                  std::size_t threads = 1);

std::string topology_to_json(const TopologyReport& report);
std::string topology_csv_header();
std::string topology_to_csv_row(const TopologyReport& report);

}  // namespace swsum
