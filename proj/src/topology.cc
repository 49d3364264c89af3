#include "swsum/topology.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <queue>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "swsum/errors.h"
#include "swsum/parallel.h"

namespace swsum {

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::kRegular:
      return "regular";
    case Regime::kSmallWorld:
      return "small_world";
    case Regime::kRandomLike:
      return "random_like";
  }
  return "regular";
}

double characteristic_path_length(const SentenceGraph& g, std::size_t threads) {
  const std::size_t n = g.size();
  if (n < 2) throw DomainError("path length needs at least two nodes");

  // Distances to higher-numbered nodes only, so each pair is counted once.
  std::vector<std::uint64_t> partial(n, 0);
  std::vector<char> disconnected(n, 0);
  parallel_for(n, threads, [&](std::size_t source) {
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::queue<std::size_t> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v : g.neighbors(u)) {
        if (dist[v] != SIZE_MAX) continue;
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
    for (std::size_t v = source + 1; v < n; ++v) {
      if (dist[v] == SIZE_MAX) {
        disconnected[source] = 1;
        return;
      }
      partial[source] += dist[v];
    }
  });
  for (char flag : disconnected) {
    if (flag) throw DomainError("graph is disconnected");
  }
  const std::uint64_t sum =
      std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(sum) / pairs;
}

namespace {

// Edges among the neighbors of v.
std::size_t neighbor_links(const SentenceGraph& g, std::size_t v) {
  const auto& nb = g.neighbors(v);
  std::size_t links = 0;
  for (std::size_t a = 0; a < nb.size(); ++a) {
    const auto& row = g.neighbors(nb[a]);
    // Count neighbors of nb[a] that are in nb and greater than nb[a].
    auto it = nb.begin() + static_cast<std::ptrdiff_t>(a) + 1;
    auto jt = std::upper_bound(row.begin(), row.end(), nb[a]);
    while (it != nb.end() && jt != row.end()) {
      if (*it < *jt) {
        ++it;
      } else if (*jt < *it) {
        ++jt;
      } else {
        ++links;
        ++it;
        ++jt;
      }
    }
  }
  return links;
}

}  // namespace

double mean_clustering(const SentenceGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t k = g.degree(v);
    if (k < 2) continue;
    const double links = static_cast<double>(neighbor_links(g, v));
    sum += 2.0 * links / (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return sum / static_cast<double>(n);
}

double transitivity(const SentenceGraph& g) {
  // Each triangle is seen once from each of its three corners.
  std::uint64_t closed = 0;
  std::uint64_t triples = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const std::uint64_t k = g.degree(v);
    triples += k * (k - (k > 0 ? 1 : 0)) / 2;
    closed += neighbor_links(g, v);
  }
  if (triples == 0) return 0.0;
  return static_cast<double>(closed) / static_cast<double>(triples);
}

TopologyReport small_world_report(const SentenceGraph& g, std::size_t threads) {
  const std::size_t n = g.size();
  if (n < 3) throw DomainError("topology report needs at least three nodes");
  TopologyReport r;
  r.n = n;
  r.edge_count = g.edge_count();
  r.char_path_length = characteristic_path_length(g, threads);
  r.mean_clustering = mean_clustering(g);
  r.transitivity = transitivity(g);

  const double nd = static_cast<double>(n);
  const double mean_degree = 2.0 * static_cast<double>(r.edge_count) / nd;
  r.random_clustering = mean_degree / nd;
  r.random_path_length =
      mean_degree > 1.0 ? std::log(nd) / std::log(mean_degree) : 0.0;
  if (r.random_clustering > 0.0 && r.random_path_length > 0.0 &&
      r.char_path_length > 0.0) {
    r.sigma = (r.mean_clustering / r.random_clustering) /
              (r.char_path_length / r.random_path_length);
  }

  if (r.sigma > 1.0 && r.mean_clustering > r.random_clustering) {
    r.regime = Regime::kSmallWorld;
  } else if (r.sigma <= 1.0 && r.edge_count > 2 * n) {
    r.regime = Regime::kRandomLike;
  } else {
    r.regime = Regime::kRegular;
  }
  return r;
}

std::string topology_to_json(const TopologyReport& r) {
  nlohmann::json root = {{"n", r.n},
                         {"edge_count", r.edge_count},
                         {"char_path_length", r.char_path_length},
                         {"mean_clustering", r.mean_clustering},
                         {"transitivity", r.transitivity},
                         {"random_baseline",
                          {{"L_rand", r.random_path_length},
                           {"C_rand", r.random_clustering}}},
                         {"sigma", r.sigma},
                         {"regime", to_string(r.regime)}};
  return root.dump(2) + "\n";
}

std::string topology_csv_header() {
  return "n,edge_count,char_path_length,mean_clustering,transitivity,L_rand,"
         "C_rand,sigma,regime";
}

std::string topology_to_csv_row(const TopologyReport& r) {
  std::ostringstream out;
  out << std::setprecision(6) << std::fixed;
  out << r.n << ',' << r.edge_count << ',' << r.char_path_length << ','
      << r.mean_clustering << ',' << r.transitivity << ','
      << r.random_path_length << ',' << r.random_clustering << ',' << r.sigma
      << ',' << to_string(r.regime);
  return out.str();
}

}  // namespace swsum
