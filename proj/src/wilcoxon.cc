#include "swsum/wilcoxon.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "json.hpp"
#include "swsum/errors.h"

namespace swsum {
namespace {

struct SignedRanks {
  std::vector<double> ranks;  // ranks of the non-zero differences
  std::vector<bool> positive;
};

SignedRanks rank_differences(const std::vector<std::pair<double, double>>& pairs,
                             ZeroHandling zeros) {
  std::vector<double> diffs;
  diffs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    const double d = a - b;
    if (d == 0.0 && zeros == ZeroHandling::kDrop) continue;
    diffs.push_back(d);
  }
  std::vector<std::size_t> order(diffs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::fabs(diffs[x]) < std::fabs(diffs[y]);
  });
  std::vector<double> rank(diffs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() &&
           std::fabs(diffs[order[j + 1]]) == std::fabs(diffs[order[i]]))
      ++j;
    const double average = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t t = i; t <= j; ++t) rank[order[t]] = average;
    i = j + 1;
  }
  SignedRanks out;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] == 0.0) continue;  // Pratt: zeros take ranks, then leave
    out.ranks.push_back(rank[i]);
    out.positive.push_back(diffs[i] > 0.0);
  }
  return out;
}

// Exact two-sided p: share of the 2^n sign patterns whose smaller rank sum is
// at most the observed one. Ranks are multiples of 1/2, so doubled ranks are
// integers and the rank-sum distribution is a subset-sum count.
double exact_p(const std::vector<double>& ranks, double observed) {
  std::vector<std::int64_t> doubled;
  std::int64_t total = 0;
  for (double r : ranks) {
    doubled.push_back(std::llround(2.0 * r));
    total += doubled.back();
  }
  std::vector<double> ways(static_cast<std::size_t>(total) + 1, 0.0);
  ways[0] = 1.0;
  std::int64_t reach = 0;
  for (std::int64_t r : doubled) {
    for (std::int64_t s = reach; s >= 0; --s)
      ways[static_cast<std::size_t>(s + r)] += ways[static_cast<std::size_t>(s)];
    reach += r;
  }
  const std::int64_t limit = std::llround(2.0 * observed);
  double hits = 0.0;
  for (std::int64_t s = 0; s <= total; ++s) {
    if (std::min(s, total - s) <= limit) hits += ways[static_cast<std::size_t>(s)];
  }
  return std::min(1.0, hits / std::ldexp(1.0, static_cast<int>(ranks.size())));
}

double normal_p(const std::vector<double>& ranks, double observed) {
  double total = 0.0;
  double squares = 0.0;
  for (double r : ranks) {
    total += r;
    squares += r * r;
  }
  // Sum of squared (average) ranks equals n(n+1)(2n+1)/6 minus the usual
  // tie correction sum(t^3 - t)/12.
  const double mean = total / 2.0;
  const double variance = squares / 4.0;
  if (variance <= 0.0) return 1.0;
  const double distance = std::max(0.0, std::fabs(observed - mean) - 0.5);
  const double z = distance / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(
    const std::vector<std::pair<double, double>>& pairs,
    const WilcoxonOptions& options) {
  if (pairs.empty()) throw EmptyInput("wilcoxon test needs at least one pair");
  const SignedRanks sr = rank_differences(pairs, options.zeros);
  WilcoxonResult result;
  result.n_effective = sr.ranks.size();
  if (result.n_effective == 0) {
    result.degenerate = true;
    result.p_value = 1.0;
    return result;
  }
  for (std::size_t i = 0; i < sr.ranks.size(); ++i)
    (sr.positive[i] ? result.w_plus : result.w_minus) += sr.ranks[i];
  result.w_statistic = std::min(result.w_plus, result.w_minus);
  result.exact = result.n_effective <= options.exact_limit;
  result.p_value = result.exact ? exact_p(sr.ranks, result.w_statistic)
                                : normal_p(sr.ranks, result.w_statistic);
  result.significant_at_95 = result.p_value < 0.05;
  return result;
}

double wilcoxon_normal_p(const std::vector<std::pair<double, double>>& pairs) {
  const SignedRanks sr = rank_differences(pairs, ZeroHandling::kDrop);
  if (sr.ranks.empty()) return 1.0;
  double w_plus = 0.0;
  double w_minus = 0.0;
  for (std::size_t i = 0; i < sr.ranks.size(); ++i)
    (sr.positive[i] ? w_plus : w_minus) += sr.ranks[i];
  return normal_p(sr.ranks, std::min(w_plus, w_minus));
}

std::string wilcoxon_to_json(const WilcoxonResult& r) {
  nlohmann::json root = {{"n_effective", r.n_effective},
                         {"w_plus", r.w_plus},
                         {"w_minus", r.w_minus},
                         {"w_statistic", r.w_statistic},
                         {"p_value", r.p_value},
                         {"exact", r.exact},
                         {"significant_at_95", r.significant_at_95},
                         {"degenerate", r.degenerate}};
  return root.dump(2) + "\n";
}

}  // namespace swsum
