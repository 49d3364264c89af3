#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace swsum {

enum class ZeroHandling {
  kDrop,   // Wilcoxon: discard zero differences before ranking
  kPratt,  // rank zeros, then discard their ranks
};

struct WilcoxonOptions {
  ZeroHandling zeros = ZeroHandling::kDrop;
  // Largest effective sample size handled by exact enumeration.
  std::size_t exact_limit = 12;
};

struct WilcoxonResult {
  std::size_t n_effective = 0;
  double w_plus = 0.0;
  double w_minus = 0.0;
  double w_statistic = 0.0;  // min(w_plus, w_minus)
  double p_value = 1.0;      // two-sided
  bool exact = true;
  bool significant_at_95 = false;
  // Every difference was zero; p_value is 1.
  bool degenerate = false;
};

// Paired two-sided signed-rank test on (a_i, b_i). Ties in |a_i - b_i| get
// average ranks. Throws EmptyInput on no pairs.
WilcoxonResult wilcoxon_signed_rank(
    const std::vector<std::pair<double, double>>& pairs,
    const WilcoxonOptions& options = {});

// Two-sided normal approximation with tie-corrected variance and continuity
// correction, regardless of n. Exposed for comparison with the exact path.
double wilcoxon_normal_p(const std::vector<std::pair<double, double>>& pairs);

std::string wilcoxon_to_json(const WilcoxonResult& result);

}  // namespace swsum
