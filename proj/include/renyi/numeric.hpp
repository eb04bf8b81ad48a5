#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace renyi::numeric {

/// Compensated (Neumaier) sum in the given order.
inline double compensated_sum(std::span<const double> terms) {
  double sum = 0.0;
  double carry = 0.0;
  for (double t : terms) {
    double next = sum + t;
    if (std::fabs(sum) >= std::fabs(t)) {
      carry += (sum - next) + t;
    } else {
      carry += (t - next) + sum;
    }
    sum = next;
  }
  return sum + carry;
}

/// Compensated sum of the terms taken in ascending order. The result depends
/// only on the multiset of terms, so permuting the input never changes it.
inline double sorted_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  return compensated_sum(terms);
}

/// log(Σ exp(x_i)), independent of input order. Empty input gives -inf.
inline double log_sum_exp(std::vector<double> logs) {
  if (logs.empty()) return -std::numeric_limits<double>::infinity();
  std::sort(logs.begin(), logs.end());
  const double top = logs.back();
  if (!std::isfinite(top)) return top;
  for (double& x : logs) x = std::exp(x - top);
  return top + std::log(compensated_sum(logs));
}

}  // namespace renyi::numeric
