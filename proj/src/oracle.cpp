#include "logmaj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "logmaj/error.hpp"

namespace logmaj {

StepFunction diag_mu(const DiagonalSpec& spec) {
  std::vector<double> moduli;
  moduli.reserve(spec.entries.size());
  for (const Complex& d : spec.entries) moduli.push_back(std::abs(d));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());
  return uniform_step(moduli);
}

double brute_integral(const StepFunction& f, const IntervalSet& k, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::kOutOfRange, "need at least one subdivision");
  double total = 0.0;
  for (const auto& [a, b] : k.intervals()) {
    const double h = (b - a) / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double v = eval_right(f, a + (static_cast<double>(i) + 0.5) * h);
      if (!(v > 0.0)) throw Error(ErrorCode::kZeroOnK, "f vanishes on K");
      total += h * std::log(v);
    }
  }
  return total;
}

ScalarHarnack scalar_harnack(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::kOutOfRange, "r must lie in [0, 1)");
  const double up = (1.0 + r) / (1.0 - r);
  return {up, up, (1.0 - r) / (1.0 + r)};
}

}  // namespace logmaj
