#include "mtq/weights.hpp"

#include <algorithm>
#include <cmath>

namespace mtq {

WeightSequence::WeightSequence(Kind kind, double param,
                               std::vector<double> prefix, double ratio)
    : kind_(kind), param_(param), prefix_(std::move(prefix)), ratio_(ratio) {
  if (prefix_.empty() || prefix_.front() != 1.0)
    throw InvalidArgument("weight sequence must start with d_0 = 1");
  for (double d : prefix_)
    if (!(d > 0.0)) throw InvalidArgument("weights must be positive");
  if (!(ratio_ > 0.0)) throw InvalidArgument("weight tail ratio must be > 0");
}

WeightSequence WeightSequence::geometric(double eps) {
  if (eps < 0.0) throw InvalidArgument("geometric weights need eps >= 0");
  return WeightSequence(Kind::Geometric, eps, {1.0}, 1.0 + eps);
}

WeightSequence WeightSequence::geometric_gap(double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("gap weights need eps > 0");
  return WeightSequence(Kind::GeometricGap, eps, {1.0, eps}, 1.0 + eps);
}

WeightSequence WeightSequence::explicit_prefix(std::vector<double> prefix,
                                               double ratio) {
  return WeightSequence(Kind::ExplicitPrefix, ratio, std::move(prefix), ratio);
}

double WeightSequence::d(std::int64_t i) const {
  if (i < 0) throw InvalidArgument("weight index must be >= 0");
  const auto m = static_cast<std::int64_t>(prefix_.size());
  if (i < m) return prefix_[static_cast<std::size_t>(i)];
  return prefix_.back() * std::pow(ratio_, static_cast<double>(i - m + 1));
}

double W_constant(const WeightSequence& w, WConvention convention) {
  const double rho = w.tail_ratio();
  if (rho <= 1.0) return 0.0;  // d_k/k -> 0, infimum not positive
  // Once (k+1)/k <= rho the scanned terms increase forever.
  const auto turn = static_cast<std::int64_t>(std::ceil(1.0 / (rho - 1.0)));
  const std::int64_t k_max = std::max<std::int64_t>(w.prefix_length(), turn) + 2;
  double inf = std::numeric_limits<double>::infinity();
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const double num = convention == WConvention::Shifted ? w.d(k + 1) : w.d(k);
    inf = std::min(inf, num / static_cast<double>(k));
  }
  return inf;
}

double H_constant(const WeightSequence& w, std::int64_t n_scan) {
  const std::int64_t limit =
      n_scan > 0 ? n_scan : w.prefix_length() + 2;
  double h = std::max(w.tail_ratio(), 1.0 / w.tail_ratio());
  for (std::int64_t i = 0; i < limit; ++i) {
    const double r = w.d(i + 1) / w.d(i);
    h = std::max({h, r, 1.0 / r});
  }
  return h;
}

double weighted_l1(std::span<const double> v, const WeightSequence& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += w.d(static_cast<std::int64_t>(i)) * std::abs(v[i]);
  return s;
}

double weighted_l1_triangular(std::span<const double> v,
                              const WeightSequence& w) {
  double s = 0.0;
  double suffix = 0.0;
  std::vector<double> suffixes(v.size());
  for (std::size_t i = v.size(); i-- > 0;) {
    suffix += v[i];
    suffixes[i] = suffix;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    s += w.d(static_cast<std::int64_t>(i)) * std::abs(suffixes[i]);
  return s;
}

} // namespace mtq
