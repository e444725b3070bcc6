#ifndef MTQ_WEIGHTS_HPP
#define MTQ_WEIGHTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mtq/common.hpp"

namespace mtq {

/// Positive weight sequence {d_i} with d_0 = 1 and a geometric tail.
///
/// Variants:
///   Geometric(eps):     d_{i+1} = (1+eps) d_i                (nondecreasing)
///   GeometricGap(eps):  d_0 = 1, d_1 = eps, d_{i+1} = (1+eps) d_i for i >= 1
///   ExplicitPrefix:     given prefix (starting with 1), then ratio^j tail
class WeightSequence {
public:
  enum class Kind { Geometric, GeometricGap, ExplicitPrefix };

  static WeightSequence geometric(double eps);
  static WeightSequence geometric_gap(double eps);
  static WeightSequence explicit_prefix(std::vector<double> prefix,
                                        double ratio);
  /// All weights equal to one (Geometric with eps = 0).
  static WeightSequence ones() { return geometric(0.0); }

  double d(std::int64_t i) const;
  double operator[](std::int64_t i) const { return d(i); }

  /// Common ratio d_{i+1}/d_i valid for every i >= prefix_length().
  double tail_ratio() const { return ratio_; }
  /// Number of leading weights not yet in the pure geometric tail.
  std::int64_t prefix_length() const {
    return static_cast<std::int64_t>(prefix_.size());
  }

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  const std::vector<double>& prefix() const { return prefix_; }

  bool operator==(const WeightSequence&) const = default;

private:
  WeightSequence(Kind kind, double param, std::vector<double> prefix,
                 double ratio);

  Kind kind_;
  double param_;              // eps for the geometric kinds, ratio otherwise
  std::vector<double> prefix_;  // weights before the pure geometric tail
  double ratio_;
};

enum class WConvention {
  Shifted,  // W = inf_{k>=1} d_{k+1}/k
  Plain,    // W = inf_{k>=1} d_k/k
};

/// Infimum over k >= 1 of d_{k+1}/k (Shifted) or d_k/k (Plain), computed by
/// a finite scan; past max(prefix, 1/(ratio-1)) the terms are increasing.
/// Returns 0 when the infimum is not positive (ratio <= 1 tail).
double W_constant(const WeightSequence& w, WConvention convention);

/// H = sup_{|i-j|=1} d_i/d_j over the prefix and the tail ratio.
double H_constant(const WeightSequence& w, std::int64_t n_scan = 0);

/// Diagonal-weight norm: sum_i d_i |v_i|.
double weighted_l1(std::span<const double> v, const WeightSequence& w);

/// Upper-triangular-weight norm: sum_i d_i |sum_{j>=i} v_j|.
double weighted_l1_triangular(std::span<const double> v,
                              const WeightSequence& w);

} // namespace mtq

#endif
