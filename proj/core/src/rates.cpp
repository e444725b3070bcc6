#include "mtq/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mtq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kNonnegGrid = 10000;
constexpr double kNonnegTol = -1e-12;

} // namespace

RateFunction::RateFunction(double a0, std::vector<Harmonic> harmonics)
    : a0_(a0), harmonics_(std::move(harmonics)) {
  for (const Harmonic& h : harmonics_) {
    if (h.j < 1) throw InvalidArgument("harmonic frequency must be >= 1");
  }
  if (inf_bound() >= 0.0) return;  // coefficient certificate
  double min_val = a0_;
  for (std::size_t i = 0; i <= kNonnegGrid; ++i) {
    min_val = std::min(
        min_val, value(static_cast<double>(i) / static_cast<double>(kNonnegGrid)));
    if (min_val < kNonnegTol) {
      throw InvalidArgument("rate function is negative on [0,1]");
    }
  }
}

double RateFunction::value(double t) const {
  double v = a0_;
  for (const Harmonic& h : harmonics_) {
    const double w = kTwoPi * h.j * t;
    v += h.sin_coef * std::sin(w) + h.cos_coef * std::cos(w);
  }
  return v;
}

double RateFunction::antiderivative(double t) const {
  double v = a0_ * t;
  for (const Harmonic& h : harmonics_) {
    const double w = kTwoPi * h.j;
    v += -h.sin_coef / w * (std::cos(w * t) - 1.0) +
         h.cos_coef / w * std::sin(w * t);
  }
  return v;
}

double RateFunction::sup_bound() const {
  double s = a0_;
  for (const Harmonic& h : harmonics_)
    s += std::abs(h.sin_coef) + std::abs(h.cos_coef);
  return s;
}

double RateFunction::inf_bound() const {
  double s = a0_;
  for (const Harmonic& h : harmonics_)
    s -= std::abs(h.sin_coef) + std::abs(h.cos_coef);
  return s;
}

double CatastropheFamily::infimum(double t) const {
  double v = tail_.value(t);
  for (const RateFunction& g : explicit_) v = std::min(v, g.value(t));
  return v;
}

bool CatastropheFamily::is_uniform() const {
  return std::all_of(explicit_.begin(), explicit_.end(),
                     [&](const RateFunction& g) { return g == tail_; });
}

void QueueModel::validate() const {
  if (k < 1) throw InvalidArgument("balking threshold k must be >= 1");
  if (beta.inf_bound() >= 0.0 && beta.sup_bound() <= 1.0) return;
  for (std::size_t i = 0; i <= 10000; ++i) {
    const double b = beta.value(static_cast<double>(i) / 10000.0);
    if (b < -1e-12 || b > 1.0 + 1e-12) {
      throw InvalidArgument("beta(t) must stay within [0,1]");
    }
  }
}

double gamma_star(const QueueModel& model, double t) {
  return model.gammas.infimum(t);
}

namespace {

// Largest certified sup over the gamma family restricted to states in
// [lo, hi]; the tail covers every index >= prefix size.
double gamma_sup_bound(const CatastropheFamily& fam, std::int64_t lo,
                       std::int64_t hi) {
  double s = 0.0;
  bool any = false;
  const auto m = static_cast<std::int64_t>(fam.prefix_size());
  for (std::int64_t n = lo; n <= std::min(hi, m - 1); ++n) {
    s = std::max(s, fam.member(n).sup_bound());
    any = true;
  }
  if (hi >= m) {
    s = std::max(s, fam.tail().sup_bound());
    any = true;
  }
  return any ? s : 0.0;
}

double gamma_grid_max(const CatastropheFamily& fam, std::int64_t lo,
                      std::int64_t hi, double t) {
  double s = 0.0;
  bool any = false;
  const auto m = static_cast<std::int64_t>(fam.prefix_size());
  for (std::int64_t n = lo; n <= std::min(hi, m - 1); ++n) {
    s = std::max(s, fam.member(n).value(t));
    any = true;
  }
  if (hi >= m) {
    s = std::max(s, fam.tail().value(t));
    any = true;
  }
  return any ? s : 0.0;
}

} // namespace

double rate_bound_L(const QueueModel& model) {
  const double lam = model.lambda.sup_bound();
  const double mu = model.mu.sup_bound();
  const double lam_beta = model.lambda.sup_bound() * model.beta.sup_bound();
  const auto& fam = model.gammas;
  const std::int64_t k = model.k;

  double L = model.eta.sup_bound();
  L = std::max(L, lam + fam.member(0).sup_bound());
  if (k >= 2) L = std::max(L, lam + mu + gamma_sup_bound(fam, 1, k - 1));
  L = std::max(L, lam_beta + mu + fam.member(k).sup_bound());
  L = std::max(L, lam_beta + mu +
                      gamma_sup_bound(fam, k + 1,
                                      std::numeric_limits<std::int64_t>::max()));
  return L;
}

double rate_bound_grid(const QueueModel& model, std::size_t grid) {
  const auto& fam = model.gammas;
  const std::int64_t k = model.k;
  double L = 0.0;
  for (std::size_t i = 0; i <= grid; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid);
    const double lam = model.lambda.value(t);
    const double mu = model.mu.value(t);
    const double lb = lam * model.beta.value(t);
    L = std::max(L, model.eta.value(t));
    L = std::max(L, lam + fam.value(0, t));
    if (k >= 2) L = std::max(L, lam + mu + gamma_grid_max(fam, 1, k - 1, t));
    L = std::max(L, lb + mu + fam.value(k, t));
    L = std::max(
        L, lb + mu +
               gamma_grid_max(fam, k + 1,
                              std::numeric_limits<std::int64_t>::max(), t));
  }
  return L;
}

} // namespace mtq
