#include "mtq/generator.hpp"

#include <algorithm>
#include <cmath>

namespace mtq {

void TruncatedSystem::matvec(std::span<const double> x,
                             std::span<double> y) const {
  if (dense) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += dense->at(i, j) * x[j];
      y[i] = acc;
    }
    return;
  }
  double acc0 = 0.0;
  for (int j = 0; j < n; ++j) acc0 += row0[j] * x[j];
  y[0] = acc0;
  for (int i = 1; i < n; ++i) {
    double acc = sub[i - 1] * x[i - 1] + diag[i] * x[i];
    if (i + 1 < n) acc += super[i] * x[i + 1];
    y[i] = acc;
  }
}

DenseMatrix TruncatedSystem::to_dense() const {
  if (dense) return *dense;
  DenseMatrix m(n);
  for (int j = 0; j < n; ++j) m.at(0, j) = row0[j];
  for (int i = 1; i < n; ++i) {
    m.at(i, i - 1) = sub[i - 1];
    m.at(i, i) = diag[i];
    if (i + 1 < n) m.at(i, i + 1) = super[i];
  }
  return m;
}

std::vector<double> TruncatedSystem::column_sums() const {
  std::vector<double> s(n, 0.0);
  if (dense) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) s[j] += dense->at(i, j);
    return s;
  }
  for (int j = 0; j < n; ++j) s[j] = row0[j];
  for (int i = 1; i < n; ++i) {
    s[i - 1] += sub[i - 1];
    s[i] += diag[i];
    if (i + 1 < n) s[i + 1] += super[i];
  }
  return s;
}

double TruncatedSystem::column_norm() const {
  double best = 0.0;
  if (dense) {
    for (int j = 0; j < n; ++j) {
      double c = 0.0;
      for (int i = 0; i < n; ++i) c += std::abs(dense->at(i, j));
      best = std::max(best, c);
    }
    return best;
  }
  for (int j = 0; j < n; ++j) {
    double c = std::abs(row0[j]);
    if (j > 0) c += std::abs(diag[j]);
    if (j >= 2) c += std::abs(super[j - 1]);
    if (j + 1 < n) c += std::abs(sub[j]);
    best = std::max(best, c);
  }
  return best;
}

namespace {

TruncatedSystem make_system(Variant variant, CoordLayout layout, int n) {
  TruncatedSystem s;
  s.variant = variant;
  s.layout = layout;
  s.n = n;
  s.row0.assign(static_cast<std::size_t>(n), 0.0);
  s.diag.assign(static_cast<std::size_t>(n), 0.0);
  s.sub.assign(static_cast<std::size_t>(n - 1), 0.0);
  s.super.assign(static_cast<std::size_t>(n), 0.0);
  return s;
}

} // namespace

void refresh_A(TruncatedSystem& sys, const QueueModel& model, double t) {
  const int n = sys.n;
  const double lam = model.lambda.value(t);
  const double mu = model.mu.value(t);
  const double bet = model.beta.value(t);
  const double eta = model.eta.value(t);
  sys.t = t;

  sys.row0[0] = -eta;
  for (int j = 1; j < n; ++j) sys.row0[j] = model.gammas.value(j - 1, t);
  sys.sub[0] = eta;

  for (int i = 1; i < n; ++i) {
    const std::int64_t s = i - 1;  // queue state of coordinate i
    const double birth = s < model.k ? lam : lam * bet;
    const double service = s >= 1 ? mu : 0.0;
    const bool last = i == n - 1;
    sys.diag[i] = -(model.gammas.value(s, t) + service + (last ? 0.0 : birth));
    if (!last) sys.sub[i] = birth;
    if (i >= 1 && i + 1 < n) sys.super[i] = mu;
  }
  sys.diag[0] = sys.row0[0];
}

TruncatedSystem build_A(const QueueModel& model, double t, int n) {
  if (n < 3) throw InvalidArgument("full generator needs n >= 3");
  TruncatedSystem sys = make_system(Variant::FullA, CoordLayout::RepairFirst, n);
  refresh_A(sys, model, t);
  return sys;
}

void refresh_A_star(TruncatedSystem& sys, const QueueModel& model, double t) {
  refresh_A(sys, model, t);
  const double gs = gamma_star(model, t);
  for (int j = 0; j < sys.n; ++j) sys.row0[j] -= gs;
  sys.diag[0] = sys.row0[0];
  if (!sys.forcing) sys.forcing.emplace(static_cast<std::size_t>(sys.n), 0.0);
  std::fill(sys.forcing->begin(), sys.forcing->end(), 0.0);
  (*sys.forcing)[0] = gs;
}

TruncatedSystem build_A_star(const QueueModel& model, double t, int n) {
  if (n < 3) throw InvalidArgument("reduced generator needs n >= 3");
  TruncatedSystem sys =
      make_system(Variant::ReducedAStar, CoordLayout::RepairFirst, n);
  refresh_A_star(sys, model, t);
  return sys;
}

void refresh_B(TruncatedSystem& sys, const QueueModel& model, double t,
               BMode mode) {
  const int n = sys.n;
  const double lam = model.lambda.value(t);
  const double mu = model.mu.value(t);
  const double bet = model.beta.value(t);
  const double eta = model.eta.value(t);
  sys.t = t;

  auto gamma_at = [&](std::int64_t s) {
    return mode == BMode::Equal ? gamma_star(model, t)
                                : model.gammas.value(s, t);
  };
  auto birth_at = [&](std::int64_t s) { return s < model.k ? lam : lam * bet; };

  // Rows i >= 1 are tridiagonal in both modes.
  for (int i = 1; i < n; ++i) {
    sys.sub[i - 1] = birth_at(i - 1);
    sys.diag[i] = -(birth_at(i) + gamma_at(i) + mu);
    if (i + 1 < n) sys.super[i] = mu;
  }

  if (mode == BMode::Equal) {
    sys.row0[0] = -(birth_at(0) + gamma_at(0));
    if (n > 1) sys.row0[1] = mu;
    std::fill(sys.row0.begin() + std::min(n, 2), sys.row0.end(), 0.0);
    sys.forcing.reset();  // (eta(t) r(t), 0, ...) is composed by the solver
  } else {
    sys.row0[0] = -(birth_at(0) + gamma_at(0) + eta);
    if (n > 1) sys.row0[1] = mu - eta;
    for (int j = 2; j < n; ++j) sys.row0[j] = -eta;
    if (!sys.forcing) sys.forcing.emplace(static_cast<std::size_t>(n), 0.0);
    std::fill(sys.forcing->begin(), sys.forcing->end(), 0.0);
    (*sys.forcing)[0] = eta;
  }
  sys.diag[0] = sys.row0[0];
}

TruncatedSystem build_B(const QueueModel& model, double t, int n, BMode mode) {
  if (n < 2) throw InvalidArgument("queue-only generator needs n >= 2");
  if (mode == BMode::Equal && !model.gammas.is_uniform())
    throw InvalidArgument(
        "equal-rate reduction requires identical catastrophe rates");
  TruncatedSystem sys = make_system(
      mode == BMode::Equal ? Variant::BEqual : Variant::BGeneral,
      CoordLayout::QueueFirst, n);
  refresh_B(sys, model, t, mode);
  return sys;
}

DenseMatrix triangular_weight_matrix(const WeightSequence& w, int n) {
  DenseMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.at(i, j) = w.d(i);
  return m;
}

DenseMatrix triangular_weight_inverse(const WeightSequence& w, int n) {
  DenseMatrix m(n);
  for (int j = 0; j < n; ++j) {
    m.at(j, j) = 1.0 / w.d(j);
    if (j >= 1) m.at(j - 1, j) = -1.0 / w.d(j);
  }
  return m;
}

TruncatedSystem weight_transform(const TruncatedSystem& sys,
                                 const WeightSequence& w) {
  if (sys.variant != Variant::BGeneral)
    throw InvalidArgument("weight transform applies to the general B matrix");
  const int n = sys.n;
  TruncatedSystem out;
  out.variant = Variant::BWeighted;
  out.layout = CoordLayout::QueueFirst;
  out.n = n;
  out.t = sys.t;
  out.dense.emplace(n);

  // (D B D^{-1})_{ij} = (d_i/d_j) (S_{ij} - S_{i,j-1}) with the truncated
  // suffix column sums S_{ij} = sum_{k>=i} B_{kj}; S_{i,-1} = 0.
  std::vector<double> suffix(static_cast<std::size_t>(n) *
                             static_cast<std::size_t>(n + 1));
  auto S = [&](int i, int j) -> double& {
    return suffix[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(i)];
  };
  DenseMatrix b = sys.to_dense();
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int i = n; i-- > 0;) {
      acc += b.at(i, j);
      S(i, j) = acc;
    }
  }
  for (int i = 0; i < n; ++i) {
    const double di = w.d(i);
    for (int j = 0; j < n; ++j) {
      const double prev = j > 0 ? S(i, j - 1) : 0.0;
      out.dense->at(i, j) = di / w.d(j) * (S(i, j) - prev);
    }
  }
  return out;
}

} // namespace mtq
