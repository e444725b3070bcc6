#ifndef MTQ_GENERATOR_HPP
#define MTQ_GENERATOR_HPP

#include <optional>
#include <vector>

#include "mtq/rates.hpp"
#include "mtq/weights.hpp"

namespace mtq {

/// Dense row-major square matrix used for transforms and test oracles.
struct DenseMatrix {
  int n = 0;
  std::vector<double> a;  // row-major, n*n

  explicit DenseMatrix(int dim = 0)
      : n(dim), a(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                  0.0) {}
  double& at(int i, int j) {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  }
  double at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  }
};

enum class Variant { FullA, ReducedAStar, BEqual, BGeneral, BWeighted };

/// Whether coordinate 0 is the repair state r or queue state p_0.
enum class CoordLayout { RepairFirst, QueueFirst };

/// Finite section of a generator at a fixed time: tridiagonal bands plus an
/// explicit dense row 0 (the catastrophe row of (FullA, ReducedAStar) or the
/// repair-elimination row of BGeneral), and an optional forcing vector.
/// BWeighted sections are dense and stored in `dense`.
struct TruncatedSystem {
  Variant variant = Variant::FullA;
  CoordLayout layout = CoordLayout::RepairFirst;
  int n = 0;
  double t = 0.0;

  std::vector<double> row0;   // full first row, size n
  std::vector<double> diag;   // diag[i] = m[i][i]; diag[0] mirrors row0[0]
  std::vector<double> sub;    // sub[i] = m[i+1][i], size n-1
  std::vector<double> super;  // super[i] = m[i][i+1] for i >= 1, size n
  std::optional<std::vector<double>> forcing;
  std::optional<DenseMatrix> dense;

  void matvec(std::span<const double> x, std::span<double> y) const;
  DenseMatrix to_dense() const;
  std::vector<double> column_sums() const;
  /// Column-sum operator norm max_j sum_i |m_ij|.
  double column_norm() const;
};

enum class BMode { Equal, General };

/// Transposed intensity matrix of the full process, coordinates
/// (r, p_0, ..., p_{n-2}), closed conservatively: the arrival flux out of
/// the last retained queue state is dropped from its diagonal so every
/// column sums to zero exactly.
TruncatedSystem build_A(const QueueModel& model, double t, int n);

/// Reduced matrix of the first approach: row 0 of build_A with gamma*(t)
/// subtracted across the row, plus forcing (gamma*(t), 0, ..., 0).
TruncatedSystem build_A_star(const QueueModel& model, double t, int n);

/// Queue-only matrix of the second approach, coordinates (p_0, ..., p_{n-1}),
/// plain leading principal section (no closure).
///   Equal:   requires identical catastrophe rates; the forcing
///            (eta(t) r(t), 0, ...) is supplied at integration time.
///   General: row 0 absorbs the substitution r = 1 - sum p_i; forcing
///            (eta(t), 0, ..., 0).
TruncatedSystem build_B(const QueueModel& model, double t, int n, BMode mode);

/// In-place refresh of a previously built system at a new time; avoids
/// reallocation inside integrator stage loops.
void refresh_A(TruncatedSystem& sys, const QueueModel& model, double t);
void refresh_A_star(TruncatedSystem& sys, const QueueModel& model, double t);
void refresh_B(TruncatedSystem& sys, const QueueModel& model, double t,
               BMode mode);

/// Finite section of D B D^{-1} for the upper-triangular cumulative weight
/// matrix D (row i equals d_i from column i rightward).  Requires a
/// BGeneral input; returns a dense BWeighted system.
TruncatedSystem weight_transform(const TruncatedSystem& sys,
                                 const WeightSequence& w);

/// Dense n-section of the triangular weight matrix and of its inverse
/// (upper bidiagonal: 1/d_j on the diagonal, -1/d_j above it).
DenseMatrix triangular_weight_matrix(const WeightSequence& w, int n);
DenseMatrix triangular_weight_inverse(const WeightSequence& w, int n);

} // namespace mtq

#endif
