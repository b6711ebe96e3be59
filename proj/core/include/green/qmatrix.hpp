#pragma once

#include <map>
#include <optional>
#include <vector>

#include "green/cyclo.hpp"

namespace green {

struct ShapeMismatch : std::runtime_error {
  ShapeMismatch() : std::runtime_error("matrix shape mismatch") {}
};

/// Dense matrix over Q(q). All arithmetic exact.
class QMat {
public:
  QMat() : r_(0), c_(0), F_(nullptr) {}
  QMat(const CycField& F, int rows, int cols)
      : r_(rows), c_(cols), F_(&F), a_(rows * cols, F.zero()) {}

  static QMat identity(const CycField& F, int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const CycField* field() const { return F_; }

  CycNum& at(int i, int j) { return a_[i * c_ + j]; }
  const CycNum& at(int i, int j) const { return a_[i * c_ + j]; }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const CycNum& s) const;
  bool operator==(const QMat& o) const;
  bool is_zero() const;
  bool is_identity() const;

  QMat transpose() const;
  QMat pow(long e) const;  // square matrices

  /// Columns form a basis of the right kernel {v : Av = 0}.
  QMat kernel() const;
  int rank() const;
  std::optional<QMat> inverse() const;
  /// Solve A X = B exactly; nullopt when inconsistent.
  std::optional<QMat> solve(const QMat& B) const;

  /// Horizontal / vertical stacking.
  static QMat hstack(const QMat& A, const QMat& B);
  static QMat vstack(const QMat& A, const QMat& B);

  QMat cols_subset(const std::vector<int>& idx) const;

  /// Indices of a maximal set of linearly independent columns.
  std::vector<int> independent_cols() const;

private:
  int r_, c_;
  const CycField* F_;
  std::vector<CycNum> a_;
};

/// Sparse vector: column index -> nonzero coefficient.
using SparseVec = std::map<int, CycNum>;

/// Right kernel of a sparse row system with ncols unknowns, one basis vector
/// per free column. Memory stays proportional to the number of nonzeros.
std::vector<SparseVec> sparse_kernel(std::vector<SparseVec> rows, int ncols,
                                     const CycField& F);

}  // namespace green
