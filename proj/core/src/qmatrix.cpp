#include "green/qmatrix.hpp"

#include <algorithm>
#include <cassert>

namespace green {

namespace {

// Cheap size score for pivot selection; small entries limit coefficient growth.
size_t complexity(const CycNum& x) {
  size_t s = 0;
  for (const Rat& r : x.coeffs()) {
    s += mpz_size(r.get_num().get_mpz_t());
    s += mpz_size(r.get_den().get_mpz_t());
  }
  return s;
}

struct Echelon {
  std::vector<std::vector<CycNum>> rows;  // RREF rows
  std::vector<int> pivot_col;             // per RREF row
};

// Reduced row echelon form of the matrix rows.
Echelon rref(const QMat& A) {
  const CycField& F = *A.field();
  int m = A.rows(), n = A.cols();
  std::vector<std::vector<CycNum>> rows(m, std::vector<CycNum>(n, F.zero()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = A.at(i, j);

  Echelon e;
  int rr = 0;
  for (int col = 0; col < n && rr < m; ++col) {
    int best = -1;
    size_t best_score = 0;
    for (int i = rr; i < m; ++i) {
      if (rows[i][col].is_zero()) continue;
      size_t sc = complexity(rows[i][col]);
      if (best < 0 || sc < best_score) {
        best = i;
        best_score = sc;
      }
    }
    if (best < 0) continue;
    std::swap(rows[rr], rows[best]);
    CycNum inv = rows[rr][col].inverse();
    for (int j = col; j < n; ++j)
      if (!rows[rr][j].is_zero()) rows[rr][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == rr || rows[i][col].is_zero()) continue;
      CycNum f = rows[i][col];
      for (int j = col; j < n; ++j) {
        if (rows[rr][j].is_zero()) continue;
        rows[i][j] -= f * rows[rr][j];
      }
    }
    e.pivot_col.push_back(col);
    ++rr;
  }
  rows.resize(rr);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

QMat QMat::identity(const CycField& F, int n) {
  QMat I(F, n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = F.one();
  return I;
}

QMat QMat::operator*(const QMat& o) const {
  if (c_ != o.r_) throw ShapeMismatch();
  QMat R(*F_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const CycNum& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        R.at(i, j) += v * o.at(k, j);
      }
    }
  return R;
}

QMat QMat::operator+(const QMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch();
  QMat R = *this;
  for (size_t i = 0; i < a_.size(); ++i) R.a_[i] += o.a_[i];
  return R;
}

QMat QMat::operator-(const QMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch();
  QMat R = *this;
  for (size_t i = 0; i < a_.size(); ++i) R.a_[i] -= o.a_[i];
  return R;
}

QMat QMat::scaled(const CycNum& s) const {
  QMat R = *this;
  for (CycNum& x : R.a_) x *= s;
  return R;
}

bool QMat::operator==(const QMat& o) const {
  return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool QMat::is_zero() const {
  for (const CycNum& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool QMat::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

QMat QMat::transpose() const {
  QMat R(*F_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) R.at(j, i) = at(i, j);
  return R;
}

QMat QMat::pow(long e) const {
  assert(r_ == c_ && e >= 0);
  QMat R = identity(*F_, r_);
  QMat base = *this;
  while (e > 0) {
    if (e & 1) R = R * base;
    base = base * base;
    e >>= 1;
  }
  return R;
}

QMat QMat::kernel() const {
  Echelon e = rref(*this);
  int nfree = c_ - (int)e.pivot_col.size();
  QMat K(*F_, c_, nfree);
  std::vector<int> is_pivot(c_, -1);
  for (size_t i = 0; i < e.pivot_col.size(); ++i) is_pivot[e.pivot_col[i]] = (int)i;
  int k = 0;
  for (int j = 0; j < c_; ++j) {
    if (is_pivot[j] >= 0) continue;
    K.at(j, k) = F_->one();
    for (size_t i = 0; i < e.pivot_col.size(); ++i)
      K.at(e.pivot_col[i], k) = -e.rows[i][j];
    ++k;
  }
  return K;
}

int QMat::rank() const { return (int)rref(*this).pivot_col.size(); }

std::optional<QMat> QMat::inverse() const {
  if (r_ != c_) return std::nullopt;
  QMat aug = hstack(*this, identity(*F_, r_));
  Echelon e = rref(aug);
  if ((int)e.pivot_col.size() < r_ || e.pivot_col[r_ - 1] >= r_) return std::nullopt;
  QMat R(*F_, r_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) R.at(i, j) = e.rows[i][r_ + j];
  return R;
}

std::optional<QMat> QMat::solve(const QMat& B) const {
  if (B.r_ != r_) throw ShapeMismatch();
  QMat aug = hstack(*this, B);
  Echelon e = rref(aug);
  QMat X(*F_, c_, B.c_);
  for (size_t i = 0; i < e.pivot_col.size(); ++i) {
    if (e.pivot_col[i] >= c_) return std::nullopt;  // inconsistent
    for (int j = 0; j < B.c_; ++j) X.at(e.pivot_col[i], j) = e.rows[i][c_ + j];
  }
  return X;
}

QMat QMat::hstack(const QMat& A, const QMat& B) {
  if (A.r_ != B.r_) throw ShapeMismatch();
  QMat R(*A.F_, A.r_, A.c_ + B.c_);
  for (int i = 0; i < A.r_; ++i) {
    for (int j = 0; j < A.c_; ++j) R.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.c_; ++j) R.at(i, A.c_ + j) = B.at(i, j);
  }
  return R;
}

QMat QMat::vstack(const QMat& A, const QMat& B) {
  if (A.c_ != B.c_) throw ShapeMismatch();
  QMat R(*A.F_, A.r_ + B.r_, A.c_);
  for (int i = 0; i < A.r_; ++i)
    for (int j = 0; j < A.c_; ++j) R.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.r_; ++i)
    for (int j = 0; j < A.c_; ++j) R.at(A.r_ + i, j) = B.at(i, j);
  return R;
}

QMat QMat::cols_subset(const std::vector<int>& idx) const {
  QMat R(*F_, r_, (int)idx.size());
  for (int i = 0; i < r_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) R.at(i, (int)j) = at(i, idx[j]);
  return R;
}

std::vector<int> QMat::independent_cols() const { return rref(*this).pivot_col; }

namespace {

// dst -= s * src, dropping entries that cancel to zero.
void sparse_axpy(SparseVec& dst, const CycNum& s, const SparseVec& src) {
  for (const auto& [col, v] : src) {
    auto it = dst.find(col);
    if (it == dst.end()) {
      dst.emplace(col, -(s * v));
    } else {
      it->second -= s * v;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

}  // namespace

std::vector<SparseVec> sparse_kernel(std::vector<SparseVec> rows, int ncols,
                                     const CycField& F) {
  // Incremental RREF: piv maps a pivot column to its normalized row, which has
  // no entries in any other pivot column. Rows are inserted sparsest first.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseVec& a, const SparseVec& b) {
                     return a.size() < b.size();
                   });
  std::map<int, SparseVec> piv;
  for (SparseVec& row : rows) {
    // Reduce against existing pivots. Elimination only introduces entries in
    // free columns, so one pass over the pivot-column entries suffices.
    std::vector<std::pair<int, CycNum>> hits;
    for (const auto& [col, v] : row)
      if (piv.count(col)) hits.push_back({col, v});
    for (const auto& [col, v] : hits) sparse_axpy(row, v, piv.at(col));
    if (row.empty()) continue;
    int p = row.begin()->first;
    CycNum inv = row.begin()->second.inverse();
    for (auto& [col, v] : row) v *= inv;
    for (auto& [q, prow] : piv) {
      auto it = prow.find(p);
      if (it != prow.end()) {
        CycNum s = it->second;
        sparse_axpy(prow, s, row);
      }
    }
    piv.emplace(p, std::move(row));
  }
  std::vector<SparseVec> kernel;
  for (int f = 0; f < ncols; ++f) {
    if (piv.count(f)) continue;
    SparseVec v;
    v[f] = F.one();
    for (const auto& [p, prow] : piv) {
      auto it = prow.find(f);
      if (it != prow.end()) v[p] = -it->second;
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace green
