#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

// Exact Gaussian elimination over an arbitrary field scalar (mpq_class or
// Cyclotomic).  Eigen's own decompositions assume an ordered scalar with
// meaningful pivoting heuristics, so pivoting here is simply "first nonzero".

namespace thetarep {

template <class S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<int> row_reduce(DenseMat<S>& m) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!(m(i, c) == S(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      if (m(i, c) == S(0)) continue;
      S f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
int rank_of(DenseMat<S> m) {
  return static_cast<int>(row_reduce(m).size());
}

// Columns of the returned matrix form a basis of ker(m).
template <class S>
DenseMat<S> kernel_basis(const DenseMat<S>& m) {
  DenseMat<S> r = m;
  std::vector<int> pivots = row_reduce(r);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMat<S> k(cols, static_cast<int>(free_cols.size()));
  k.setConstant(S(0));
  for (int fi = 0; fi < static_cast<int>(free_cols.size()); ++fi) {
    int fc = free_cols[fi];
    k(fc, fi) = S(1);
    for (int pi = 0; pi < static_cast<int>(pivots.size()); ++pi)
      k(pivots[pi], fi) = S(0) - r(pi, fc);
  }
  return k;
}

// Solves A x = b exactly; nullopt when inconsistent.
template <class S>
std::optional<DenseVec<S>> solve_exact(const DenseMat<S>& a,
                                       const DenseVec<S>& b) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  DenseMat<S> aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<int> pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  DenseVec<S> x(cols);
  for (int j = 0; j < cols; ++j) x(j) = S(0);
  for (int pi = 0; pi < static_cast<int>(pivots.size()); ++pi)
    x(pivots[pi]) = aug(pi, cols);
  return x;
}

// Coordinates of each column of v in the column span of basis, or nullopt.
template <class S>
std::optional<DenseMat<S>> coordinates_in_span(const DenseMat<S>& basis,
                                               const DenseMat<S>& v) {
  DenseMat<S> out(basis.cols(), v.cols());
  for (int j = 0; j < v.cols(); ++j) {
    auto x = solve_exact<S>(basis, v.col(j));
    if (!x) return std::nullopt;
    out.col(j) = *x;
  }
  return out;
}

template <class S>
bool in_column_span(const DenseMat<S>& basis, const DenseVec<S>& v) {
  return solve_exact<S>(basis, v).has_value();
}

// Basis of the intersection of two column spans.
template <class S>
DenseMat<S> span_intersection(const DenseMat<S>& a, const DenseMat<S>& b) {
  DenseMat<S> j(a.rows(), a.cols() + b.cols());
  j.leftCols(a.cols()) = a;
  j.rightCols(b.cols()) = -b;
  DenseMat<S> k = kernel_basis<S>(j);
  DenseMat<S> out(a.rows(), k.cols());
  for (int c = 0; c < k.cols(); ++c)
    out.col(c) = a * k.col(c).topRows(a.cols());
  return out;
}

// Prunes columns to an independent spanning subset.
template <class S>
DenseMat<S> column_space_basis(const DenseMat<S>& m) {
  DenseMat<S> r = m;
  std::vector<int> pivots = row_reduce(r);
  DenseMat<S> out(m.rows(), static_cast<int>(pivots.size()));
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
    out.col(i) = m.col(pivots[i]);
  return out;
}

template <class S>
bool same_column_span(const DenseMat<S>& a, const DenseMat<S>& b) {
  if (rank_of<S>(a) != rank_of<S>(b)) return false;
  for (int c = 0; c < b.cols(); ++c)
    if (!in_column_span<S>(a, DenseVec<S>(b.col(c)))) return false;
  return true;
}

}  // namespace thetarep
