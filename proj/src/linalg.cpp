#include "nabc/linalg.hpp"

#include <algorithm>
#include <map>

#include "nabc/error.hpp"

namespace nabc {

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const FieldSpec& F, CoeffMatrix& A) {
  std::vector<std::size_t> pivots;
  if (A.empty()) return pivots;
  std::size_t cols = A.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < A.size(); ++col) {
    std::size_t pr = row;
    while (pr < A.size() && F.is_zero(A[pr][col])) ++pr;
    if (pr == A.size()) continue;
    std::swap(A[row], A[pr]);
    Coeff inv = F.inv(A[row][col]);
    for (auto& x : A[row]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || F.is_zero(A[i][col])) continue;
      Coeff factor = A[i][col];
      for (std::size_t j = col; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(factor, A[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

unsigned field_rank(const FieldSpec& field, CoeffMatrix rows) { return static_cast<unsigned>(rref(field, rows).size()); }

std::optional<std::vector<Coeff>> left_kernel_vector(const FieldSpec& field, const CoeffMatrix& rows) {
  // x * A = 0  <=>  A^T x = 0; solve with the transpose.
  std::size_t n = rows.size();
  if (n == 0) return std::nullopt;
  std::size_t cols = rows.front().size();
  CoeffMatrix T(cols, std::vector<Coeff>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) T[j][i] = rows[i][j];
  auto pivots = rref(field, T);
  if (pivots.size() == n) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  std::vector<Coeff> x(n, field.zero());
  x[free_col] = field.one();
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = field.neg(T[r][free_col]);
  return x;
}

CoeffMatrix coefficient_matrix(const std::vector<MvPoly>& fs) {
  std::map<Monomial, std::size_t, std::greater<>> index;
  for (const auto& f : fs)
    for (const auto& t : f.terms()) index.emplace(t.mono, 0);
  std::size_t k = 0;
  for (auto& [mono, i] : index) i = k++;
  CoeffMatrix A;
  for (const auto& f : fs) {
    std::vector<Coeff> row(index.size(), f.field().zero());
    for (const auto& t : f.terms()) row[index[t.mono]] = t.coeff;
    A.push_back(std::move(row));
  }
  return A;
}

unsigned coeff_rank(const std::vector<MvPoly>& fs) {
  if (fs.empty()) return 0;
  return field_rank(fs.front().field(), coefficient_matrix(fs));
}

std::optional<std::vector<Coeff>> coeff_relation(const std::vector<MvPoly>& fs) {
  if (fs.empty()) return std::nullopt;
  return left_kernel_vector(fs.front().field(), coefficient_matrix(fs));
}

MvPoly bareiss_det(PolyMatrix M, const FieldSpec& field, unsigned m) {
  std::size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw Error(Errc::dimension_mismatch, "determinant of a non-square matrix");
  if (n == 0) return MvPoly::one(field, m);
  bool negate = false;
  MvPoly prev = MvPoly::one(field, m);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pr = k;
    while (pr < n && M[pr][k].is_zero()) ++pr;
    if (pr == n) return MvPoly(field, m);
    if (pr != k) {
      std::swap(M[pr], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = MvPoly(field, m);
    }
    prev = M[k][k];
  }
  return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

unsigned poly_rank(PolyMatrix M) {
  if (M.empty()) return 0;
  std::size_t rows = M.size(), cols = M.front().size();
  const FieldSpec& F = M.front().front().field();
  unsigned m = M.front().front().nvars();
  MvPoly prev = MvPoly::one(F, m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && M[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(M[pr], M[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) M[i][j] = exact_div(M[i][j] * M[r][c] - M[i][c] * M[r][j], prev);
      M[i][c] = MvPoly(F, m);
    }
    prev = M[r][c];
    ++r;
  }
  return static_cast<unsigned>(r);
}

}  // namespace nabc
