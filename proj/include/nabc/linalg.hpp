#pragma once

#include <optional>
#include <vector>

#include "nabc/mvpoly.hpp"

namespace nabc {

using CoeffMatrix = std::vector<std::vector<Coeff>>;
using PolyMatrix = std::vector<std::vector<MvPoly>>;

/// Rank over the field by Gaussian elimination.
unsigned field_rank(const FieldSpec& field, CoeffMatrix rows);

/// A nonzero x with x * rows = 0 (a left-kernel vector), if the rows are dependent.
std::optional<std::vector<Coeff>> left_kernel_vector(const FieldSpec& field, const CoeffMatrix& rows);

/// Coefficient vectors of fs over the union of their supports.
CoeffMatrix coefficient_matrix(const std::vector<MvPoly>& fs);

/// Dimension of the F-span of fs.
unsigned coeff_rank(const std::vector<MvPoly>& fs);

/// A nonzero c with sum c_j f_j = 0 when fs are F-dependent.
std::optional<std::vector<Coeff>> coeff_relation(const std::vector<MvPoly>& fs);

/// Determinant by fraction-free (Bareiss) elimination with row swaps.
/// Throws DIMENSION_MISMATCH for a non-square matrix.
MvPoly bareiss_det(PolyMatrix M, const FieldSpec& field, unsigned m);

/// Rank over the fraction field, by fraction-free elimination with the first
/// nonzero entry of each column as pivot.
unsigned poly_rank(PolyMatrix M);

}  // namespace nabc
