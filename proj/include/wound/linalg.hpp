#pragma once

#include <vector>

#include "wound/field.hpp"

namespace wound {

using Matrix = std::vector<std::vector<FieldElem>>;

struct RowEchelon {
  Matrix rref;                          // reduced row echelon form
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination over a tower level. `ncols` is needed when the
/// matrix has no rows.
RowEchelon row_reduce(Matrix m, const FieldPtr& field, std::size_t ncols);

std::size_t rank(const Matrix& m, const FieldPtr& field, std::size_t ncols);

/// Basis of {x : m x = 0}, one vector per free column with that column set
/// to 1, in increasing free-column order.
std::vector<std::vector<FieldElem>> kernel(const Matrix& m, const FieldPtr& field, std::size_t ncols);

Matrix transpose(const Matrix& m, const FieldPtr& field, std::size_t ncols);

}  // namespace wound
