#include "wound/linalg.hpp"

#include "wound/errors.hpp"

namespace wound {

RowEchelon row_reduce(Matrix m, const FieldPtr& field, std::size_t ncols) {
  for (const auto& row : m)
    if (row.size() != ncols) throw InputError("row_reduce: ragged matrix");
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const FieldElem inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldElem f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  (void)field;
  out.rref = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, const FieldPtr& field, std::size_t ncols) { return row_reduce(m, field, ncols).rank(); }

std::vector<std::vector<FieldElem>> kernel(const Matrix& m, const FieldPtr& field, std::size_t ncols) {
  RowEchelon re = row_reduce(m, field, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : re.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElem> v(ncols, FieldElem(field));
    v[free] = FieldElem::constant(field, 1);
    for (std::size_t r = 0; r < re.pivot_columns.size(); ++r) v[re.pivot_columns[r]] = -re.rref[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix transpose(const Matrix& m, const FieldPtr& field, std::size_t ncols) {
  Matrix t(ncols, std::vector<FieldElem>(m.size(), FieldElem(field)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace wound
