#include "latpack/matrix.hpp"

#include <algorithm>
#include <string>

#include "latpack/error.hpp"

namespace latpack {

namespace {

void check_cells(int n, const std::vector<int>& cells) {
  if (n < 1) throw PreconditionError("matrix order must be positive");
  if (cells.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw PreconditionError("matrix of order " + std::to_string(n) + " needs " +
                            std::to_string(n * n) + " entries");
  for (int v : cells)
    if (v < 1 || v > n)
      throw PreconditionError("matrix entry " + std::to_string(v) + " outside 1.." +
                              std::to_string(n));
}

}  // namespace

SquareMatrix::SquareMatrix(const std::vector<std::vector<int>>& rows)
    : n_(static_cast<int>(rows.size())) {
  cells_.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw PreconditionError("matrix is not square");
    cells_.insert(cells_.end(), r.begin(), r.end());
  }
  check_cells(n_, cells_);
}

SquareMatrix::SquareMatrix(int n, std::vector<int> row_major) : n_(n), cells_(std::move(row_major)) {
  check_cells(n_, cells_);
}

std::vector<int> SquareMatrix::row(int i) const {
  const auto begin = cells_.begin() + static_cast<std::ptrdiff_t>((i - 1) * n_);
  return {begin, begin + n_};
}

std::vector<int> SquareMatrix::column(int j) const {
  std::vector<int> c(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) c[static_cast<std::size_t>(i - 1)] = (*this)(i, j);
  return c;
}

std::vector<std::vector<int>> SquareMatrix::rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) out.push_back(row(i));
  return out;
}

std::string_view to_string(LineKind kind) noexcept {
  switch (kind) {
    case LineKind::Row: return "row";
    case LineKind::Column: return "column";
    case LineKind::ReverseRow: return "reverse-row";
    case LineKind::ReverseColumn: return "reverse-column";
  }
  return "?";
}

std::vector<Line> lines(const SquareMatrix& m) {
  const int n = m.order();
  std::vector<Line> out;
  out.reserve(static_cast<std::size_t>(4 * n));
  for (int i = 1; i <= n; ++i) out.push_back({m.row(i), LineKind::Row, i});
  for (int j = 1; j <= n; ++j) out.push_back({m.column(j), LineKind::Column, j});
  for (int i = 1; i <= n; ++i) {
    auto s = m.row(i);
    std::reverse(s.begin(), s.end());
    out.push_back({std::move(s), LineKind::ReverseRow, i});
  }
  for (int j = 1; j <= n; ++j) {
    auto s = m.column(j);
    std::reverse(s.begin(), s.end());
    out.push_back({std::move(s), LineKind::ReverseColumn, j});
  }
  return out;
}

SquareMatrix apply_entrywise(const Permutation& r, const SquareMatrix& m) {
  if (r.degree() != m.order())
    throw PreconditionError("apply_entrywise: permutation of degree " + std::to_string(r.degree()) +
                            " applied to matrix of order " + std::to_string(m.order()));
  std::vector<int> cells(m.row_major().begin(), m.row_major().end());
  for (int& v : cells) v = r(v);
  return SquareMatrix(m.order(), std::move(cells));
}

SquareMatrix transpose(const SquareMatrix& m) {
  const int n = m.order();
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) cells[static_cast<std::size_t>((j - 1) * n + (i - 1))] = m(i, j);
  return SquareMatrix(n, std::move(cells));
}

}  // namespace latpack
