#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "latpack/permutation.hpp"

namespace latpack {

/// An n-by-n array of symbols in {1..n}, stored row-major.
class SquareMatrix {
public:
  SquareMatrix() = default;

  /// Throws PreconditionError unless `rows` is n-by-n with entries in {1..n}.
  explicit SquareMatrix(const std::vector<std::vector<int>>& rows);
  SquareMatrix(int n, std::vector<int> row_major);

  int order() const noexcept { return n_; }

  /// 1-based access.
  int operator()(int i, int j) const {
    return cells_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
  }

  std::span<const int> row_major() const noexcept { return cells_; }
  std::vector<int> row(int i) const;
  std::vector<int> column(int j) const;
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
  int n_ = 0;
  std::vector<int> cells_;
};

enum class LineKind { Row, Column, ReverseRow, ReverseColumn };

std::string_view to_string(LineKind kind) noexcept;

struct Line {
  std::vector<int> seq;
  LineKind kind;
  int index;  // 1..n
};

/// All 4n lines in canonical order: rows, columns, reverse rows, reverse columns.
std::vector<Line> lines(const SquareMatrix& m);

/// (r M)(i, j) = r(M(i, j)). Throws PreconditionError on order mismatch.
SquareMatrix apply_entrywise(const Permutation& r, const SquareMatrix& m);

SquareMatrix transpose(const SquareMatrix& m);

}  // namespace latpack
