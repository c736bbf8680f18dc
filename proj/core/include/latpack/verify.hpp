#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "latpack/caps.hpp"
#include "latpack/constructions.hpp"
#include "latpack/matrix.hpp"

namespace latpack {

bool is_latin(const SquareMatrix& m);

/// Number of pairwise distinct sequences among the 4n lines.
std::size_t distinct_line_count(const SquareMatrix& m);

/// All 4n lines pairwise distinct.
bool is_strongly_asymmetric(const SquareMatrix& m);

struct LineLocation {
  std::size_t matrix;  // 0-based position in the set
  LineKind kind;
  int index;           // 1-based
};

/// A line equal to an earlier one. `duplicate_of` is the first occurrence in
/// canonical order (matrix, then rows, columns, reverse rows, reverse columns).
struct Violation {
  LineLocation at;
  LineLocation duplicate_of;
};

struct PackingReport {
  int order = 0;
  std::size_t matrix_count = 0;
  std::size_t total_lines = 0;
  std::size_t distinct_lines = 0;
  bool all_latin = false;
  bool all_strongly_asymmetric = false;
  bool is_packing = false;
  std::vector<Violation> violations;
};

/// Throws PreconditionError on an empty set or mixed orders.
PackingReport verify_packing(std::span<const SquareMatrix> set);
inline PackingReport verify_packing(const PackingSet& s) { return verify_packing(s.matrices); }

struct GroupCheck {
  bool is_group = false;
  std::size_t order = 0;  // number of distinct lines
};

/// Whether the distinct lines, read as permutations, are closed under
/// composition. Throws PreconditionError on non-Latin input.
GroupCheck lines_form_group(std::span<const SquareMatrix> set);
inline GroupCheck lines_form_group(const SquareMatrix& m) {
  return lines_form_group(std::span<const SquareMatrix>(&m, 1));
}
inline GroupCheck lines_form_group(const PackingSet& s) { return lines_form_group(s.matrices); }

/// Throws PreconditionError on order mismatch or non-Latin input.
bool are_orthogonal(const SquareMatrix& a, const SquareMatrix& b);
/// Every pair orthogonal.
bool verify_mols(std::span<const SquareMatrix> set);

struct SymmetryReport {
  bool symmetric = false;
  bool centrosymmetric = false;
  bool hankel_symmetric = false;
  std::size_t distinct_lines = 0;
};

SymmetryReport classify_symmetry(const SquareMatrix& m);

/// Visits every Latin square of order n (1 <= n <= cap) once, in lexicographic
/// row-major order, without materializing the family. Returns the count.
std::uint64_t enumerate_latin_squares(int n, const std::function<void(const SquareMatrix&)>& visit,
                                      int cap = kLatinSweepCap);

}  // namespace latpack
