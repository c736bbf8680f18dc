#include "latpack/verify.hpp"

#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "latpack/error.hpp"
#include "latpack/group.hpp"

namespace latpack {

bool is_latin(const SquareMatrix& m) {
  const int n = m.order();
  for (int i = 1; i <= n; ++i)
    if (!is_permutation_sequence(m.row(i)) || !is_permutation_sequence(m.column(i))) return false;
  return true;
}

std::size_t distinct_line_count(const SquareMatrix& m) {
  std::unordered_set<std::vector<int>, SequenceHash> seen;
  for (auto& l : lines(m)) seen.insert(std::move(l.seq));
  return seen.size();
}

bool is_strongly_asymmetric(const SquareMatrix& m) {
  return distinct_line_count(m) == 4 * static_cast<std::size_t>(m.order());
}

PackingReport verify_packing(std::span<const SquareMatrix> set) {
  if (set.empty()) throw PreconditionError("verify_packing: empty set");
  PackingReport report;
  report.order = set.front().order();
  report.matrix_count = set.size();
  report.all_latin = true;
  report.all_strongly_asymmetric = true;

  std::unordered_map<std::vector<int>, LineLocation, SequenceHash> first_seen;
  for (std::size_t k = 0; k < set.size(); ++k) {
    const auto& m = set[k];
    if (m.order() != report.order)
      throw PreconditionError("verify_packing: matrix " + std::to_string(k) + " has order " +
                              std::to_string(m.order()) + ", expected " +
                              std::to_string(report.order));
    report.all_latin = report.all_latin && is_latin(m);
    std::unordered_set<std::vector<int>, SequenceHash> own;
    for (auto& l : lines(m)) {
      ++report.total_lines;
      own.insert(l.seq);
      const LineLocation here{k, l.kind, l.index};
      auto [it, inserted] = first_seen.try_emplace(std::move(l.seq), here);
      if (!inserted) report.violations.push_back({here, it->second});
    }
    if (own.size() != 4 * static_cast<std::size_t>(m.order())) report.all_strongly_asymmetric = false;
  }
  report.distinct_lines = first_seen.size();
  report.is_packing = report.all_latin && report.distinct_lines == report.total_lines;
  return report;
}

GroupCheck lines_form_group(std::span<const SquareMatrix> set) {
  for (const auto& m : set)
    if (!is_latin(m)) throw PreconditionError("lines_form_group: input is not a Latin square");
  const auto g = line_set(set);
  return {g.is_closed(), g.order()};
}

bool are_orthogonal(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order()) throw PreconditionError("are_orthogonal: order mismatch");
  if (!is_latin(a) || !is_latin(b)) throw PreconditionError("are_orthogonal: input is not a Latin square");
  std::set<std::pair<int, int>> pairs;
  const int n = a.order();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!pairs.emplace(a(i, j), b(i, j)).second) return false;
  return true;
}

bool verify_mols(std::span<const SquareMatrix> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!are_orthogonal(set[i], set[j])) return false;
  return true;
}

SymmetryReport classify_symmetry(const SquareMatrix& m) {
  const int n = m.order();
  SymmetryReport r{true, true, true, distinct_line_count(m)};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int v = m(i, j);
      if (v != m(j, i)) r.symmetric = false;
      if (v != m(n + 1 - i, n + 1 - j)) r.centrosymmetric = false;
      if (v != m(n + 1 - j, n + 1 - i)) r.hankel_symmetric = false;
    }
  }
  return r;
}

std::uint64_t enumerate_latin_squares(int n, const std::function<void(const SquareMatrix&)>& visit,
                                      int cap) {
  if (n < 1) throw PreconditionError("enumerate_latin_squares: order must be positive");
  if (n > cap) throw CapExceeded("enumerate_latin_squares", n, cap);

  const auto un = static_cast<std::size_t>(n);
  std::vector<int> cells(un * un, 0);
  // Bit v set when symbol v is already used in that row / column.
  std::vector<std::uint32_t> row_used(un, 0), col_used(un, 0);
  std::uint64_t count = 0;

  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == un * un) {
      ++count;
      visit(SquareMatrix(n, cells));
      return;
    }
    const std::size_t i = cell / un, j = cell % un;
    for (int v = 1; v <= n; ++v) {
      const std::uint32_t bit = 1u << v;
      if ((row_used[i] | col_used[j]) & bit) continue;
      row_used[i] |= bit;
      col_used[j] |= bit;
      cells[cell] = v;
      fill(cell + 1);
      row_used[i] &= ~bit;
      col_used[j] &= ~bit;
    }
  };
  fill(0);
  return count;
}

}  // namespace latpack
