#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "latpack/caps.hpp"
#include "latpack/matrix.hpp"
#include "latpack/permutation.hpp"

namespace latpack {

/// A finite set of permutations of {1..n}, kept sorted and duplicate-free.
///
/// Construction does not check closure; operations that need a subgroup call
/// is_closed() and reject the input otherwise.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Permutation> elements);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;

  /// Contains the identity and is closed under composition (hence under inverse).
  /// Runs in O(order * log(order)) compositions by growing the subgroup from a
  /// greedy generating set and stopping at the first element outside the set.
  bool is_closed() const;

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

private:
  int degree_;
  std::vector<Permutation> elements_;
};

/// Smallest subgroup of S_n containing `generators`.
PermGroup generate_group(const std::vector<Permutation>& generators, int n);

/// The distinct lines of `m` read as permutations. Throws if a line is not one.
PermGroup line_set(const SquareMatrix& m);
PermGroup line_set(std::span<const SquareMatrix> ms);

/// Visits S_n in lexicographic order. Throws CapExceeded when n > cap.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          int cap = kEnumerationCap);

/// One representative per left coset rH of H in S_n, each the lexicographically
/// smallest member of its coset, listed in increasing order.
std::vector<Permutation> left_coset_reps(const PermGroup& h, int n, int cap = kEnumerationCap);

struct DoubleCoset {
  Permutation key;                  // lexicographically smallest member
  std::vector<Permutation> members; // sorted
};

/// Partition of S_n into double cosets C g R, sorted by key. When gcd(|C|,|R|) = 1
/// every coset is checked to have exactly |C|·|R| members.
std::vector<DoubleCoset> double_cosets(const PermGroup& c, const PermGroup& r, int n,
                                       int cap = kEnumerationCap);

}  // namespace latpack
