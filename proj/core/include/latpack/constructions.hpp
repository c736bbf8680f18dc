#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "latpack/caps.hpp"
#include "latpack/group.hpp"
#include "latpack/matrix.hpp"

namespace latpack {

/// A family of Latin squares of a common order meant to pack a permutation group.
struct PackingSet {
  int order = 0;
  std::vector<SquareMatrix> matrices;

  /// 4n times the number of matrices.
  std::size_t claimed_group_order() const noexcept {
    return 4 * static_cast<std::size_t>(order) * matrices.size();
  }
};

/// How free choices in a construction are resolved. Canonical is the default and
/// is fully deterministic; Seeded draws an alternative (still reproducible) choice.
enum class Pairing { Canonical, Seeded };

struct PairingOptions {
  Pairing mode = Pairing::Canonical;
  std::uint64_t seed = 0;
};

class BooleanMatrix {
public:
  BooleanMatrix(int m, std::vector<std::uint8_t> bits);
  explicit BooleanMatrix(const std::vector<std::vector<int>>& rows);

  int order() const noexcept { return m_; }
  int operator()(int i, int j) const {
    return bits_[static_cast<std::size_t>((i - 1) * m_ + (j - 1))];
  }
  std::vector<int> row(int i) const;
  std::vector<int> column(int j) const;

  friend bool operator==(const BooleanMatrix&, const BooleanMatrix&) = default;

private:
  int m_;
  std::vector<std::uint8_t> bits_;
};

/// The cyclic-shift group C = <(2,..,n,1)> and reversal group R = {id, (n,..,1)}.
PermGroup cyclic_shift_group(int n);
PermGroup reversal_group(int n);

/// Packs S_n for odd n >= 5 into (n-1)!/4 addition squares M(i,j) = p(i) + q(j),
/// one per matched pair of C-R double cosets.
PackingSet pack_odd(int n, PairingOptions pairing = {}, int cap = kPackOddCap);

/// M(i,j) = ((i + j - 1) mod m) + 1: a symmetric double occurrence Latin square.
SquareMatrix double_occurrence_base(int m);

/// The base relabeled by every left-coset representative of its line group;
/// (m-1)!/2 matrices covering S_m with every line occurring exactly twice.
std::vector<SquareMatrix> double_occurrence_set(int m, int cap = kEnumerationCap);

/// 2^{m-2} matrices A(i,j) = v(i) + w(j) mod 2 from a pairing of the
/// length-m 0/1 vectors with leading 0.
std::vector<BooleanMatrix> boolean_matrices(int m, PairingOptions pairing = {});

/// L*A: entry k at (i,j) becomes the block B_{k,A(i,j)} where
/// B_{k,0} = [[2k-1, 2k], [2k, 2k-1]] and B_{k,1} = [[2k, 2k-1], [2k-1, 2k]].
SquareMatrix composite(const SquareMatrix& l, const BooleanMatrix& a);

/// Inverse of composite(). Throws PreconditionError("not a composite matrix ...")
/// when an aligned 2x2 block is not of the form B_{k,b}.
std::pair<SquareMatrix, BooleanMatrix> decompose_composite(const SquareMatrix& m);

/// Composite squares packing the (n/2)!·2^{n/2} permutations that preserve the
/// partition {{1,2},{3,4},...}.
PackingSet pack_even_subgroup(int n, PairingOptions pairing = {}, int cap = kPackEvenCap);

/// Relabels `s` by every left-coset representative of its line group in S_n.
/// Throws when the lines of `s` do not form a group.
PackingSet extend_packing(const PackingSet& s, int n, int cap = kEnumerationCap);

/// Packs S_n for even n >= 6.
PackingSet pack_even(int n, PairingOptions pairing = {}, int cap = kPackEvenCap);

/// M(i,j) = z_i + c·z_j over a ring with quartet {±1, ±c}, z a reflectable
/// enumeration, symbols being positions in z (1-based). Strongly asymmetric
/// with its 4n lines forming a group.
SquareMatrix pack_single(int n);

struct CoupleList {
  int p = 0;
  std::vector<std::pair<int, int>> couples;
};

/// (p-1)/4 couples covering {1..(p-1)/2} once, with pairwise non-zero
/// determinants mod p. First admissible choice in backtracking order.
CoupleList couple_selection(int p);

/// One square M(i,j) = r(i-1) + s(j-1) mod p (+1 for symbols) per couple.
PackingSet mols_packed(int p, int cap = kMolsCap);

/// Latin square with the fewest possible distinct lines: 2n for odd n, n for even n.
SquareMatrix min_lines_square(int n);

/// A subgroup of S_n of order 4n, n even >= 6.
PermGroup subgroup_4n(int n);

}  // namespace latpack
