#include "latpack/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "latpack/error.hpp"
#include "latpack/ring.hpp"

namespace latpack {

namespace {

int mod(long long a, int k) {
  const long long r = a % k;
  return static_cast<int>(r < 0 ? r + k : r);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_cap(const char* op, int n, int cap) {
  if (n > cap) throw CapExceeded(op, n, cap);
}

}  // namespace

// ---------------------------------------------------------------------------
// BooleanMatrix

BooleanMatrix::BooleanMatrix(int m, std::vector<std::uint8_t> bits) : m_(m), bits_(std::move(bits)) {
  if (m_ < 1 || bits_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_))
    throw PreconditionError("BooleanMatrix: needs m*m entries");
  for (auto b : bits_)
    if (b > 1) throw PreconditionError("BooleanMatrix: entries must be 0 or 1");
}

BooleanMatrix::BooleanMatrix(const std::vector<std::vector<int>>& rows)
    : m_(static_cast<int>(rows.size())) {
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw PreconditionError("BooleanMatrix: not square");
    for (int v : r) {
      if (v != 0 && v != 1) throw PreconditionError("BooleanMatrix: entries must be 0 or 1");
      bits_.push_back(static_cast<std::uint8_t>(v));
    }
  }
  if (m_ < 1) throw PreconditionError("BooleanMatrix: empty");
}

std::vector<int> BooleanMatrix::row(int i) const {
  std::vector<int> r;
  for (int j = 1; j <= m_; ++j) r.push_back((*this)(i, j));
  return r;
}

std::vector<int> BooleanMatrix::column(int j) const {
  std::vector<int> c;
  for (int i = 1; i <= m_; ++i) c.push_back((*this)(i, j));
  return c;
}

// ---------------------------------------------------------------------------
// Odd orders

PermGroup cyclic_shift_group(int n) { return generate_group({Permutation::cyclic_shift(n)}, n); }

PermGroup reversal_group(int n) { return generate_group({Permutation::reversal(n)}, n); }

PackingSet pack_odd(int n, PairingOptions pairing, int cap) {
  if (n % 2 == 0)
    throw PreconditionError("pack_odd: n = " + std::to_string(n) +
                            " is even; the addition-square construction does not work for even n "
                            "(the n/2-th power of the cyclic shift is conjugate to the reversal)");
  if (n < 5)
    throw PreconditionError("pack_odd: n must be at least 5 (n = " + std::to_string(n) +
                            " has a single double coset, which cannot be paired)");
  require_cap("pack_odd", n, cap);

  auto cosets = double_cosets(cyclic_shift_group(n), reversal_group(n), n, cap);
  if (cosets.size() % 2 != 0) throw std::logic_error("pack_odd: odd number of double cosets");
  if (pairing.mode == Pairing::Seeded) {
    std::mt19937_64 rng(pairing.seed);
    std::shuffle(cosets.begin(), cosets.end(), rng);
  }

  PackingSet out{n, {}};
  out.matrices.reserve(cosets.size() / 2);
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (std::size_t k = 0; k < cosets.size(); k += 2) {
    const Permutation& p = cosets[k].key;
    const Permutation& q = cosets[k + 1].key;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        cells[static_cast<std::size_t>((i - 1) * n + (j - 1))] = (p(i) - 1 + q(j) - 1) % n + 1;
    out.matrices.emplace_back(n, cells);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Even orders

SquareMatrix double_occurrence_base(int m) {
  if (m <= 2) throw PreconditionError("double_occurrence_base: m must exceed 2, got " + std::to_string(m));
  std::vector<int> cells(static_cast<std::size_t>(m * m));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) cells[static_cast<std::size_t>((i - 1) * m + (j - 1))] = (i + j - 1) % m + 1;
  return SquareMatrix(m, std::move(cells));
}

std::vector<SquareMatrix> double_occurrence_set(int m, int cap) {
  const auto base = double_occurrence_base(m);
  std::vector<SquareMatrix> out;
  for (const auto& r : left_coset_reps(line_set(base), m, cap)) out.push_back(apply_entrywise(r, base));
  return out;
}

std::vector<BooleanMatrix> boolean_matrices(int m, PairingOptions pairing) {
  if (m < 3) throw PreconditionError("boolean_matrices: m must be at least 3, got " + std::to_string(m));
  if (m > 30) throw PreconditionError("boolean_matrices: m too large");
  // Vectors with leading 0, as integers whose bit (m-1-i) is component i: the
  // numeric order is lexicographic order.
  const std::uint32_t half = 1u << (m - 1);
  const std::uint32_t quarter = half / 2;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (pairing.mode == Pairing::Canonical) {
    for (std::uint32_t k = 0; k < quarter; ++k) pairs.emplace_back(k, k + quarter);
  } else {
    std::vector<std::uint32_t> vs(half);
    std::iota(vs.begin(), vs.end(), 0u);
    std::mt19937_64 rng(pairing.seed);
    std::shuffle(vs.begin(), vs.end(), rng);
    for (std::uint32_t k = 0; k < half; k += 2)
      pairs.emplace_back(std::min(vs[k], vs[k + 1]), std::max(vs[k], vs[k + 1]));
    std::sort(pairs.begin(), pairs.end());
  }

  auto bit = [m](std::uint32_t v, int i) { return static_cast<std::uint8_t>((v >> (m - i)) & 1u); };
  std::vector<BooleanMatrix> out;
  for (auto [v, w] : pairs) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m * m));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        bits[static_cast<std::size_t>((i - 1) * m + (j - 1))] = bit(v, i) ^ bit(w, j);
    out.emplace_back(m, std::move(bits));
  }
  return out;
}

SquareMatrix composite(const SquareMatrix& l, const BooleanMatrix& a) {
  const int m = l.order();
  if (a.order() != m)
    throw PreconditionError("composite: Latin square of order " + std::to_string(m) +
                            " with Boolean matrix of order " + std::to_string(a.order()));
  const int n = 2 * m;
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  auto at = [&](int r, int c) -> int& { return cells[static_cast<std::size_t>((r - 1) * n + (c - 1))]; };
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int k = l(i, j);
      const int lo = 2 * k - 1, hi = 2 * k;
      const bool flipped = a(i, j) == 1;
      at(2 * i - 1, 2 * j - 1) = flipped ? hi : lo;
      at(2 * i - 1, 2 * j) = flipped ? lo : hi;
      at(2 * i, 2 * j - 1) = flipped ? lo : hi;
      at(2 * i, 2 * j) = flipped ? hi : lo;
    }
  }
  return SquareMatrix(n, std::move(cells));
}

std::pair<SquareMatrix, BooleanMatrix> decompose_composite(const SquareMatrix& mat) {
  const int n = mat.order();
  if (n % 2 != 0)
    throw PreconditionError("not a composite matrix: odd order " + std::to_string(n));
  const int m = n / 2;
  std::vector<int> l(static_cast<std::size_t>(m * m));
  std::vector<std::uint8_t> a(static_cast<std::size_t>(m * m));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int tl = mat(2 * i - 1, 2 * j - 1), tr = mat(2 * i - 1, 2 * j);
      const int bl = mat(2 * i, 2 * j - 1), br = mat(2 * i, 2 * j);
      const int hi = std::max(tl, tr), lo = std::min(tl, tr);
      if (hi % 2 != 0 || lo != hi - 1 || bl != tr || br != tl)
        throw PreconditionError("not a composite matrix: block (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is not of the form B_{k,b}");
      l[static_cast<std::size_t>((i - 1) * m + (j - 1))] = hi / 2;
      a[static_cast<std::size_t>((i - 1) * m + (j - 1))] = tl < tr ? 0 : 1;
    }
  }
  return {SquareMatrix(m, std::move(l)), BooleanMatrix(m, std::move(a))};
}

PackingSet pack_even_subgroup(int n, PairingOptions pairing, int cap) {
  if (n % 2 != 0 || n <= 4)
    throw PreconditionError("pack_even_subgroup: n must be even and greater than 4, got " + std::to_string(n));
  require_cap("pack_even_subgroup", n, cap);
  const int m = n / 2;
  const auto bools = boolean_matrices(m, pairing);
  PackingSet out{n, {}};
  for (const auto& l : double_occurrence_set(m, std::max(cap, m)))
    for (const auto& a : bools) out.matrices.push_back(composite(l, a));
  return out;
}

PackingSet extend_packing(const PackingSet& s, int n, int cap) {
  if (s.matrices.empty()) throw PreconditionError("extend_packing: empty packing set");
  if (s.order != n) throw PreconditionError("extend_packing: set order differs from n");
  const auto g = line_set(s.matrices);
  if (!g.is_closed())
    throw PreconditionError("extend_packing: the lines of the set do not form a group");
  PackingSet out{n, {}};
  for (const auto& r : left_coset_reps(g, n, cap))
    for (const auto& m : s.matrices) out.matrices.push_back(apply_entrywise(r, m));
  return out;
}

PackingSet pack_even(int n, PairingOptions pairing, int cap) {
  if (n % 2 != 0 || n < 6)
    throw PreconditionError("pack_even: n must be even and at least 6, got " + std::to_string(n));
  require_cap("pack_even", n, cap);
  return extend_packing(pack_even_subgroup(n, pairing, cap), n, cap);
}

// ---------------------------------------------------------------------------
// Single square over a ring with a quartet

SquareMatrix pack_single(int n) {
  auto [ring, quartet] = construct_quartet(n);
  const auto e = reflectable_enumeration(ring);
  // Position of each ring element (by canonical index) within z.
  std::vector<int> symbol(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) symbol[static_cast<std::size_t>(ring.index_of(e.z[static_cast<std::size_t>(i)]))] = i + 1;

  const auto& d = quartet.c;
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto x = ring.add(e.z[static_cast<std::size_t>(i)], ring.mul(d, e.z[static_cast<std::size_t>(j)]));
      cells[static_cast<std::size_t>(i * n + j)] = symbol[static_cast<std::size_t>(ring.index_of(x))];
    }
  }
  return SquareMatrix(n, std::move(cells));
}

// ---------------------------------------------------------------------------
// Packed MOLS

namespace {

bool place_couples(int p, std::vector<bool>& used, std::vector<std::pair<int, int>>& couples) {
  const int h = (p - 1) / 2;
  int x = 1;
  while (x <= h && used[static_cast<std::size_t>(x)]) ++x;
  if (x > h) return true;
  auto admissible = [&](int r, int s) {
    for (auto [r2, s2] : couples)
      if (mod(static_cast<long long>(r) * s2 - static_cast<long long>(r2) * s, p) == 0) return false;
    return true;
  };
  used[static_cast<std::size_t>(x)] = true;
  for (int y = x + 1; y <= h; ++y) {
    if (used[static_cast<std::size_t>(y)]) continue;
    used[static_cast<std::size_t>(y)] = true;
    for (auto couple : {std::pair{x, y}, std::pair{y, x}}) {
      if (!admissible(couple.first, couple.second)) continue;
      couples.push_back(couple);
      if (place_couples(p, used, couples)) return true;
      couples.pop_back();
    }
    used[static_cast<std::size_t>(y)] = false;
  }
  used[static_cast<std::size_t>(x)] = false;
  return false;
}

}  // namespace

CoupleList couple_selection(int p) {
  if (!is_prime(p) || p % 4 != 1)
    throw PreconditionError("couple_selection: p = " + std::to_string(p) +
                            " is not a prime congruent to 1 mod 4");
  std::vector<bool> used(static_cast<std::size_t>((p - 1) / 2 + 1), false);
  CoupleList out{p, {}};
  if (!place_couples(p, used, out.couples))
    throw std::runtime_error("no admissible couple system found for p = " + std::to_string(p));
  return out;
}

PackingSet mols_packed(int p, int cap) {
  const auto couples = couple_selection(p);
  require_cap("mols_packed", p, cap);
  PackingSet out{p, {}};
  for (auto [r, s] : couples.couples) {
    std::vector<int> cells(static_cast<std::size_t>(p * p));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) cells[static_cast<std::size_t>(i * p + j)] = (r * i + s * j) % p + 1;
    out.matrices.emplace_back(p, std::move(cells));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Few lines

SquareMatrix min_lines_square(int n) {
  if (n < 2) throw PreconditionError("min_lines_square: n must be at least 2, got " + std::to_string(n));
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  auto at = [&](int i, int j) -> int& { return cells[static_cast<std::size_t>((i - 1) * n + (j - 1))]; };
  if (n % 2 == 1) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) at(i, j) = (i + j - 2) % n + 1;
    return SquareMatrix(n, std::move(cells));
  }
  const int m = n / 2;
  using Rows = std::vector<std::vector<int>>;
  const SquareMatrix a = m == 1   ? SquareMatrix(Rows{{1}})
                         : m == 2 ? SquareMatrix(Rows{{1, 2}, {2, 1}})
                                  : double_occurrence_base(m);
  // [[A, BJ], [JB, JAJ]] with B = A + m.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const bool top = i <= m, left = j <= m;
      const int ai = top ? i : n + 1 - i;
      const int aj = left ? j : n + 1 - j;
      at(i, j) = a(ai, aj) + (top == left ? 0 : m);
    }
  }
  return SquareMatrix(n, std::move(cells));
}

PermGroup subgroup_4n(int n) {
  if (n % 2 != 0 || n < 6)
    throw PreconditionError("subgroup_4n: n must be even and at least 6, got " + std::to_string(n));
  const int m = n / 2;
  std::vector<Permutation> elems;
  if (m == 3) {
    for_each_permutation(4, [&](const Permutation& p) {
      std::vector<int> s(p.seq().begin(), p.seq().end());
      s.push_back(5);
      s.push_back(6);
      elems.emplace_back(std::move(s));
    });
    return PermGroup(n, std::move(elems));
  }
  for (int shift = 0; shift < m; ++shift) {
    for (int k : {1, -1}) {
      for (int swap_a = 0; swap_a < 2; ++swap_a) {
        for (int swap_b = 0; swap_b < 2; ++swap_b) {
          std::vector<int> s(static_cast<std::size_t>(n));
          for (int j = 1; j <= m; ++j) s[static_cast<std::size_t>(j - 1)] = mod(shift + k * j - 1, m) + 1;
          for (int j = m + 1; j <= n; ++j) s[static_cast<std::size_t>(j - 1)] = j;
          if (swap_a) std::swap(s[static_cast<std::size_t>(m)], s[static_cast<std::size_t>(m + 1)]);
          if (swap_b) std::swap(s[static_cast<std::size_t>(m + 2)], s[static_cast<std::size_t>(m + 3)]);
          elems.emplace_back(std::move(s));
        }
      }
    }
  }
  return PermGroup(n, std::move(elems));
}

}  // namespace latpack
