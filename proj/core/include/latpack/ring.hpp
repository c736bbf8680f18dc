#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latpack {

/// A tuple of residues, one per component of the owning Ring.
struct RingElement {
  std::vector<int> residues;

  std::string to_string() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// Z_{k1} x ... x Z_{kt} with componentwise arithmetic.
///
/// Elements have a canonical order: lexicographic on residue tuples, which is
/// mixed-radix order with the first component most significant.
class Ring {
public:
  /// Throws PreconditionError when `moduli` is empty or has a modulus < 1.
  explicit Ring(std::vector<int> moduli);

  const std::vector<int>& moduli() const noexcept { return moduli_; }
  int size() const noexcept { return size_; }
  std::string to_string() const;

  RingElement zero() const;
  RingElement one() const;
  /// Reduces each component; the tuple length must match the modulus count.
  RingElement element(std::vector<int> residues) const;
  /// Element at position `index` of the canonical order.
  RingElement element_at(int index) const;
  int index_of(const RingElement& x) const;
  std::vector<RingElement> elements() const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  bool is_unit(const RingElement& a) const;

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  void check(const RingElement& x) const;

  std::vector<int> moduli_;
  int size_ = 1;
};

Ring make_ring(std::vector<int> moduli);

/// All units, in canonical order.
std::vector<RingElement> units(const Ring& ring);

/// A four-element unit subgroup {1, -1, c, -c}.
struct Quartet {
  RingElement one;
  RingElement minus_one;
  RingElement c;
  RingElement minus_c;

  std::vector<RingElement> members() const { return {one, minus_one, c, minus_c}; }
};

/// Checks every Quartet invariant against `ring`.
bool is_quartet(const Ring& ring, const Quartet& q);

/// The quartet whose c is smallest in canonical order among all units
/// c ∉ {1, -1} with c² ∈ {1, -1}; nullopt when the ring has none.
std::optional<Quartet> find_quartet(const Ring& ring);

/// True iff n is p or 2p for a prime p ≡ 3 (mod 4).
bool is_quartet_free_order(int n);

/// Builds an n-element ring with a quartet following the four-case argument
/// (odd composite, prime ≡ 1 mod 4, multiple of 4, twice an odd admissible
/// order). Throws PreconditionError for n < 5 and for quartet-free orders.
std::pair<Ring, Quartet> construct_quartet(int n);

/// Enumeration z_1..z_n of the ring with u - z_i = z_{n+1-i}, u = -1.
struct ReflectableEnumeration {
  RingElement u;
  std::vector<RingElement> z;
};

ReflectableEnumeration reflectable_enumeration(const Ring& ring);

bool is_reflectable(const Ring& ring, const ReflectableEnumeration& e);

}  // namespace latpack
