#include "latpack/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "latpack/error.hpp"

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

int smallest_prime_factor(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

}  // namespace

std::string RingElement::to_string() const {
  std::ostringstream os;
  if (residues.size() == 1) {
    os << residues.front();
    return os.str();
  }
  os << '(';
  for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
  os << ')';
  return os.str();
}

Ring::Ring(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw PreconditionError("ring needs at least one modulus");
  for (int k : moduli_) {
    if (k < 1) throw PreconditionError("ring modulus must be >= 1, got " + std::to_string(k));
    size_ *= k;
  }
}

std::string Ring::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    s += (i ? "xZ_" : "Z_") + std::to_string(moduli_[i]);
  return s;
}

void Ring::check(const RingElement& x) const {
  if (x.residues.size() != moduli_.size())
    throw PreconditionError("element " + x.to_string() + " does not belong to " + to_string());
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (x.residues[i] < 0 || x.residues[i] >= moduli_[i])
      throw PreconditionError("element " + x.to_string() + " is not reduced in " + to_string());
}

RingElement Ring::zero() const { return RingElement{std::vector<int>(moduli_.size(), 0)}; }

RingElement Ring::one() const {
  RingElement e{std::vector<int>(moduli_.size(), 1)};
  for (std::size_t i = 0; i < moduli_.size(); ++i) e.residues[i] %= moduli_[i];
  return e;
}

RingElement Ring::element(std::vector<int> residues) const {
  if (residues.size() != moduli_.size())
    throw PreconditionError("element needs " + std::to_string(moduli_.size()) + " residues");
  for (std::size_t i = 0; i < residues.size(); ++i) residues[i] = mod(residues[i], moduli_[i]);
  return RingElement{std::move(residues)};
}

RingElement Ring::element_at(int index) const {
  if (index < 0 || index >= size_) throw PreconditionError("element index out of range");
  RingElement e{std::vector<int>(moduli_.size())};
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    e.residues[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return e;
}

int Ring::index_of(const RingElement& x) const {
  check(x);
  int index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) index = index * moduli_[i] + x.residues[i];
  return index;
}

std::vector<RingElement> Ring::elements() const {
  std::vector<RingElement> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 0; i < size_; ++i) out.push_back(element_at(i));
  return out;
}

RingElement Ring::add(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    r.residues[i] = mod(static_cast<long long>(a.residues[i]) + b.residues[i], moduli_[i]);
  return r;
}

RingElement Ring::sub(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    r.residues[i] = mod(static_cast<long long>(a.residues[i]) - b.residues[i], moduli_[i]);
  return r;
}

RingElement Ring::mul(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    r.residues[i] = mod(static_cast<long long>(a.residues[i]) * b.residues[i], moduli_[i]);
  return r;
}

RingElement Ring::neg(const RingElement& a) const { return sub(zero(), a); }

bool Ring::is_unit(const RingElement& a) const {
  check(a);
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (std::gcd(a.residues[i], moduli_[i]) != 1) return false;
  return true;
}

Ring make_ring(std::vector<int> moduli) { return Ring(std::move(moduli)); }

std::vector<RingElement> units(const Ring& ring) {
  std::vector<RingElement> out;
  for (auto& x : ring.elements())
    if (ring.is_unit(x)) out.push_back(std::move(x));
  return out;
}

bool is_quartet(const Ring& ring, const Quartet& q) {
  const auto members = q.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!ring.is_unit(members[i])) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j]) return false;
  }
  if (q.one != ring.one() || q.minus_one != ring.neg(ring.one())) return false;
  if (q.minus_c != ring.neg(q.c)) return false;
  const auto c2 = ring.mul(q.c, q.c);
  if (c2 != q.one && c2 != q.minus_one) return false;
  // Closure under multiplication.
  for (const auto& a : members)
    for (const auto& b : members)
      if (std::find(members.begin(), members.end(), ring.mul(a, b)) == members.end()) return false;
  return true;
}

std::optional<Quartet> find_quartet(const Ring& ring) {
  const auto one = ring.one();
  const auto minus_one = ring.neg(one);
  if (one == minus_one) return std::nullopt;
  for (const auto& c : units(ring)) {
    if (c == one || c == minus_one) continue;
    const auto c2 = ring.mul(c, c);
    if (c2 != one && c2 != minus_one) continue;
    Quartet q{one, minus_one, c, ring.neg(c)};
    if (q.minus_c == c) continue;
    return q;
  }
  return std::nullopt;
}

bool is_quartet_free_order(int n) {
  if (is_prime(n) && n % 4 == 3) return true;
  return n % 2 == 0 && is_prime(n / 2) && (n / 2) % 4 == 3;
}

std::pair<Ring, Quartet> construct_quartet(int n) {
  if (n < 5) throw PreconditionError("construct_quartet: order must be at least 5, got " + std::to_string(n));
  if (is_quartet_free_order(n))
    throw PreconditionError("no quartet exists for this order: " + std::to_string(n) +
                            " is p or 2p with p a prime congruent to 3 mod 4");

  if (n % 2 == 1 && !is_prime(n)) {
    // Odd composite: Z_m x Z_q with {(±1, ±1)}.
    const int m = smallest_prime_factor(n);
    Ring ring({m, n / m});
    Quartet q{ring.one(), ring.element({-1, -1}), ring.element({1, -1}), ring.element({-1, 1})};
    return {ring, q};
  }
  if (n % 2 == 1) {
    // Prime ≡ 1 mod 4: Z_n with a square root of -1.
    Ring ring({n});
    for (int r = 2; r <= n - 2; ++r) {
      if ((static_cast<long long>(r) * r) % n == n - 1) {
        return {ring, Quartet{ring.one(), ring.element({-1}), ring.element({r}), ring.element({-r})}};
      }
    }
    throw std::logic_error("no square root of -1 modulo prime " + std::to_string(n));
  }
  if (n % 4 == 0) {
    Ring ring({n});
    return {ring, Quartet{ring.one(), ring.element({-1}), ring.element({(n - 2) / 2}),
                          ring.element({(n + 2) / 2})}};
  }
  // n = 2m with m odd; m is admissible because n is not twice a bad prime.
  auto [inner, iq] = construct_quartet(n / 2);
  std::vector<int> moduli{2};
  moduli.insert(moduli.end(), inner.moduli().begin(), inner.moduli().end());
  Ring ring(std::move(moduli));
  auto lift = [](const RingElement& x) {
    RingElement e{{1}};
    e.residues.insert(e.residues.end(), x.residues.begin(), x.residues.end());
    return e;
  };
  return {ring, Quartet{lift(iq.one), lift(iq.minus_one), lift(iq.c), lift(iq.minus_c)}};
}

ReflectableEnumeration reflectable_enumeration(const Ring& ring) {
  const auto u = ring.neg(ring.one());
  const int n = ring.size();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<RingElement> front;
  std::optional<RingElement> fixed;
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    auto x = ring.element_at(i);
    auto reflected = ring.sub(u, x);
    used[static_cast<std::size_t>(i)] = true;
    if (reflected == x) {
      fixed = std::move(x);
      continue;
    }
    used[static_cast<std::size_t>(ring.index_of(reflected))] = true;
    front.push_back(std::move(x));
  }
  std::vector<RingElement> z = front;
  if (fixed) z.push_back(*fixed);
  for (auto it = front.rbegin(); it != front.rend(); ++it) z.push_back(ring.sub(u, *it));
  return {u, std::move(z)};
}

bool is_reflectable(const Ring& ring, const ReflectableEnumeration& e) {
  const auto n = static_cast<std::size_t>(ring.size());
  if (e.z.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto& x : e.z) {
    const auto i = static_cast<std::size_t>(ring.index_of(x));
    if (seen[i]) return false;
    seen[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (ring.sub(e.u, e.z[i]) != e.z[n - 1 - i]) return false;
  return true;
}

}  // namespace latpack
