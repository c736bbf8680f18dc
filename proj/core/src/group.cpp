#include "latpack/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "latpack/error.hpp"

namespace latpack {

namespace {

using PermSet = std::unordered_set<Permutation, SequenceHash>;

void require_subgroup(const PermGroup& g, int n, const char* op) {
  if (g.degree() != n)
    throw PreconditionError(std::string(op) + ": group of degree " + std::to_string(g.degree()) +
                            " used with n = " + std::to_string(n));
  if (!g.is_closed())
    throw PreconditionError(std::string(op) + ": input is not a subgroup of S_" +
                            std::to_string(n) + " (not closed under composition)");
}

void require_cap(int n, int cap, const char* op) {
  if (n < 1) throw PreconditionError(std::string(op) + ": order must be positive");
  if (n > cap) throw CapExceeded(op, n, cap);
  if (n > 20) throw CapExceeded(op, n, 20);
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  for (const auto& p : elements_)
    if (p.degree() != degree_)
      throw PreconditionError("PermGroup: element " + p.to_string() + " has wrong degree");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_closed() const {
  if (elements_.empty()) return false;
  if (!contains(Permutation::identity(degree_))) return false;

  std::vector<Permutation> gens;
  PermSet generated{Permutation::identity(degree_)};
  for (const auto& h : elements_) {
    if (generated.count(h)) continue;
    gens.push_back(h);
    // Regrow the closure of the enlarged generating set.
    std::deque<Permutation> queue(generated.begin(), generated.end());
    while (!queue.empty()) {
      const Permutation x = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        Permutation y = compose(x, g);
        if (generated.count(y)) continue;
        if (!contains(y)) return false;
        generated.insert(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return generated.size() == elements_.size();
}

PermGroup generate_group(const std::vector<Permutation>& generators, int n) {
  for (const auto& g : generators)
    if (g.degree() != n)
      throw PreconditionError("generate_group: generator " + g.to_string() +
                              " is not a permutation of 1.." + std::to_string(n));
  PermSet seen{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    const Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = compose(x, g);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return PermGroup(n, {seen.begin(), seen.end()});
}

PermGroup line_set(std::span<const SquareMatrix> ms) {
  if (ms.empty()) throw PreconditionError("line_set: no matrices");
  const int n = ms.front().order();
  PermSet seen;
  for (const auto& m : ms) {
    if (m.order() != n) throw PreconditionError("line_set: matrices of different orders");
    for (auto& l : lines(m)) {
      if (!is_permutation_sequence(l.seq))
        throw PreconditionError("line_set: " + std::string(to_string(l.kind)) + " " +
                                std::to_string(l.index) + " is not a permutation");
      seen.insert(Permutation(std::move(l.seq)));
    }
  }
  return PermGroup(n, {seen.begin(), seen.end()});
}

PermGroup line_set(const SquareMatrix& m) { return line_set(std::span<const SquareMatrix>(&m, 1)); }

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit, int cap) {
  require_cap(n, cap, "for_each_permutation");
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  do {
    visit(Permutation(s));
  } while (std::next_permutation(s.begin(), s.end()));
}

std::vector<Permutation> left_coset_reps(const PermGroup& h, int n, int cap) {
  require_cap(n, cap, "left_coset_reps");
  require_subgroup(h, n, "left_coset_reps");
  std::vector<bool> covered(factorial(n), false);
  std::vector<Permutation> reps;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        if (covered[p.lex_rank()]) return;
        // Visiting in lexicographic order makes p the smallest member of pH.
        reps.push_back(p);
        for (const auto& x : h.elements()) covered[compose(p, x).lex_rank()] = true;
      },
      cap);
  return reps;
}

std::vector<DoubleCoset> double_cosets(const PermGroup& c, const PermGroup& r, int n, int cap) {
  require_cap(n, cap, "double_cosets");
  require_subgroup(c, n, "double_cosets");
  require_subgroup(r, n, "double_cosets");
  const bool coprime = std::gcd(c.order(), r.order()) == 1;
  const std::size_t product = c.order() * r.order();

  std::vector<bool> covered(factorial(n), false);
  std::vector<DoubleCoset> out;
  for_each_permutation(
      n,
      [&](const Permutation& g) {
        if (covered[g.lex_rank()]) return;
        std::vector<Permutation> members;
        for (const auto& x : c.elements()) {
          const Permutation xg = compose(x, g);
          for (const auto& y : r.elements()) {
            Permutation m = compose(xg, y);
            const auto rank = m.lex_rank();
            if (covered[rank]) continue;
            covered[rank] = true;
            members.push_back(std::move(m));
          }
        }
        std::sort(members.begin(), members.end());
        if (coprime && members.size() != product)
          throw std::logic_error("double coset of " + g.to_string() + " has " +
                                 std::to_string(members.size()) + " members, expected " +
                                 std::to_string(product));
        out.push_back({g, std::move(members)});
      },
      cap);
  return out;
}

}  // namespace latpack
