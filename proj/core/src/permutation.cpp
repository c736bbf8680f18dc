#include "latpack/permutation.hpp"

#include <numeric>
#include <sstream>

#include "latpack/error.hpp"

namespace latpack {

bool is_permutation_sequence(std::span<const int> seq) {
  const auto n = seq.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : seq) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<int> seq) : seq_(std::move(seq)) {
  if (!is_permutation_sequence(seq_)) {
    throw PreconditionError("not a permutation of 1.." + std::to_string(seq_.size()) + ": " +
                            to_string());
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  return Permutation(std::move(s), Unchecked{});
}

Permutation Permutation::reversal(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(s), Unchecked{});
}

Permutation Permutation::cyclic_shift(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  return Permutation(std::move(s), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < seq_.size(); ++i)
    if (seq_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::uint64_t Permutation::lex_rank() const {
  const auto n = seq_.size();
  std::uint64_t rank = 0;
  // Lehmer code: count smaller unused values to the right.
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (seq_[j] < seq_[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq_.size(); ++i) os << (i ? "," : "") << seq_[i];
  os << ')';
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw PreconditionError("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                            std::to_string(q.degree()));
  }
  std::vector<int> out(q.seq_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = p.seq_[static_cast<std::size_t>(q.seq_[i] - 1)];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.seq_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[static_cast<std::size_t>(p.seq_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw PreconditionError("factorial: argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace latpack
