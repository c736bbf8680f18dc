#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace latpack {

/// A bijection of {1..n} in sequence representation: seq[i-1] = f(i).
class Permutation {
public:
  Permutation() = default;

  /// Validates that `seq` contains each of 1..seq.size() exactly once.
  explicit Permutation(std::vector<int> seq);
  Permutation(std::initializer_list<int> seq) : Permutation(std::vector<int>(seq)) {}

  static Permutation identity(int n);
  /// (n, n-1, ..., 1)
  static Permutation reversal(int n);
  /// (2, 3, ..., n, 1)
  static Permutation cyclic_shift(int n);

  int degree() const noexcept { return static_cast<int>(seq_.size()); }
  /// f(i) for i in 1..n.
  int operator()(int i) const { return seq_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> seq() const noexcept { return seq_; }
  bool is_identity() const noexcept;

  /// Lexicographic rank among all permutations of the same degree (0-based).
  std::uint64_t lex_rank() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<int> seq, Unchecked) : seq_(std::move(seq)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<int> seq_;
};

/// (p ∘ q)(i) = p(q(i)). Throws PreconditionError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// True iff `seq` is a permutation of 1..seq.size().
bool is_permutation_sequence(std::span<const int> seq);

/// n! as a 64-bit integer; n must be at most 20.
std::uint64_t factorial(int n);

struct SequenceHash {
  std::size_t operator()(std::span<const int> s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : s) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
  std::size_t operator()(const std::vector<int>& s) const noexcept {
    return (*this)(std::span<const int>(s));
  }
  std::size_t operator()(const Permutation& p) const noexcept { return (*this)(p.seq()); }
};

}  // namespace latpack
