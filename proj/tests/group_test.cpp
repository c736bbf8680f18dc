#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "latpack/error.hpp"
#include "latpack/group.hpp"
#include "oracles.hpp"

using namespace latpack;

namespace {

std::vector<int> seq_of(const Permutation& p) { return {p.seq().begin(), p.seq().end()}; }

oracle::Rows rows_of(const SquareMatrix& m) { return m.rows(); }

}  // namespace

TEST_CASE("compose follows p(q(i))") {
  CHECK(compose({2, 3, 1}, {2, 3, 1}) == Permutation{3, 1, 2});
  CHECK(compose({2, 1, 3}, {1, 3, 2}) == Permutation{2, 3, 1});
  const Permutation p{4, 1, 3, 2};
  CHECK(compose(p, Permutation::identity(4)) == p);
  CHECK(compose(Permutation::identity(4), p) == p);
  CHECK_THROWS_AS(compose({2, 1}, {1, 2, 3}), PreconditionError);
}

TEST_CASE("inverse") {
  CHECK(inverse({2, 3, 1}) == Permutation{3, 1, 2});
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(inverse({4, 3, 2, 1}) == Permutation{4, 3, 2, 1});
}

TEST_CASE("permutation validation and named permutations") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(Permutation({0, 1}), PreconditionError);
  CHECK(Permutation::cyclic_shift(4) == Permutation{2, 3, 4, 1});
  CHECK(Permutation::reversal(3) == Permutation{3, 2, 1});
}

TEST_CASE("lex_rank matches position in sorted enumeration") {
  const auto perms = oracle::all_perms(5);
  for (std::size_t i = 0; i < perms.size(); ++i) CHECK(Permutation(perms[i]).lex_rank() == i);
}

TEST_CASE("property: compose agrees with pointwise oracle, inverse cancels") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 9;
    const auto a = oracle::random_perm(n, rng), b = oracle::random_perm(n, rng);
    CHECK(seq_of(compose(Permutation(a), Permutation(b))) == oracle::apply(a, b));
    CHECK(compose(Permutation(a), inverse(Permutation(a))).is_identity());
  }
}

TEST_CASE("lines: order and multiplicities") {
  const SquareMatrix two({{1, 2}, {2, 1}});
  const auto ls = lines(two);
  REQUIRE(ls.size() == 8);
  std::set<std::vector<int>> distinct;
  for (const auto& l : ls) distinct.insert(l.seq);
  CHECK(distinct == std::set<std::vector<int>>{{1, 2}, {2, 1}});

  const SquareMatrix three({{2, 3, 1}, {3, 1, 2}, {1, 2, 3}});
  const auto l3 = lines(three);
  REQUIRE(l3.size() == 12);
  std::map<std::vector<int>, int> counts;
  for (const auto& l : l3) ++counts[l.seq];
  CHECK(counts.size() == 6);
  for (const auto& [s, c] : counts) CHECK(c == 2);

  // Canonical order; reverse row i is row i reversed.
  CHECK(l3[0].kind == LineKind::Row);
  CHECK(l3[3].kind == LineKind::Column);
  CHECK(l3[6].kind == LineKind::ReverseRow);
  CHECK(l3[9].kind == LineKind::ReverseColumn);
  CHECK(l3[7].seq == std::vector<int>{2, 1, 3});
  CHECK(l3[7].index == 2);
  CHECK(l3[10].seq == std::vector<int>{2, 1, 3});
}

TEST_CASE("property: lines agree with the raw oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = oracle::random_latin(2 + trial % 7, rng);
    const auto ls = lines(SquareMatrix(m));
    const auto ref = oracle::raw_lines(m);
    REQUIRE(ls.size() == ref.size());
    for (std::size_t k = 0; k < ls.size(); ++k) CHECK(ls[k].seq == ref[k]);
  }
}

TEST_CASE("generate_group") {
  CHECK(generate_group({}, 3).elements() == std::vector<Permutation>{Permutation::identity(3)});
  const auto c3 = generate_group({{2, 3, 1}}, 3);
  CHECK(c3.elements() == std::vector<Permutation>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  CHECK(generate_group({{2, 1, 3}, {1, 3, 2}}, 3).order() == 6);
  CHECK_THROWS_AS(generate_group({{2, 1}}, 3), PreconditionError);
}

TEST_CASE("property: generated groups are closed (quadratic oracle)") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 4;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + trial % 2; ++k) gens.emplace_back(oracle::random_perm(n, rng));
    const auto g = generate_group(gens, n);
    std::set<oracle::Seq> elems;
    for (const auto& p : g.elements()) elems.insert(seq_of(p));
    CHECK(oracle::closed(elems));
    CHECK(g.is_closed());
    for (const auto& p : g.elements()) CHECK(g.contains(inverse(p)));
  }
}

TEST_CASE("is_closed rejects non-groups") {
  CHECK_FALSE(PermGroup(3, {{2, 3, 1}}).is_closed());
  CHECK_FALSE(PermGroup(3, {{1, 2, 3}, {2, 3, 1}}).is_closed());
  CHECK_FALSE(PermGroup(3, {}).is_closed());
  CHECK(PermGroup(3, {{1, 2, 3}, {2, 1, 3}}).is_closed());
}

TEST_CASE("left_coset_reps") {
  std::vector<Permutation> all;
  for (const auto& s : oracle::all_perms(4)) all.emplace_back(s);
  CHECK(left_coset_reps(PermGroup(4, all), 4) == std::vector<Permutation>{Permutation::identity(4)});

  // Pair-preserving subgroup of S_6 (order 48): 720 / 48 = 15 representatives.
  std::vector<Permutation> pair_preserving;
  for (const auto& s : oracle::all_perms(6))
    if (oracle::preserves_pairs(s)) pair_preserving.emplace_back(s);
  const PermGroup h(6, pair_preserving);
  REQUIRE(h.order() == 48);
  const auto reps = left_coset_reps(h, 6);
  CHECK(reps.size() == 15);
  // Partition check: the translates r H cover S_6 exactly once.
  std::set<oracle::Seq> covered;
  for (const auto& r : reps)
    for (const auto& x : h.elements()) CHECK(covered.insert(seq_of(compose(r, x))).second);
  CHECK(covered.size() == 720);
  // Each representative is the smallest member of its coset.
  for (const auto& r : reps)
    for (const auto& x : h.elements()) CHECK(!(compose(r, x) < r));

  // The line group of the 3x3 cyclic square is S_3.
  const SquareMatrix cyc({{2, 3, 1}, {3, 1, 2}, {1, 2, 3}});
  CHECK(left_coset_reps(line_set(cyc), 3).size() == 1);

  CHECK_THROWS_AS(left_coset_reps(PermGroup(3, {{2, 3, 1}}), 3), PreconditionError);
  CHECK_THROWS_AS(left_coset_reps(generate_group({}, 9), 9), CapExceeded);
  CHECK(left_coset_reps(generate_group({Permutation::cyclic_shift(9)}, 9), 9, 9).size() == 40320);
}

TEST_CASE("double_cosets") {
  const auto c5 = generate_group({Permutation::cyclic_shift(5)}, 5);
  const auto r5 = generate_group({Permutation::reversal(5)}, 5);
  const auto dc = double_cosets(c5, r5, 5);
  CHECK(dc.size() == 12);
  std::set<oracle::Seq> all;
  for (const auto& d : dc) {
    CHECK(d.members.size() == 10);
    CHECK(d.key == d.members.front());
    for (const auto& m : d.members) CHECK(all.insert(seq_of(m)).second);
  }
  CHECK(all.size() == 120);

  const auto one = double_cosets(generate_group({Permutation::cyclic_shift(3)}, 3),
                                 generate_group({Permutation::reversal(3)}, 3), 3);
  REQUIRE(one.size() == 1);
  CHECK(one.front().members.size() == 6);

  const auto trivial = double_cosets(generate_group({}, 4), generate_group({}, 4), 4);
  CHECK(trivial.size() == 24);
  for (const auto& d : trivial) CHECK(d.members.size() == 1);

  CHECK_THROWS_AS(double_cosets(PermGroup(4, {{2, 3, 4, 1}}), generate_group({}, 4), 4), PreconditionError);
}

TEST_CASE("double cosets of shift and reversal have size 2n for odd n, by brute force") {
  for (int n : {3, 5, 7}) {
    const auto c = generate_group({Permutation::cyclic_shift(n)}, n);
    const auto r = generate_group({Permutation::reversal(n)}, n);
    const auto dc = double_cosets(c, r, n);
    std::size_t total = 0;
    for (const auto& d : dc) {
      // Recompute C g R from scratch.
      std::set<oracle::Seq> ref;
      for (const auto& x : c.elements())
        for (const auto& y : r.elements()) ref.insert(oracle::apply(oracle::apply(seq_of(x), seq_of(d.key)), seq_of(y)));
      CHECK(ref.size() == static_cast<std::size_t>(2 * n));
      CHECK(ref.size() == d.members.size());
      total += d.members.size();
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("apply_entrywise") {
  const SquareMatrix cyc({{2, 3, 1}, {3, 1, 2}, {1, 2, 3}});
  CHECK(apply_entrywise(Permutation::identity(3), cyc) == cyc);
  CHECK(apply_entrywise({2, 1, 3}, cyc) == SquareMatrix({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}}));
  CHECK_THROWS_AS(apply_entrywise({2, 3, 1}, SquareMatrix({{1, 2}, {2, 1}})), PreconditionError);
}

TEST_CASE("property: relabeling preserves Latin property and line multiplicities") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const auto m = oracle::random_latin(n, rng);
    const auto r = oracle::random_perm(n, rng);
    const auto relabeled = apply_entrywise(Permutation(r), SquareMatrix(m));
    CHECK(oracle::latin(rows_of(relabeled)));
    std::map<oracle::Seq, int> before, after;
    for (const auto& l : oracle::raw_lines(m)) ++before[l];
    for (const auto& l : oracle::raw_lines(rows_of(relabeled))) ++after[l];
    std::multiset<int> mb, ma;
    for (const auto& [s, c] : before) mb.insert(c);
    for (const auto& [s, c] : after) ma.insert(c);
    CHECK(mb == ma);
    // Each line of rM is r composed with the line of M.
    const auto lm = oracle::raw_lines(m), lr = oracle::raw_lines(rows_of(relabeled));
    for (std::size_t k = 0; k < lm.size(); ++k) CHECK(lr[k] == oracle::apply(r, lm[k]));
  }
}

TEST_CASE("SquareMatrix validation") {
  CHECK_THROWS_AS(SquareMatrix({{1, 2}, {2}}), PreconditionError);
  CHECK_THROWS_AS(SquareMatrix({{1, 3}, {2, 1}}), PreconditionError);
  CHECK_THROWS_AS(SquareMatrix(2, {1, 2, 2}), PreconditionError);
}
