#include <doctest.h>

#include "supchar/error.hpp"
#include "supchar/linalg.hpp"
#include "supchar/orbits.hpp"
#include "supchar/setpart.hpp"

using namespace supchar;

namespace {

// Stirling numbers of the second kind by their recurrence.
BigInt stirling2(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  return BigInt(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

// Labeled set partitions: a partition with k blocks has n - k arcs.
BigInt bell_oracle(int n, long long q) {
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) sum += stirling2(n, k) * power(BigInt(q - 1), static_cast<unsigned>(n - k));
  return sum;
}

bool has_singleton(const LabeledSetPartition& s) {
  for (const auto& b : s.blocks())
    if (b.size() == 1) return true;
  return false;
}

}  // namespace

TEST_CASE("enumeration of S_n(q)") {
  auto s2 = enumerate_snq(2, 2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].arcs().empty());
  CHECK(s2[1].label() == "1-2:1");
  CHECK(enumerate_snq(3, 2).size() == 5);
  CHECK(enumerate_snq(3, 3).size() == 11);
  for (int n = 0; n <= 6; ++n)
    for (long long q : {2, 3, 4}) {
      if (n == 6 && q == 4) continue;
      CHECK(BigInt(enumerate_snq(n, q).size()) == bell_q(n, CountingParameter(q)));
    }
}

TEST_CASE("q-Bell numbers") {
  CHECK(bell_q(0, CountingParameter(5)) == 1);
  CHECK(bell_q(4, CountingParameter(2)) == 15);
  for (long long q : {2, 3, 7, 10}) CHECK(bell_q(2, CountingParameter(q)) == q);
  for (int n = 0; n <= 9; ++n)
    for (long long q : {2, 3, 5, 8}) CHECK(bell_q(n, CountingParameter(q)) == bell_oracle(n, q));
}

TEST_CASE("feasible counts are partitions without singleton blocks") {
  CHECK(feasible_count(0, CountingParameter(3)) == 1);
  CHECK(feasible_count(4, CountingParameter(2)) == 4);
  CHECK(feasible_count(1, CountingParameter(9)) == 0);
  for (int n = 0; n <= 6; ++n)
    for (long long q : {2, 3}) {
      std::size_t count = 0;
      for (const auto& s : enumerate_snq(n, q)) count += !has_singleton(s);
      CHECK(BigInt(count) == feasible_count(n, CountingParameter(q)));
    }
}

TEST_CASE("row counts") {
  CHECK(n_row_count(2, 2, CountingParameter(2)) == 2);
  CHECK(n_row_count(2, 1, CountingParameter(2)) == 1);
  CHECK_THROWS_AS(n_row_count(2, 3, CountingParameter(2)), InvalidArgument);
  for (int n = 1; n <= 5; ++n)
    for (long long q : {2, 3}) {
      auto all = enumerate_snq(n, q);
      BigInt identity = bell_q(n, CountingParameter(q));
      for (int i = 1; i <= n; ++i) {
        std::size_t zero_row = 0, zero_col = 0;
        for (const auto& s : all) {
          bool row_used = false, col_used = false;
          for (const auto& a : s.arcs()) {
            row_used |= a.i == i;
            col_used |= a.j == n + 1 - i;
          }
          zero_row += !row_used;
          zero_col += !col_used;
        }
        BigInt nri = n_row_count(n, i, CountingParameter(q));
        CHECK(nri == zero_row);
        CHECK(nri == zero_col);
        identity += (q - 1) * nri;
      }
      CHECK(identity == bell_q(n + 1, CountingParameter(q)));
    }
}

TEST_CASE("Gaussian binomials") {
  CHECK(q_binomial(2, 1, CountingParameter(2)) == 3);
  CHECK(q_binomial(4, 2, CountingParameter(3)) == 130);
  CHECK(q_binomial(3, 4, CountingParameter(2)) == 0);
  for (int k = 0; k <= 4; ++k) {
    CHECK(q_binomial(k, 0, CountingParameter(7)) == 1);
    for (int p : {2, 3}) {
      if (k == 4 && p == 3) continue;
      std::vector<std::size_t> by_dim(static_cast<std::size_t>(k + 1), 0);
      for (const auto& s : all_subspaces(k, p)) by_dim[static_cast<std::size_t>(s.dimension())] += 1;
      for (int i = 0; i <= k; ++i) CHECK(q_binomial(k, i, CountingParameter(p)) == by_dim[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("labels, blocks and matrices") {
  auto s = parse_label(5, "1-3:1,3-5:2,2-4:1", 3);
  CHECK(s.label() == "1-3:1,2-4:1,3-5:2");
  CHECK(s.blocks() == std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}});
  CHECK(LabeledSetPartition::from_blocks(5, {{1, 3, 5}, {2, 4}}, {1, 1, 2}, 3) == s);
  CHECK(from_matrix(s.matrix(), 3) == s);
  CHECK_THROWS_AS(parse_label(3, "1-2:1,1-3:1", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_label(3, "1-2:2", 2), InvalidArgument);
  UTMatrix bad(3);
  bad.set(1, 3, 1);
  bad.set(2, 3, 1);
  CHECK_THROWS_AS(from_matrix(bad, 2), InvalidArgument);
}

TEST_CASE("closed character formula, worked values") {
  PrimeField f2(2);
  auto lam = parse_label(4, "1-4:1", 2);
  CHECK(closed_char_value(lam, parse_label(4, "2-3:1", 2), f2) == Cyclotomic::integer(2, 2));
  CHECK(closed_char_value(parse_label(3, "1-3:1", 2), parse_label(3, "1-2:1", 2), f2) == Cyclotomic::integer(2, 0));
  // degree at the identity: prod q^(j-i-1)
  PrimeField f3(3);
  for (const auto& l : enumerate_snq(5, 3)) {
    std::int64_t deg = 1;
    for (const auto& a : l.arcs()) deg *= static_cast<std::int64_t>(ipow(3, static_cast<unsigned>(a.j - a.i - 1)));
    CHECK(closed_char_value(l, LabeledSetPartition(5, {}, 3), f3) == Cyclotomic::integer(3, deg));
  }
}

TEST_CASE("closed character formula against orbit sums") {
  for (auto [n, p] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
    auto alg = NilpotentAlgebra::full(n, p);
    SupercharacterTheory t(alg);
    auto all = enumerate_snq(n, p);
    for (const auto& lam : all)
      for (const auto& mu : all)
        CHECK(closed_char_value(lam, mu, alg->field()) ==
              t.value_at(alg->encode(lam.coords()), alg->encode(mu.coords())));
  }
}
