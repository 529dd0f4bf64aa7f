#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "supchar/linalg.hpp"

using namespace supchar;

namespace {

Subspace random_subspace(int p, int dim, int gens, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, p - 1);
  std::vector<FVec> vs;
  for (int g = 0; g < gens; ++g) {
    FVec v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = d(rng);
    vs.push_back(v);
  }
  return Subspace::span(p, dim, vs);
}

std::set<Code> element_set(const Subspace& s) {
  auto e = s.elements();
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("codes are lexicographic") {
  CHECK(encode({0, 0, 1}, 2) == 1);
  CHECK(encode({1, 0, 0}, 2) == 4);
  CHECK(encode({2, 1}, 3) == 7);
  CHECK(decode(7, 2, 3) == FVec{2, 1});
  for (Code c = 0; c < 81; ++c) CHECK(encode(decode(c, 4, 3), 3) == c);
}

TEST_CASE("echelon form is canonical") {
  auto a = Subspace::span(2, 3, {{1, 1, 0}, {0, 1, 1}});
  auto b = Subspace::span(2, 3, {{1, 0, 1}, {1, 1, 0}});
  CHECK(a == b);
  CHECK(a.dimension() == 2);
  CHECK(a.pivots() == std::vector<int>{0, 1});
  CHECK(a.contains(FVec{1, 0, 1}));
  CHECK_FALSE(a.contains(FVec{1, 0, 0}));
}

TEST_CASE("sum, intersection and perp against element sets") {
  std::mt19937 rng(11);
  for (int p : {2, 3}) {
    for (int trial = 0; trial < 30; ++trial) {
      int dim = 4;
      auto u = random_subspace(p, dim, trial % 3 + 1, rng);
      auto w = random_subspace(p, dim, (trial + 1) % 3 + 1, rng);

      auto eu = element_set(u), ew = element_set(w);
      std::set<Code> meet;
      std::set_intersection(eu.begin(), eu.end(), ew.begin(), ew.end(), std::inserter(meet, meet.begin()));
      CHECK(element_set(u.intersect(w)) == meet);

      std::set<Code> sums;
      for (Code a : eu)
        for (Code b : ew) sums.insert(encode(vec_add(decode(a, dim, p), decode(b, dim, p), p), p));
      CHECK(element_set(u.sum(w)) == sums);

      std::set<Code> annihilator;
      for (Code c = 0; c < ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(dim)); ++c) {
        FVec v = decode(c, dim, p);
        bool ok = std::all_of(eu.begin(), eu.end(), [&](Code a) { return dot(decode(a, dim, p), v, p) == 0; });
        if (ok) annihilator.insert(c);
      }
      CHECK(element_set(u.perp()) == annihilator);
    }
  }
}

TEST_CASE("coordinates round trip") {
  auto s = Subspace::span(3, 4, {{1, 2, 0, 1}, {0, 1, 1, 2}});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      FVec v = s.combine({a, b});
      auto c = s.coordinates(v);
      REQUIRE(c.has_value());
      CHECK(*c == FVec{a, b});
    }
  CHECK_FALSE(s.coordinates(FVec{1, 0, 0, 0}).has_value());
}

TEST_CASE("kernel and solve") {
  FMat m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 2) = 1;
  auto k = kernel(m, 2);
  CHECK(k == Subspace::span(2, 3, {{1, 1, 0}}));
  auto x = solve(m, {1, 1}, 2);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x, 2) == FVec{1, 1});

  FMat z(1, 2);
  CHECK_FALSE(solve(z, {1}, 3).has_value());
}

TEST_CASE("subspace counts are Gaussian binomial sums") {
  // Galois numbers: total number of subspaces of F_q^k.
  CHECK(all_subspaces(0, 2).size() == 1);
  CHECK(all_subspaces(1, 2).size() == 2);
  CHECK(all_subspaces(2, 2).size() == 5);
  CHECK(all_subspaces(3, 2).size() == 16);
  CHECK(all_subspaces(4, 2).size() == 67);
  CHECK(all_subspaces(2, 3).size() == 6);
  CHECK(all_subspaces(3, 3).size() == 28);
  auto subs = all_subspaces(3, 2);
  for (std::size_t i = 1; i < subs.size(); ++i)
    CHECK(subs[i - 1].dimension() <= subs[i].dimension());
}

TEST_CASE("matrix helpers") {
  auto i3 = FMat::identity(3);
  FMat m(3, 3);
  m.at(0, 1) = 2;
  m.at(1, 2) = 1;
  CHECK(mat_mul(i3, m, 3) == m);
  CHECK(mat_mul(m, m, 3).at(0, 2) == 2);
  CHECK(m.transpose().at(1, 0) == 2);
  CHECK(mat_add(m, mat_scale(m, 2, 3), 3) == FMat(3, 3));
}
