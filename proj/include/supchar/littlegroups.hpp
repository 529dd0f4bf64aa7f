#pragma once

#include <utility>
#include <vector>

#include "supchar/nilalg.hpp"
#include "supchar/orbits.hpp"
#include "supchar/poset.hpp"
#include "supchar/setpart.hpp"

namespace supchar {

/// n = h + a with a a square-zero ideal, so U_n = U_h x| U_a.
struct SemidirectDecomposition {
  AlgebraPtr n;
  AlgebraPtr h;
  AlgebraPtr a;

  /// Split X in n (n-coordinates) into its h- and a-coordinates.
  std::pair<FVec, FVec> split(const FVec& x) const;
  /// The functional on n vanishing on h whose restriction to a is tau.
  FVec extend(const FVec& tau) const;
};

/// Checks n = h (+) a, a^2 = 0 and a an ideal, in that order.
/// Throws NotDirectSum, SquareNonzero or NotIdeal.
SemidirectDecomposition validate_decomposition(const AlgebraPtr& n, const AlgebraPtr& h, const AlgebraPtr& a);

struct StabilizerData {
  FVec alpha;  // functional on n, zero on h
  AlgebraPtr l;
  AlgebraPtr r;
  AlgebraPtr s;
  /// Pairs (g, h) of codes in h with g alpha h^-1 = alpha.
  std::vector<std::pair<Code, Code>> t;
  std::uint64_t a_orbit_size = 0;  // |U_a alpha U_a|
};

/// l, r, s by linear algebra and T by enumeration; checks that L and R are
/// the one-sided stabilizers on the way. Throws InvalidArgument unless alpha
/// vanishes on h.
StabilizerData stabilizers(const SemidirectDecomposition& d, const FVec& alpha);

/// Two-sided U_h-orbits on a*, ordered by their least member.
std::vector<Orbit> tau_orbits(const SemidirectDecomposition& d);
/// Least member of each orbit, as codes of functionals on a.
std::vector<Code> orbit_representatives(const SemidirectDecomposition& d);

/// T acting on s*: returns, for every eta in s* (by code), the least
/// member of its orbit.
std::vector<Code> t_orbit_canonical(const SemidirectDecomposition& d, const StabilizerData& st);

struct LittleGroupsLabel {
  Code tau = 0;  // functional on a
  Code psi = 0;  // functional on s_tau, least in its T-orbit
  auto operator<=>(const LittleGroupsLabel&) const = default;
};

struct LittleGroupsEntry {
  LittleGroupsLabel label;
  std::size_t chi = 0;  // index in the supercharacter theory of n
};

struct LittleGroupsClassification {
  std::vector<Orbit> orbits;
  std::vector<StabilizerData> stabilizers;  // one per orbit
  std::vector<LittleGroupsEntry> entries;   // sorted by label
  std::size_t label_count = 0;
};

/// Labels every supercharacter of U_n by (tau, psi), and checks that the
/// labels are in bijection with the supercharacters, the orbit size
/// identity, and (when asked) the superinduction formula for the inverse map.
LittleGroupsClassification classify(const SemidirectDecomposition& d, bool verify_inverse = true);

/// Chains 1..m and m+1..m+n, joined by 1 < m+1 and m < m+n.
struct ExamplePosets {
  Poset h;
  Poset p;
  Poset a;  // p minus h
};
ExamplePosets example_posets(int m, int n);
SemidirectDecomposition build_example(int m, int n, int p);
BigInt example_count(int m, int n, const CountingParameter& q);

/// Canonical L x R orbit representative in n_J, by repeatedly clearing the
/// row and column of the support entry at the latest position in the
/// order f(i,j) = i + (n-1-j+i)(n-j+i)/2. Throws InvalidArgument if X is
/// outside n_J or the hypotheses on J, L, R fail.
LabeledSetPartition canonicalize_LR(const UTMatrix& x, const std::vector<Pair>& j, const AlgebraPtr& l,
                                    const AlgebraPtr& r);

/// Brute-force L x R orbits on n_J compared with canonicalize_LR: constant
/// on orbits, distinct across orbits, idempotent. Returns the orbit count.
std::size_t lr_orbit_check(const std::vector<Pair>& j, const AlgebraPtr& l, const AlgebraPtr& r);

}  // namespace supchar
