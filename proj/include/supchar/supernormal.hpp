#pragma once

#include <array>
#include <vector>

#include "supchar/nilalg.hpp"
#include "supchar/orbits.hpp"
#include "supchar/poset.hpp"
#include "supchar/setpart.hpp"

namespace supchar {

/// Subgroup of U_n stored extensionally as codes of g - 1 in parent coordinates.
struct Subgroup {
  AlgebraPtr parent;
  std::vector<Code> members;  // sorted
  /// Set when the subgroup is 1 + (subalgebra).
  AlgebraPtr algebra;

  std::size_t size() const { return members.size(); }
  bool contains(Code c) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

/// Checks identity, products and inverses; throws InvalidArgument otherwise.
Subgroup make_subgroup(const AlgebraPtr& parent, std::vector<Code> members);
/// 1 + m for a subalgebra m of the parent.
Subgroup algebra_subgroup(const AlgebraPtr& parent, const AlgebraPtr& m);
/// Smallest subalgebra of n_N(p) containing the given matrices.
AlgebraPtr generated_subalgebra(int n, int p, const std::vector<UTMatrix>& mats);

/// H - 1 closed under X -> x X y for x, y in U_n.
bool is_supernormal(const Subgroup& h);

struct EquivalencePanel {
  /// superclass union; normal and left-stable; ideal; trivial U_m action on
  /// m-perp; m-perp stable under U_n
  std::array<bool, 5> conditions{};
  bool normal = false;
  bool agree() const;
};
EquivalencePanel equivalence_panel(const AlgebraPtr& m, const AlgebraPtr& n);

/// Indices of supercharacters whose kernels intersect to exactly H.
/// Throws NotRepresentable when H is not such an intersection.
std::vector<std::size_t> kernel_intersection_representation(const Subgroup& h, const SupercharacterTheory& theory);

/// Kernel of chi^lambda on U_n(p) read off from supp(lambda), without
/// evaluating the character.
std::vector<Code> classifying_kernel(const LabeledSetPartition& lambda, const NilpotentAlgebra& full);

/// Whether the subspace contains no standard basis vector.
bool is_avoiding(const Subspace& u);
std::vector<Subspace> enumerate_subspaces(int k, int p, bool avoiding);
/// Number of avoiding subspaces of F_q^k, by inclusion-exclusion.
BigInt tilde_count(int k, const CountingParameter& q);

struct SupernormalDescriptor {
  Antichain antichain;
  Subspace subspace;
};

/// G_n(S, U) inside U_n(p).
Subgroup build_G(const Antichain& s, const Subspace& u, const AlgebraPtr& full);

struct SupernormalEntry {
  SupernormalDescriptor descriptor;
  Subgroup group;
};
std::vector<SupernormalEntry> enumerate_supernormal(int n, int p);
/// The closed-form count of supernormal subgroups of U_n(q).
BigInt count_supernormal(int n, const CountingParameter& q);

/// Every two-sided ideal of n, by exhaustive subspace search.
std::vector<Subspace> ideal_oracle(const NilpotentAlgebra& n);

Subgroup product_subgroup(const Subgroup& a, const Subgroup& b);

/// Index into n_theory of the lift of quotient supercharacter chi.
std::size_t lift_supercharacter(const Quotient& q, const SupercharacterTheory& quotient_theory, std::size_t chi,
                                const SupercharacterTheory& n_theory);
/// Lifts are injective and hit exactly the supercharacters whose kernel contains m.
bool lift_bijection_check(const AlgebraPtr& n, const AlgebraPtr& m);

}  // namespace supchar
