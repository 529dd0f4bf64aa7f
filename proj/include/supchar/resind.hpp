#pragma once

#include <vector>

#include "supchar/nilalg.hpp"
#include "supchar/orbits.hpp"
#include "supchar/poset.hpp"
#include "supchar/supernormal.hpp"

namespace supchar {

struct CharacterTerm {
  Rational coeff;
  std::size_t chi = 0;  // index in the target theory
  Code rep = 0;
  std::uint64_t degree = 0;
};

/// Rational combination of distinct supercharacters of one theory.
struct CharacterCombination {
  std::vector<CharacterTerm> terms;
  ClassFunction evaluate(const SupercharacterTheory& theory) const;
};

/// chi^lambda restricted to U_m for an ideal m of n, via the orbit formula;
/// checked pointwise against direct restriction. Throws NotIdeal.
CharacterCombination restrict_supercharacter(const SupercharacterTheory& n_theory, Code lambda,
                                             const SupercharacterTheory& m_theory, const Inclusion& inc);

/// Superinduction of chi_m^mu from U_m to U_n as a combination of
/// supercharacters of U_n; checked pointwise against the defining average.
CharacterCombination superinduce(const SupercharacterTheory& m_theory, std::size_t mu,
                                 const SupercharacterTheory& n_theory, const Inclusion& inc);

/// (1/|U_m||U_n|) sum_{x,y} f°(x(g-1)y+1) for every g in U_n, with f given
/// on the members of U_m (codes in n-coordinates, sorted).
ClassFunction superinduce_definitional(const SupercharacterTheory& n_theory, const std::vector<Code>& sub,
                                       const ClassFunction& f);

/// The same average computed per superclass: (x, y) -> x(g-1)y covers the
/// superclass of g evenly, so the value is |U_n|/(|U_m||C|) sum over C in m.
ClassFunction superinduce_orbit_average(const SupercharacterTheory& n_theory, const std::vector<Code>& sub,
                                        const ClassFunction& f);

/// Same average with both the acting group K and the subset D given as
/// sorted code lists inside the parent algebra; result indexed like k.
ClassFunction superinduce_within(const AlgebraPtr& parent, const std::vector<Code>& k, const std::vector<Code>& d,
                                 const ClassFunction& f);

/// <SInd chi, psi> = <chi, psi restricted> for every pair of supercharacters.
bool reciprocity_check(const SupercharacterTheory& m_theory, const SupercharacterTheory& n_theory,
                       const Inclusion& inc);

/// Weight on the double coset HsK in the Mackey sum.
enum class MackeyWeight {
  CosetFraction,  // |HsK| / |G|
  Unit,           // 1, as in the classical theorem
};

/// Pointwise check of SInd_H^G(chi) restricted to K against
/// sum_s w_s SInd_{D_s}^K(chi_s), with D_s = s^-1 H s meet K.
bool mackey_check(const AlgebraPtr& g, const AlgebraPtr& h, const AlgebraPtr& k, std::size_t chi,
                  MackeyWeight weight = MackeyWeight::CosetFraction);

/// Double cosets H s K of U_g, each as a sorted code list with the least
/// member first in `reps`.
struct DoubleCosets {
  std::vector<Code> reps;
  std::vector<std::vector<Code>> cosets;
};
DoubleCosets double_cosets(const AlgebraPtr& g, const std::vector<Code>& h, const std::vector<Code>& k);

struct DeltaProfile {
  int delta_l = 0;
  int delta_r = 0;
  int delta_l_prime = 0;
  int delta_r_prime = 0;
  int a = 0;
  int b = 0;
  int a_plus_b() const { return a + b; }
};

/// Orbit data for restricting chi^lambda across a codimension-one subalgebra.
DeltaProfile codim1_profile(const SupercharacterTheory& n_theory, Code lambda, const SupercharacterTheory& m_theory,
                            const Inclusion& inc);

struct AlternatingGroup {
  AlgebraPtr pattern;      // n_P
  AlgebraPtr alternating;  // kernel of sgn
  FVec sgn;                // sgn as a functional on n_P
};
AlternatingGroup alternating_subgroup(const Poset& poset, int p);
/// Every supercharacter of U_P restricts to a single supercharacter of A_P.
bool alternating_restriction_check(const AlternatingGroup& alt);
BigInt alternating_count(int n, const CountingParameter& q);

}  // namespace supchar
