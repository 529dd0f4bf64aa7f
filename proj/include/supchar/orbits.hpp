#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "supchar/arith.hpp"
#include "supchar/linalg.hpp"
#include "supchar/nilalg.hpp"

namespace supchar {

enum class Side { Left, Right };
/// Whether an action is on the algebra itself or on its dual.
enum class Space { Algebra, Dual };

/// The algebra group U_K acting by multiplication on a target algebra T
/// (T must be stable under left and right multiplication by K), and on T*
/// by g.lambda(X) = lambda(g^{-1} X), lambda.g(X) = lambda(X g^{-1}).
/// Group elements are passed as codes of g - 1 in K.
class Action {
 public:
  Action(AlgebraPtr acting, AlgebraPtr target);
  static Action self(const AlgebraPtr& n) { return Action(n, n); }

  const AlgebraPtr& acting() const { return acting_; }
  const AlgebraPtr& target() const { return target_; }
  std::uint64_t group_order() const { return acting_->order(); }
  std::uint64_t target_size() const { return target_->order(); }

  /// Matrix on T-coordinates of the given action of g; for the dual the
  /// matrix acts on functional value vectors.
  FMat matrix(Code g, Space space, Side side) const;
  FVec act(Code g, const FVec& v, Space space, Side side) const;
  Code act(Code g, Code v, Space space, Side side) const;

 private:
  FMat raw(const FVec& g, Side side) const;
  AlgebraPtr acting_;
  AlgebraPtr target_;
  std::vector<FMat> left_;   // X -> b_i X
  std::vector<FMat> right_;  // X -> X b_i
  // per group element, filled when small: [space][side]
  std::vector<FMat> cache_[2][2];
};

/// Throws NotIdeal-style InvalidArgument with a witness if T is not stable.
Action make_action(const AlgebraPtr& acting, const AlgebraPtr& target);

std::vector<Code> one_sided_orbit(const Action& act, Space space, Side side, Code v);

struct Orbit {
  std::vector<Code> members;  // sorted
  Code rep = 0;               // least member
  std::vector<Code> left;     // U v
  std::vector<Code> right;    // v U
  std::size_t intersection = 0;  // |U v ∩ v U|
  std::size_t size() const { return members.size(); }
};

/// Left orbit first, then right orbits of its points.
Orbit two_sided_orbit(const Action& act, Space space, Code v);
/// Partition of all of T (or T*) into two-sided orbits, ordered by representative.
std::vector<Orbit> orbit_partition(const Action& act, Space space);

/// Function U -> Q(zeta_p), stored as cyclotomic integers over a common
/// positive denominator. Index = code of g - 1.
class ClassFunction {
 public:
  ClassFunction(int p, std::size_t size);
  ClassFunction(std::vector<Cyclotomic> values, std::int64_t denominator = 1);

  int p() const { return p_; }
  std::size_t size() const { return num_.size(); }
  std::int64_t denominator() const { return den_; }
  const Cyclotomic& numerator(std::size_t i) const { return num_[i]; }
  /// Value as (numerator, denominator); exact division when possible.
  Cyclotomic integral_value(std::size_t i) const;
  bool value_is_integral(std::size_t i) const;
  std::vector<Rational> rational_coeffs(std::size_t i) const;

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction scaled(const Rational& r) const;
  ClassFunction conj() const;
  bool operator==(const ClassFunction& o) const;
  bool is_zero() const;

  /// Values on a subset, in the order of `codes`.
  ClassFunction restricted(const std::vector<Code>& codes) const;

 private:
  void reduce();
  int p_;
  std::vector<Cyclotomic> num_;
  std::int64_t den_;
};

/// (1/|U|) sum_g a(g) conj(b(g)); asserts the result is rational.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

struct Superclass {
  Code rep = 0;
  std::vector<Code> members;
};

struct Supercharacter {
  Code rep = 0;  // functional code
  std::vector<Code> left_orbit;
  std::vector<Code> right_orbit;
  std::vector<Code> members;  // two-sided orbit
  std::size_t intersection = 0;
  std::uint64_t degree = 0;
};

/// Superclasses, supercharacters and exact values for one algebra group.
class SupercharacterTheory {
 public:
  explicit SupercharacterTheory(AlgebraPtr n);

  const AlgebraPtr& algebra() const { return n_; }
  const Action& action() const { return act_; }
  int p() const { return n_->p(); }
  std::uint64_t order() const { return n_->order(); }

  const std::vector<Superclass>& superclasses() const { return classes_; }
  const std::vector<Supercharacter>& supercharacters() const { return chars_; }
  std::size_t class_of(Code x) const { return class_index_[x]; }
  std::size_t character_of(Code lambda) const { return char_index_[lambda]; }

  /// chi^lambda(1 + x) for functional code lambda (any orbit member).
  Cyclotomic value_at(Code lambda, Code x) const;
  Cyclotomic value(std::size_t chi, Code x) const { return value_at(chars_[chi].rep, x); }
  ClassFunction character(std::size_t chi) const;
  /// Orbit-formula inner product of two supercharacters.
  std::uint64_t orbit_inner_product(std::size_t a, std::size_t b) const;
  /// values[chi][class]
  std::vector<std::vector<Cyclotomic>> table() const;
  std::vector<Code> kernel(std::size_t chi) const;

 private:
  AlgebraPtr n_;
  Action act_;
  std::vector<Superclass> classes_;
  std::vector<Supercharacter> chars_;
  std::vector<std::uint32_t> class_index_;
  std::vector<std::uint32_t> char_index_;
};

/// Evaluate chi^lambda(1+x) given the two-sided orbit and left-orbit size.
Cyclotomic orbit_character_value(const NilpotentAlgebra& n, const std::vector<Code>& orbit, std::uint64_t left_size,
                                 const FVec& x);

/// rho(g) = sum_lambda |U lambda U|/|U lambda| chi^lambda(g), checked pointwise.
bool regular_decomposition_check(const SupercharacterTheory& theory);

/// All elements g - 1 of U, as codes 0 .. |U|-1 (bound-checked).
std::uint64_t checked_group_order(const NilpotentAlgebra& n);

}  // namespace supchar
