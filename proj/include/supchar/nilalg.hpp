#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "supchar/arith.hpp"
#include "supchar/linalg.hpp"
#include "supchar/poset.hpp"

namespace supchar {

/// Strictly upper triangular n x n matrix over F_p, 1-based indices.
class UTMatrix {
 public:
  explicit UTMatrix(int n = 0) : n_(n), e_(static_cast<std::size_t>(n * n), 0) {}
  static UTMatrix unit(int n, int i, int j, int c = 1);

  int size() const { return n_; }
  int at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, int v);
  /// Nonzero entries as (i, j, value), row-major.
  std::vector<std::tuple<int, int, int>> entries() const;
  bool is_zero() const;

  UTMatrix plus(const UTMatrix& o, int p) const;
  UTMatrix times(const UTMatrix& o, int p) const;
  UTMatrix scaled(int c, int p) const;

  bool operator==(const UTMatrix& o) const = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  int n_;
  std::vector<int> e_;
};

/// Positions (i, j), i < j, in lexicographic order; this fixes the
/// coordinate order used for echelon forms.
std::vector<Pair> positions(int n);
FVec flatten(const UTMatrix& m);
UTMatrix unflatten(int n, const FVec& v);

/// Subalgebra of n_N(p) with an echelon-canonical basis.
class NilpotentAlgebra {
 public:
  /// n_P with basis e_ij, (i,j) in P, lexicographic.
  static std::shared_ptr<const NilpotentAlgebra> pattern(const Poset& poset, int p);
  /// n_n(p).
  static std::shared_ptr<const NilpotentAlgebra> full(int n, int p);
  /// Echelonize and verify closure; throws NotClosed.
  static std::shared_ptr<const NilpotentAlgebra> from_spanning(int n, int p, const std::vector<UTMatrix>& mats);

  int matrix_size() const { return n_; }
  int p() const { return field_.p(); }
  const PrimeField& field() const { return field_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<UTMatrix>& basis() const { return basis_; }
  /// Span in flattened position coordinates.
  const Subspace& span() const { return span_; }
  /// Set when built from a poset.
  const std::optional<Poset>& poset() const { return poset_; }

  std::uint64_t order() const;
  Code encode(const FVec& x) const { return supchar::encode(x, p()); }
  FVec decode(Code c) const { return supchar::decode(c, dim(), p()); }

  UTMatrix matrix(const FVec& x) const;
  std::optional<FVec> coords(const UTMatrix& m) const;
  bool contains(const UTMatrix& m) const { return coords(m).has_value(); }

  /// Product of algebra elements via structure constants.
  FVec mul(const FVec& x, const FVec& y) const;
  /// (1+x)(1+y) - 1
  FVec group_mul(const FVec& x, const FVec& y) const;
  /// (1+x)^{-1} - 1
  FVec group_inv(const FVec& x) const;
  FVec zero() const { return FVec(static_cast<std::size_t>(dim()), 0); }

  /// Coordinates of basis_i * basis_j.
  const FVec& structure(int i, int j) const {
    return structure_[static_cast<std::size_t>(i * dim() + j)];
  }
  bool is_commutative_zero() const;

 private:
  NilpotentAlgebra(int n, int p) : n_(n), field_(p), span_(p, n * (n - 1) / 2) {}
  int n_;
  PrimeField field_;
  std::vector<UTMatrix> basis_;
  Subspace span_;
  std::vector<FVec> structure_;
  std::optional<Poset> poset_;
};

using AlgebraPtr = std::shared_ptr<const NilpotentAlgebra>;

/// Inclusion of a subalgebra m into n (same matrix size and prime).
class Inclusion {
 public:
  Inclusion(AlgebraPtr sub, AlgebraPtr ambient);

  const AlgebraPtr& sub() const { return sub_; }
  const AlgebraPtr& ambient() const { return ambient_; }
  /// dim(n) x dim(m) matrix sending m-coordinates to n-coordinates.
  const FMat& embedding() const { return embed_; }
  FVec embed(const FVec& x) const;
  /// m-coordinates of an element of n, if it lies in m.
  std::optional<FVec> pull_back(const FVec& x) const;
  /// The image of m inside n-coordinates.
  const Subspace& image() const { return image_; }
  /// lambda restricted to m, in m's basis.
  FVec restrict_functional(const FVec& lambda) const;

 private:
  AlgebraPtr sub_;
  AlgebraPtr ambient_;
  FMat embed_;
  Subspace image_;
};

bool is_subalgebra(const NilpotentAlgebra& m, const NilpotentAlgebra& n);
/// Two-sided ideal test; throws InvalidArgument if m is not inside n.
bool is_ideal(const NilpotentAlgebra& m, const NilpotentAlgebra& n);

/// m^perp inside n*, as a subspace of functional coordinates.
Subspace perp(const Inclusion& inc);

struct Quotient {
  AlgebraPtr algebra;
  /// dim(n/m) x dim(n) projection matrix.
  FMat projection;
  FVec project(const FVec& x, int p) const { return projection.apply(x, p); }
};

/// n/m realized through its regular representation on F_p 1 + n/m.
Quotient quotient(const AlgebraPtr& n, const AlgebraPtr& m);

/// Header "n=<int> p=<prime>", then blocks of "i j c" lines.
AlgebraPtr read_algebra(std::istream& in);
void write_algebra(std::ostream& out, const NilpotentAlgebra& a);

}  // namespace supchar
