#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "supchar/arith.hpp"

namespace supchar {

/// Vector over F_p, entries in [0, p).
using FVec = std::vector<int>;
/// Dense code for a vector: base-p digits, first coordinate most significant.
/// Numeric order on codes is lexicographic order on vectors.
using Code = std::uint32_t;

std::uint64_t ipow(std::uint64_t base, unsigned exp);

Code encode(const FVec& v, int p);
FVec decode(Code c, int dim, int p);

FVec vec_add(const FVec& a, const FVec& b, int p);
FVec vec_sub(const FVec& a, const FVec& b, int p);
FVec vec_scale(const FVec& a, int c, int p);
int dot(const FVec& a, const FVec& b, int p);
bool is_zero(const FVec& v);

/// Row-major matrix over F_p.
struct FMat {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  FMat() = default;
  FMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
  static FMat identity(int n);
  int& at(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  int at(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
  FMat transpose() const;
  FVec apply(const FVec& v, int p) const;
  bool operator==(const FMat& o) const = default;
};

FMat mat_mul(const FMat& x, const FMat& y, int p);
FMat mat_add(const FMat& x, const FMat& y, int p);
FMat mat_scale(const FMat& x, int c, int p);

/// Subspace of F_p^dim held in reduced row echelon form.
class Subspace {
 public:
  Subspace(int p, int dim);
  static Subspace span(int p, int dim, const std::vector<FVec>& vectors);
  static Subspace whole(int p, int dim);

  int p() const { return p_; }
  int ambient_dim() const { return dim_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<FVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Insert a vector; returns false if it was already in the span.
  bool add(const FVec& v);
  FVec reduce(const FVec& v) const;
  bool contains(const FVec& v) const;
  /// Coordinates w.r.t. rows(), if v lies in the span.
  std::optional<FVec> coordinates(const FVec& v) const;
  /// Vector with the given coordinates w.r.t. rows().
  FVec combine(const FVec& coords) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Annihilator under the standard pairing.
  Subspace perp() const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return p_ == o.p_ && dim_ == o.dim_ && rows_ == o.rows_; }

  /// Codes of all members, sorted.
  std::vector<Code> elements() const;
  std::uint64_t size() const { return ipow(static_cast<std::uint64_t>(p_), static_cast<unsigned>(rows_.size())); }

 private:
  void normalize();
  int p_;
  int dim_;
  std::vector<FVec> rows_;
  std::vector<int> pivots_;
};

/// Null space of the linear map v -> M v.
Subspace kernel(const FMat& m, int p);

/// Some x with A x = b, if the system is consistent.
std::optional<FVec> solve(const FMat& a, const FVec& b, int p);

/// Every subspace of F_p^k in echelon form, ordered by dimension then rows.
std::vector<Subspace> all_subspaces(int k, int p);

}  // namespace supchar
