#pragma once

#include <string>
#include <vector>

#include "supchar/arith.hpp"
#include "supchar/nilalg.hpp"

namespace supchar {

struct Arc {
  int i = 0;
  int j = 0;
  int c = 1;
  auto operator<=>(const Arc&) const = default;
};

/// F_q-labeled set partition of [n], kept as its arcs: at most one arc per
/// row and per column. Read as a matrix in S_n(q) or a functional in S_n*(q).
class LabeledSetPartition {
 public:
  LabeledSetPartition(int n, std::vector<Arc> arcs, long long q);

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// "i-j:c" per arc, comma-joined, empty for no arcs.
  std::string label() const;
  UTMatrix matrix() const;
  /// Coordinates in n_n(p), basis e_ij in lexicographic order.
  FVec coords() const;
  /// Blocks of the set partition (sorted), read from the arcs.
  std::vector<std::vector<int>> blocks() const;
  /// Labels of consecutive pairs inside the blocks, in arc order.
  static LabeledSetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks,
                                         const std::vector<int>& labels, long long q);

  bool operator==(const LabeledSetPartition& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }
  bool operator<(const LabeledSetPartition& o) const { return arcs_ < o.arcs_; }

 private:
  int n_;
  std::vector<Arc> arcs_;
};

LabeledSetPartition parse_label(int n, const std::string& label, long long q);
/// Read a matrix in S_n(q) (throws if two entries share a row or column).
LabeledSetPartition from_matrix(const UTMatrix& m, long long q);

/// All of S_n(q), sorted by arc sequence.
std::vector<LabeledSetPartition> enumerate_snq(int n, long long q);

BigInt bell_q(int n, const CountingParameter& q);
BigInt feasible_count(int n, const CountingParameter& q);
BigInt n_row_count(int n, int i, const CountingParameter& q);
BigInt q_binomial(int k, int i, const CountingParameter& q);

/// Product formula for chi^lambda(1 + mu) on U_n(p).
Cyclotomic closed_char_value(const LabeledSetPartition& lambda, const LabeledSetPartition& mu, const PrimeField& field);

}  // namespace supchar
