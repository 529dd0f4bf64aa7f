#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "supchar/arith.hpp"

namespace supchar {

/// A relation (i, j) with 1 <= i < j <= n.
using Pair = std::pair<int, int>;

/// Poset on [n], stored as its set of relations.
class Poset {
 public:
  /// Accepts only transitively closed relation sets.
  static Poset closed(int n, std::vector<Pair> relations);
  /// Completes the relation set to its transitive closure.
  static Poset closure(int n, std::vector<Pair> relations);
  /// [[n]]: every pair i < j.
  static Poset full(int n);

  int n() const { return n_; }
  /// Relations in lexicographic order.
  const std::vector<Pair>& relations() const { return rels_; }
  std::size_t size() const { return rels_.size(); }
  bool contains(Pair a) const;
  /// Position of a relation in relations(), or -1.
  int index_of(Pair a) const;
  /// Whether the input handed to closure() was already closed.
  bool input_was_closed() const { return input_closed_; }

  /// The internal strict order on relations. Both pairs must be in P.
  bool internal_lt(Pair a, Pair b) const;
  bool internal_le(Pair a, Pair b) const { return a == b || internal_lt(a, b); }

  /// Covering relations of the poset on [n] (edges of its Hasse diagram).
  std::vector<Pair> covers() const;

  bool operator==(const Poset& o) const { return n_ == o.n_ && rels_ == o.rels_; }
  std::string to_string() const;

 private:
  Poset(int n, std::vector<Pair> rels, bool input_closed);
  void build_internal_order();

  int n_ = 0;
  std::vector<Pair> rels_;
  std::vector<char> member_;  // n*n
  std::vector<char> lt_;      // |P|*|P|
  bool input_closed_ = true;
};

/// P normal in Q, for P a subset of Q.
bool is_normal_subposet(const Poset& p, const Poset& q);

struct Antichain {
  int n = 0;
  std::vector<Pair> elements;  // sorted
  bool operator==(const Antichain& o) const = default;
};

/// Every antichain of (P, internal order), in lexicographic order of element lists.
std::vector<Antichain> antichains(const Poset& p);
/// P_S: relations of P not below any member of S.
Poset normal_subposet_from_antichain(const Poset& p, const Antichain& s);

enum class Step { Up, Down };
using DyckPath = std::vector<Step>;

DyckPath dyck_of_antichain(const Antichain& s, int n);
Antichain antichain_of_dyck(const DyckPath& path);
bool is_dyck(const DyckPath& path);
int peaks(const DyckPath& path);
std::string to_string(const DyckPath& path);
DyckPath parse_dyck(const std::string& text);

BigInt narayana(long long n, long long r);
BigInt catalan(long long n);

/// "n=<int>" followed by one "i j" per line.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);

}  // namespace supchar
