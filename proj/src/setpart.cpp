#include "supchar/setpart.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "supchar/error.hpp"

namespace supchar {

LabeledSetPartition::LabeledSetPartition(int n, std::vector<Arc> arcs, long long q) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw InvalidArgument("set partition size must be non-negative");
  std::sort(arcs_.begin(), arcs_.end());
  std::vector<char> row(static_cast<std::size_t>(n + 1), 0), col(static_cast<std::size_t>(n + 1), 0);
  for (const auto& a : arcs_) {
    if (a.i < 1 || a.j > n || a.i >= a.j) throw InvalidArgument("arc out of range");
    if (a.c < 1 || a.c >= q) throw InvalidArgument("arc label must be a nonzero field element");
    if (row[static_cast<std::size_t>(a.i)]++ || col[static_cast<std::size_t>(a.j)]++)
      throw InvalidArgument("at most one arc per row and per column");
  }
}

std::string LabeledSetPartition::label() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < arcs_.size(); ++t)
    os << (t ? "," : "") << arcs_[t].i << "-" << arcs_[t].j << ":" << arcs_[t].c;
  return os.str();
}

UTMatrix LabeledSetPartition::matrix() const {
  UTMatrix m(std::max(n_, 1));
  for (const auto& a : arcs_) m.set(a.i, a.j, a.c);
  return m;
}

FVec LabeledSetPartition::coords() const { return flatten(matrix()); }

std::vector<std::vector<int>> LabeledSetPartition::blocks() const {
  std::vector<int> next(static_cast<std::size_t>(n_ + 1), 0);
  std::vector<char> has_prev(static_cast<std::size_t>(n_ + 1), 0);
  for (const auto& a : arcs_) {
    next[static_cast<std::size_t>(a.i)] = a.j;
    has_prev[static_cast<std::size_t>(a.j)] = 1;
  }
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n_; ++s) {
    if (has_prev[static_cast<std::size_t>(s)]) continue;
    std::vector<int> b;
    for (int x = s; x != 0; x = next[static_cast<std::size_t>(x)]) b.push_back(x);
    out.push_back(std::move(b));
  }
  return out;
}

LabeledSetPartition LabeledSetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks,
                                                     const std::vector<int>& labels, long long q) {
  std::vector<Arc> arcs;
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  for (auto b : blocks) {
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]++) throw InvalidArgument("blocks must partition [n]");
    }
    for (std::size_t t = 0; t + 1 < b.size(); ++t) arcs.push_back(Arc{b[t], b[t + 1], 1});
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[static_cast<std::size_t>(x)]) throw InvalidArgument("blocks must cover [n]");
  std::sort(arcs.begin(), arcs.end());
  if (labels.size() != arcs.size()) throw InvalidArgument("one label per consecutive pair");
  for (std::size_t t = 0; t < arcs.size(); ++t) arcs[t].c = labels[t];
  return LabeledSetPartition(n, arcs, q);
}

LabeledSetPartition parse_label(int n, const std::string& label, long long q) {
  std::vector<Arc> arcs;
  std::stringstream ss(label);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    Arc a;
    char dash, colon;
    std::istringstream is(item);
    if (!(is >> a.i >> dash >> a.j >> colon >> a.c) || dash != '-' || colon != ':')
      throw InvalidArgument("bad arc label: " + item);
    arcs.push_back(a);
  }
  return LabeledSetPartition(n, arcs, q);
}

LabeledSetPartition from_matrix(const UTMatrix& m, long long q) {
  std::vector<Arc> arcs;
  for (auto [i, j, c] : m.entries()) arcs.push_back(Arc{i, j, c});
  return LabeledSetPartition(m.size(), arcs, q);
}

namespace {

void place_arcs(int n, long long q, int col, std::vector<char>& row_used, std::vector<Arc>& cur,
                std::vector<LabeledSetPartition>& out) {
  if (col > n) {
    out.emplace_back(n, cur, q);
    return;
  }
  place_arcs(n, q, col + 1, row_used, cur, out);
  for (int r = 1; r < col; ++r) {
    if (row_used[static_cast<std::size_t>(r)]) continue;
    row_used[static_cast<std::size_t>(r)] = 1;
    for (long long c = 1; c < q; ++c) {
      cur.push_back(Arc{r, col, static_cast<int>(c)});
      place_arcs(n, q, col + 1, row_used, cur, out);
      cur.pop_back();
    }
    row_used[static_cast<std::size_t>(r)] = 0;
  }
}

}  // namespace

std::vector<LabeledSetPartition> enumerate_snq(int n, long long q) {
  CountingParameter check(q);
  require_within_bound(static_cast<std::uint64_t>(bell_q(n, check).convert_to<double>()), "set partition enumeration");
  std::vector<LabeledSetPartition> out;
  std::vector<char> row_used(static_cast<std::size_t>(n + 1), 0);
  std::vector<Arc> cur;
  place_arcs(n, q, 1, row_used, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt bell_q(int n, const CountingParameter& q) {
  if (n < 0) throw InvalidArgument("bell_q needs n >= 0");
  std::vector<BigInt> b{1};
  const BigInt qm1 = q.big() - 1;
  for (int m = 0; m < n; ++m) {
    BigInt s = 0;
    for (int k = 0; k <= m; ++k) s += binomial(m, k) * power(qm1, static_cast<unsigned>(k)) * b[static_cast<std::size_t>(m - k)];
    b.push_back(s);
  }
  return b[static_cast<std::size_t>(n)];
}

BigInt feasible_count(int n, const CountingParameter& q) {
  if (n < 0) throw InvalidArgument("feasible_count needs n >= 0");
  BigInt s = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt t = binomial(n, k) * bell_q(n - k, q);
    s += (k % 2 == 0) ? t : BigInt(-t);
  }
  return s;
}

BigInt n_row_count(int n, int i, const CountingParameter& q) {
  if (i < 1 || i > n) throw InvalidArgument("row index out of range");
  // Rook placements column by column; rows below the column that are
  // still free are interchangeable, except the forbidden row i.
  const BigInt qm1 = q.big() - 1;
  std::map<int, BigInt> state{{0, 1}};  // arcs placed -> weight
  for (int col = 1; col <= n; ++col) {
    std::map<int, BigInt> next;
    for (const auto& [used, w] : state) {
      next[used] += w;
      int free = (col - 1) - used - (i < col ? 1 : 0);
      // row i is never used, so it is always among the rows counted above
      if (free > 0) next[used + 1] += w * free * qm1;
    }
    state = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [used, w] : state) total += w;
  return total;
}

BigInt q_binomial(int k, int i, const CountingParameter& q) {
  if (k < 0) throw InvalidArgument("q_binomial needs k >= 0");
  if (i < 0 || i > k) return 0;
  BigInt num = 1, den = 1;
  const BigInt qq = q.big();
  for (int t = 0; t < i; ++t) {
    num *= (1 - power(qq, static_cast<unsigned>(k - t)));
    den *= (1 - power(qq, static_cast<unsigned>(t + 1)));
  }
  SUPCHAR_CHECK(num % den == 0, "q-binomial integrality");
  return num / den;
}

Cyclotomic closed_char_value(const LabeledSetPartition& lambda, const LabeledSetPartition& mu, const PrimeField& field) {
  if (lambda.n() != mu.n()) throw InvalidArgument("set partitions of different sizes");
  const int p = field.p();
  for (const auto& a : lambda.arcs())
    if (a.c >= p) throw InvalidArgument("label exceeds field");
  for (const auto& a : mu.arcs())
    if (a.c >= p) throw InvalidArgument("label exceeds field");
  auto in_mu = [&](int i, int j) {
    return std::any_of(mu.arcs().begin(), mu.arcs().end(), [&](const Arc& a) { return a.i == i && a.j == j; });
  };
  std::int64_t scale = 1;
  for (const auto& a : lambda.arcs()) {
    for (int j = a.i + 1; j < a.j; ++j)
      if (in_mu(a.i, j) || in_mu(j, a.j)) return Cyclotomic(p);
    int f = 0;
    for (const auto& b : mu.arcs())
      if (a.i < b.i && b.j < a.j) ++f;
    for (int t = 0; t < a.j - a.i - 1 - f; ++t) scale = checked_mul(scale, p);
  }
  long long pairing = 0;
  for (const auto& a : lambda.arcs())
    for (const auto& b : mu.arcs())
      if (a.i == b.i && a.j == b.j) pairing += static_cast<long long>(a.c) * b.c;
  return theta(field.norm(pairing), p).scaled(scale);
}

}  // namespace supchar
