#include "supchar/poset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "supchar/error.hpp"

namespace supchar {

namespace {

void validate_pairs(int n, const std::vector<Pair>& rels) {
  if (n < 0) throw InvalidArgument("poset size must be non-negative");
  for (auto [i, j] : rels) {
    if (i >= j) throw InvalidArgument("relation (" + std::to_string(i) + "," + std::to_string(j) + ") needs i < j");
    if (i < 1 || j > n) throw InvalidArgument("relation (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
}

std::vector<char> membership(int n, const std::vector<Pair>& rels) {
  std::vector<char> m(static_cast<std::size_t>(n * n), 0);
  for (auto [i, j] : rels) m[static_cast<std::size_t>((i - 1) * n + (j - 1))] = 1;
  return m;
}

}  // namespace

Poset::Poset(int n, std::vector<Pair> rels, bool input_closed)
    : n_(n), rels_(std::move(rels)), input_closed_(input_closed) {
  std::sort(rels_.begin(), rels_.end());
  rels_.erase(std::unique(rels_.begin(), rels_.end()), rels_.end());
  member_ = membership(n_, rels_);
  build_internal_order();
}

Poset Poset::closed(int n, std::vector<Pair> relations) {
  validate_pairs(n, relations);
  auto m = membership(n, relations);
  auto in = [&](int i, int j) { return m[static_cast<std::size_t>((i - 1) * n + (j - 1))] != 0; };
  for (auto [i, j] : relations)
    for (int k = j + 1; k <= n; ++k)
      if (in(j, k) && !in(i, k))
        throw InvalidArgument("relation set not transitively closed: missing (" + std::to_string(i) + "," +
                              std::to_string(k) + ")");
  return Poset(n, std::move(relations), true);
}

Poset Poset::closure(int n, std::vector<Pair> relations) {
  validate_pairs(n, relations);
  auto m = membership(n, relations);
  auto at = [&](int i, int j) -> char& { return m[static_cast<std::size_t>((i - 1) * n + (j - 1))]; };
  bool was_closed = true;
  // Warshall over the middle element
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (at(i, j))
        for (int k = j + 1; k <= n; ++k)
          if (at(j, k) && !at(i, k)) {
            at(i, k) = 1;
            was_closed = false;
          }
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (at(i, j)) out.emplace_back(i, j);
  return Poset(n, std::move(out), was_closed);
}

Poset Poset::full(int n) {
  std::vector<Pair> r;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r.emplace_back(i, j);
  return Poset(n, std::move(r), true);
}

bool Poset::contains(Pair a) const {
  auto [i, j] = a;
  if (i < 1 || j > n_ || i >= j) return false;
  return member_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))] != 0;
}

int Poset::index_of(Pair a) const {
  auto it = std::lower_bound(rels_.begin(), rels_.end(), a);
  if (it == rels_.end() || *it != a) return -1;
  return static_cast<int>(it - rels_.begin());
}

void Poset::build_internal_order() {
  const std::size_t m = rels_.size();
  lt_.assign(m * m, 0);
  auto set = [&](Pair a, Pair b) {
    int x = index_of(a), y = index_of(b);
    if (x >= 0 && y >= 0) lt_[static_cast<std::size_t>(x) * m + static_cast<std::size_t>(y)] = 1;
  };
  for (auto [j, k] : rels_) {
    for (int i = 1; i < j; ++i)
      if (contains({i, j}) && contains({i, k})) set({j, k}, {i, k});
    for (int l = k + 1; l <= n_; ++l)
      if (contains({k, l}) && contains({j, l})) set({j, k}, {j, l});
  }
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t a = 0; a < m; ++a)
      if (lt_[a * m + b])
        for (std::size_t c = 0; c < m; ++c)
          if (lt_[b * m + c]) lt_[a * m + c] = 1;
}

bool Poset::internal_lt(Pair a, Pair b) const {
  int x = index_of(a), y = index_of(b);
  if (x < 0 || y < 0) throw InvalidArgument("internal order: pair not in poset");
  return lt_[static_cast<std::size_t>(x) * rels_.size() + static_cast<std::size_t>(y)] != 0;
}

std::vector<Pair> Poset::covers() const {
  std::vector<Pair> out;
  for (auto [i, k] : rels_) {
    bool cover = true;
    for (int j = i + 1; j < k && cover; ++j)
      if (contains({i, j}) && contains({j, k})) cover = false;
    if (cover) out.emplace_back(i, k);
  }
  return out;
}

std::string Poset::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " {";
  for (std::size_t t = 0; t < rels_.size(); ++t)
    os << (t ? "," : "") << "(" << rels_[t].first << "," << rels_[t].second << ")";
  os << "}";
  return os.str();
}

bool is_normal_subposet(const Poset& p, const Poset& q) {
  if (p.n() != q.n()) throw InvalidArgument("posets on different ground sets");
  for (auto r : p.relations())
    if (!q.contains(r)) throw InvalidArgument("P is not contained in Q");
  for (auto [i, j] : q.relations())
    for (auto [a, b] : p.relations()) {
      if (a == j && !p.contains({i, b})) return false;  // (i,j) in Q, (j,k) in P
      if (b == i && !p.contains({a, j})) return false;  // (j,k) in Q, (i,j) in P
    }
  return true;
}

namespace {

void grow_antichains(const Poset& p, std::size_t start, Antichain& cur, std::vector<Antichain>& out) {
  const auto& rels = p.relations();
  for (std::size_t t = start; t < rels.size(); ++t) {
    bool ok = true;
    for (auto e : cur.elements)
      if (p.internal_lt(e, rels[t]) || p.internal_lt(rels[t], e)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.elements.push_back(rels[t]);
    out.push_back(cur);
    grow_antichains(p, t + 1, cur, out);
    cur.elements.pop_back();
  }
}

}  // namespace

std::vector<Antichain> antichains(const Poset& p) {
  std::vector<Antichain> out;
  Antichain cur{p.n(), {}};
  out.push_back(cur);
  grow_antichains(p, 0, cur, out);
  return out;
}

Poset normal_subposet_from_antichain(const Poset& p, const Antichain& s) {
  for (std::size_t a = 0; a < s.elements.size(); ++a) {
    if (!p.contains(s.elements[a])) throw InvalidArgument("antichain element not in poset");
    for (std::size_t b = 0; b < s.elements.size(); ++b)
      if (a != b && p.internal_lt(s.elements[a], s.elements[b])) throw InvalidArgument("set is not an antichain");
  }
  std::vector<Pair> keep;
  for (auto r : p.relations()) {
    bool below = false;
    for (auto e : s.elements)
      if (p.internal_le(r, e)) below = true;
    if (!below) keep.push_back(r);
  }
  return Poset::closed(p.n(), keep);
}

DyckPath dyck_of_antichain(const Antichain& s, int n) {
  auto up = [](DyckPath& d, int k) { d.insert(d.end(), static_cast<std::size_t>(k), Step::Up); };
  auto down = [](DyckPath& d, int k) { d.insert(d.end(), static_cast<std::size_t>(k), Step::Down); };
  const auto& e = s.elements;
  DyckPath d;
  if (e.empty()) {
    up(d, n);
    down(d, n);
    return d;
  }
  for (std::size_t t = 1; t < e.size(); ++t) {
    if (e[t].first <= e[t - 1].first) throw InvalidArgument("antichain rows must increase");
    SUPCHAR_CHECK(e[t].second > e[t - 1].second, "antichain columns increase with rows");
  }
  int pi = 0, pj = 1;
  for (auto [i, j] : e) {
    if (i < 1 || j > n || i >= j) throw InvalidArgument("antichain pair out of range");
    up(d, j - pj);
    down(d, i - pi);
    pi = i;
    pj = j;
  }
  up(d, n - (pj - 1));
  down(d, n - pi);
  if (!is_dyck(d)) throw InvalidArgument("pairs do not form an antichain of [[n]]");
  return d;
}

bool is_dyck(const DyckPath& path) {
  int h = 0;
  for (Step s : path) {
    h += (s == Step::Up) ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

int peaks(const DyckPath& path) {
  int c = 0;
  for (std::size_t t = 0; t + 1 < path.size(); ++t)
    if (path[t] == Step::Up && path[t + 1] == Step::Down) ++c;
  return c;
}

Antichain antichain_of_dyck(const DyckPath& path) {
  if (!is_dyck(path) || path.empty()) throw InvalidArgument("malformed Dyck path");
  int n = static_cast<int>(path.size()) / 2;
  // runs U^{a_t} D^{b_t}
  std::vector<int> a, b;
  std::size_t t = 0;
  while (t < path.size()) {
    int u = 0, dn = 0;
    while (t < path.size() && path[t] == Step::Up) ++u, ++t;
    while (t < path.size() && path[t] == Step::Down) ++dn, ++t;
    a.push_back(u);
    b.push_back(dn);
  }
  Antichain s{n, {}};
  int i = 0, j = 1;
  for (std::size_t r = 0; r + 1 < a.size(); ++r) {
    i += b[r];
    j += a[r];
    s.elements.emplace_back(i, j);
  }
  return s;
}

std::string to_string(const DyckPath& path) {
  std::string s;
  for (Step st : path) s += (st == Step::Up ? 'U' : 'D');
  return s;
}

DyckPath parse_dyck(const std::string& text) {
  DyckPath d;
  for (char c : text) {
    if (c == 'U') d.push_back(Step::Up);
    else if (c == 'D') d.push_back(Step::Down);
    else throw InvalidArgument("Dyck path letters must be U or D");
  }
  return d;
}

BigInt narayana(long long n, long long r) {
  if (n < 1) throw InvalidArgument("narayana needs n >= 1");
  long long k = r - 1;
  if (k < 0 || k >= n) return 0;
  BigInt v = binomial(n, k + 1) * binomial(n, k);
  SUPCHAR_CHECK(v % n == 0, "Narayana integrality");
  return v / n;
}

BigInt catalan(long long n) {
  if (n < 0) throw InvalidArgument("catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

Poset read_poset(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Pair> rels;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    if (n < 0) {
      if (line.compare(pos, 2, "n=") != 0) throw InvalidArgument("poset file must start with n=<int>");
      n = std::stoi(line.substr(pos + 2));
      continue;
    }
    std::istringstream ls(line);
    int i, j;
    if (!(ls >> i >> j)) throw InvalidArgument("bad poset line: " + line);
    rels.emplace_back(i, j);
  }
  if (n < 0) throw InvalidArgument("poset file missing n=<int>");
  return Poset::closure(n, rels);
}

void write_poset(std::ostream& out, const Poset& p) {
  out << "n=" << p.n() << "\n";
  for (auto [i, j] : p.relations()) out << i << " " << j << "\n";
}

}  // namespace supchar
