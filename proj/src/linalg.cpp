#include "supchar/linalg.hpp"

#include <algorithm>

#include "supchar/error.hpp"

namespace supchar {

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > (UINT64_MAX / (base == 0 ? 1 : base))) throw std::overflow_error("ipow overflow");
    r *= base;
  }
  return r;
}

Code encode(const FVec& v, int p) {
  std::uint64_t c = 0;
  for (int x : v) c = c * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(x);
  return static_cast<Code>(c);
}

FVec decode(Code c, int dim, int p) {
  FVec v(static_cast<std::size_t>(dim));
  for (int i = dim - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<Code>(p));
    c /= static_cast<Code>(p);
  }
  return v;
}

FVec vec_add(const FVec& a, const FVec& b, int p) {
  FVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

FVec vec_sub(const FVec& a, const FVec& b, int p) {
  FVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] - b[i] + p) % p;
  return r;
}

FVec vec_scale(const FVec& a, int c, int p) {
  FVec r(a.size());
  c = ((c % p) + p) % p;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] * c) % p;
  return r;
}

int dot(const FVec& a, const FVec& b, int p) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return static_cast<int>(s % p);
}

bool is_zero(const FVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

FMat FMat::identity(int n) {
  FMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FMat FMat::transpose() const {
  FMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

FVec FMat::apply(const FVec& v, int p) const {
  FVec r(static_cast<std::size_t>(rows), 0);
  for (int i = 0; i < rows; ++i) {
    int s = 0;
    const int* row = &a[static_cast<std::size_t>(i * cols)];
    for (int j = 0; j < cols; ++j) s += row[j] * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s % p;
  }
  return r;
}

FMat mat_mul(const FMat& x, const FMat& y, int p) {
  if (x.cols != y.rows) throw InvalidArgument("matrix size mismatch");
  FMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % p;
    }
  return r;
}

FMat mat_add(const FMat& x, const FMat& y, int p) {
  FMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] + y.a[i]) % p;
  return r;
}

FMat mat_scale(const FMat& x, int c, int p) {
  FMat r = x;
  c = ((c % p) + p) % p;
  for (auto& v : r.a) v = (v * c) % p;
  return r;
}

Subspace::Subspace(int p, int dim) : p_(p), dim_(dim) {
  if (!is_prime(p)) throw InvalidArgument("subspace over non-prime modulus");
  if (dim < 0) throw InvalidArgument("negative dimension");
}

Subspace Subspace::span(int p, int dim, const std::vector<FVec>& vectors) {
  Subspace s(p, dim);
  for (const auto& v : vectors) s.add(v);
  return s;
}

Subspace Subspace::whole(int p, int dim) {
  Subspace s(p, dim);
  for (int i = 0; i < dim; ++i) {
    FVec e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    s.add(e);
  }
  return s;
}

FVec Subspace::reduce(const FVec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw InvalidArgument("vector length mismatch");
  FVec r = v;
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    int c = r[static_cast<std::size_t>(pivots_[t])];
    if (c == 0) continue;
    const FVec& row = rows_[t];
    for (int j = 0; j < dim_; ++j) r[static_cast<std::size_t>(j)] = (r[static_cast<std::size_t>(j)] - c * row[static_cast<std::size_t>(j)] % p_ + p_) % p_;
  }
  return r;
}

bool Subspace::contains(const FVec& v) const { return is_zero(reduce(v)); }

bool Subspace::add(const FVec& v) {
  FVec r = reduce(v);
  if (is_zero(r)) return false;
  rows_.push_back(r);
  pivots_.push_back(0);
  normalize();
  return true;
}

void Subspace::normalize() {
  // Gauss-Jordan on the current rows.
  PrimeField f(p_);
  std::vector<FVec> rows = rows_;
  std::vector<FVec> out;
  std::vector<int> piv;
  int col = 0;
  std::size_t r = 0;
  for (col = 0; col < dim_ && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    int inv = f.inv(rows[r][static_cast<std::size_t>(col)]);
    rows[r] = vec_scale(rows[r], inv, p_);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r) continue;
      int c = rows[o][static_cast<std::size_t>(col)];
      if (c != 0) rows[o] = vec_sub(rows[o], vec_scale(rows[r], c, p_), p_);
    }
    piv.push_back(col);
    ++r;
  }
  rows.resize(r);
  rows_ = std::move(rows);
  pivots_ = std::move(piv);
}

std::optional<FVec> Subspace::coordinates(const FVec& v) const {
  if (!contains(v)) return std::nullopt;
  FVec c(rows_.size());
  for (std::size_t t = 0; t < rows_.size(); ++t) c[t] = v[static_cast<std::size_t>(pivots_[t])];
  return c;
}

FVec Subspace::combine(const FVec& coords) const {
  FVec r(static_cast<std::size_t>(dim_), 0);
  for (std::size_t t = 0; t < rows_.size(); ++t)
    if (coords[t] != 0) r = vec_add(r, vec_scale(rows_[t], coords[t], p_), p_);
  return r;
}

Subspace Subspace::sum(const Subspace& o) const {
  Subspace s = *this;
  for (const auto& v : o.rows_) s.add(v);
  return s;
}

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const FVec& v) { return contains(v); });
}

Subspace Subspace::perp() const {
  FMat m(static_cast<int>(rows_.size()), dim_);
  for (std::size_t t = 0; t < rows_.size(); ++t)
    for (int j = 0; j < dim_; ++j) m.at(static_cast<int>(t), j) = rows_[t][static_cast<std::size_t>(j)];
  Subspace k = kernel(m, p_);
  SUPCHAR_CHECK(k.dimension() + dimension() == dim_, "annihilator dimension");
  return k;
}

Subspace Subspace::intersect(const Subspace& o) const {
  // (A ∩ B) = (A^perp + B^perp)^perp
  return perp().sum(o.perp()).perp();
}

std::vector<Code> Subspace::elements() const {
  std::vector<Code> out;
  std::uint64_t total = size();
  require_within_bound(total, "subspace enumeration");
  out.reserve(static_cast<std::size_t>(total));
  int d = dimension();
  for (std::uint64_t c = 0; c < total; ++c) out.push_back(encode(combine(decode(static_cast<Code>(c), d, p_)), p_));
  std::sort(out.begin(), out.end());
  return out;
}

Subspace kernel(const FMat& m, int p) {
  // Row reduce m, then read off the null space.
  std::vector<FVec> rows;
  for (int i = 0; i < m.rows; ++i) rows.emplace_back(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols);
  Subspace rs = Subspace::span(p, m.cols, rows);
  const auto& piv = rs.pivots();
  std::vector<bool> is_piv(static_cast<std::size_t>(m.cols), false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  Subspace k(p, m.cols);
  for (int free = 0; free < m.cols; ++free) {
    if (is_piv[static_cast<std::size_t>(free)]) continue;
    FVec v(static_cast<std::size_t>(m.cols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t t = 0; t < piv.size(); ++t) {
      int c = rs.rows()[t][static_cast<std::size_t>(free)];
      v[static_cast<std::size_t>(piv[t])] = (p - c) % p;
    }
    k.add(v);
  }
  return k;
}

namespace {

void choose_pivots(int k, int r, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c < k; ++c) {
    cur.push_back(c);
    choose_pivots(k, r, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Subspace> all_subspaces(int k, int p) {
  std::vector<Subspace> out;
  for (int r = 0; r <= k; ++r) {
    std::vector<std::vector<int>> pivot_sets;
    std::vector<int> cur;
    choose_pivots(k, r, 0, cur, pivot_sets);
    for (const auto& piv : pivot_sets) {
      // free slots: (row t, column c) with c > piv[t] and c not a pivot
      std::vector<std::pair<int, int>> slots;
      for (int t = 0; t < r; ++t)
        for (int c = piv[static_cast<std::size_t>(t)] + 1; c < k; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(t, c);
      std::uint64_t count = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(slots.size()));
      require_within_bound(count, "subspace enumeration");
      for (std::uint64_t code = 0; code < count; ++code) {
        FVec vals = decode(static_cast<Code>(code), static_cast<int>(slots.size()), p);
        std::vector<FVec> rows(static_cast<std::size_t>(r), FVec(static_cast<std::size_t>(k), 0));
        for (int t = 0; t < r; ++t) rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(piv[static_cast<std::size_t>(t)])] = 1;
        for (std::size_t s = 0; s < slots.size(); ++s)
          rows[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = vals[s];
        Subspace sp = Subspace::span(p, k, rows);
        SUPCHAR_CHECK(sp.dimension() == r && sp.rows() == rows, "echelon enumeration");
        out.push_back(std::move(sp));
      }
    }
  }
  return out;
}

std::optional<FVec> solve(const FMat& a, const FVec& b, int p) {
  if (static_cast<int>(b.size()) != a.rows) throw InvalidArgument("right-hand side length mismatch");
  std::vector<FVec> rows;
  for (int i = 0; i < a.rows; ++i) {
    FVec r(a.a.begin() + i * a.cols, a.a.begin() + (i + 1) * a.cols);
    r.push_back(b[static_cast<std::size_t>(i)]);
    rows.push_back(std::move(r));
  }
  Subspace rs = Subspace::span(p, a.cols + 1, rows);
  FVec x(static_cast<std::size_t>(a.cols), 0);
  for (std::size_t t = 0; t < rs.pivots().size(); ++t) {
    int c = rs.pivots()[t];
    if (c == a.cols) return std::nullopt;
    x[static_cast<std::size_t>(c)] = rs.rows()[t][static_cast<std::size_t>(a.cols)];
  }
  return x;
}

}  // namespace supchar
