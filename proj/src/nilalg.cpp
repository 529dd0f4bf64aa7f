#include "supchar/nilalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "supchar/error.hpp"

namespace supchar {

UTMatrix UTMatrix::unit(int n, int i, int j, int c) {
  UTMatrix m(n);
  m.set(i, j, c);
  return m;
}

void UTMatrix::set(int i, int j, int v) {
  if (i < 1 || j > n_ || i >= j) throw InvalidArgument("UTMatrix entry must satisfy 1 <= i < j <= n");
  e_[idx(i, j)] = v;
}

std::vector<std::tuple<int, int, int>> UTMatrix::entries() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (at(i, j) != 0) out.emplace_back(i, j, at(i, j));
  return out;
}

bool UTMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

UTMatrix UTMatrix::plus(const UTMatrix& o, int p) const {
  UTMatrix r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = (r.e_[k] + o.e_[k]) % p;
  return r;
}

UTMatrix UTMatrix::times(const UTMatrix& o, int p) const {
  if (n_ != o.n_) throw InvalidArgument("matrix size mismatch");
  UTMatrix r(n_);
  for (int i = 1; i <= n_; ++i)
    for (int k = i + 1; k <= n_; ++k) {
      int a = at(i, k);
      if (a == 0) continue;
      for (int j = k + 1; j <= n_; ++j) r.e_[r.idx(i, j)] = (r.e_[r.idx(i, j)] + a * o.at(k, j)) % p;
    }
  return r;
}

UTMatrix UTMatrix::scaled(int c, int p) const {
  UTMatrix r = *this;
  c = ((c % p) + p) % p;
  for (auto& v : r.e_) v = (v * c) % p;
  return r;
}

std::vector<Pair> positions(int n) {
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

FVec flatten(const UTMatrix& m) {
  FVec v;
  for (auto [i, j] : positions(m.size())) v.push_back(m.at(i, j));
  return v;
}

UTMatrix unflatten(int n, const FVec& v) {
  UTMatrix m(n);
  auto pos = positions(n);
  for (std::size_t t = 0; t < pos.size(); ++t)
    if (v[t] != 0) m.set(pos[t].first, pos[t].second, v[t]);
  return m;
}

std::shared_ptr<const NilpotentAlgebra> NilpotentAlgebra::from_spanning(int n, int p, const std::vector<UTMatrix>& mats) {
  if (n < 1) throw InvalidArgument("matrix size must be positive");
  auto alg = std::shared_ptr<NilpotentAlgebra>(new NilpotentAlgebra(n, p));
  for (const auto& m : mats) {
    if (m.size() != n) throw InvalidArgument("spanning matrices must share one size");
    FVec v = flatten(m);
    for (auto& x : v) x = alg->field_.norm(x);
    alg->span_.add(v);
  }
  for (const auto& row : alg->span_.rows()) alg->basis_.push_back(unflatten(n, row));
  const int d = alg->dim();
  alg->structure_.resize(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto c = alg->coords(alg->basis_[static_cast<std::size_t>(i)].times(alg->basis_[static_cast<std::size_t>(j)], p));
      if (!c)
        throw NotClosed("span is not closed under multiplication: basis " + std::to_string(i) + " times basis " +
                            std::to_string(j) + " escapes",
                        i, j);
      alg->structure_[static_cast<std::size_t>(i * d + j)] = *c;
    }
  for (const auto& b : alg->basis_) {
    UTMatrix pw = b;
    for (int k = 1; k < n; ++k) pw = pw.times(b, p);
    SUPCHAR_CHECK(pw.is_zero(), "basis element not nilpotent");
  }
  return alg;
}

std::shared_ptr<const NilpotentAlgebra> NilpotentAlgebra::pattern(const Poset& poset, int p) {
  std::vector<UTMatrix> mats;
  int n = std::max(poset.n(), 1);
  for (auto [i, j] : poset.relations()) mats.push_back(UTMatrix::unit(n, i, j));
  auto base = from_spanning(n, p, mats);
  auto alg = std::shared_ptr<NilpotentAlgebra>(new NilpotentAlgebra(*base));
  alg->poset_ = poset;
  return alg;
}

std::shared_ptr<const NilpotentAlgebra> NilpotentAlgebra::full(int n, int p) { return pattern(Poset::full(n), p); }

std::uint64_t NilpotentAlgebra::order() const { return ipow(static_cast<std::uint64_t>(p()), static_cast<unsigned>(dim())); }

UTMatrix NilpotentAlgebra::matrix(const FVec& x) const {
  if (static_cast<int>(x.size()) != dim()) throw InvalidArgument("coordinate vector length mismatch");
  UTMatrix m(n_);
  for (int t = 0; t < dim(); ++t)
    if (x[static_cast<std::size_t>(t)] != 0) m = m.plus(basis_[static_cast<std::size_t>(t)].scaled(x[static_cast<std::size_t>(t)], p()), p());
  return m;
}

std::optional<FVec> NilpotentAlgebra::coords(const UTMatrix& m) const {
  if (m.size() != n_) throw InvalidArgument("matrix size mismatch");
  FVec v = flatten(m);
  for (auto& x : v) x = field_.norm(x);
  return span_.coordinates(v);
}

FVec NilpotentAlgebra::mul(const FVec& x, const FVec& y) const {
  const int d = dim();
  const int pp = p();
  std::vector<long long> acc(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    int a = x[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < d; ++j) {
      int b = y[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      int ab = a * b;
      const FVec& s = structure_[static_cast<std::size_t>(i * d + j)];
      for (int k = 0; k < d; ++k) acc[static_cast<std::size_t>(k)] += ab * s[static_cast<std::size_t>(k)];
    }
  }
  FVec r(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) r[static_cast<std::size_t>(k)] = static_cast<int>(acc[static_cast<std::size_t>(k)] % pp);
  return r;
}

FVec NilpotentAlgebra::group_mul(const FVec& x, const FVec& y) const {
  return vec_add(vec_add(x, y, p()), mul(x, y), p());
}

FVec NilpotentAlgebra::group_inv(const FVec& x) const {
  // 1 - X + X^2 - ... ; terminates since X is nilpotent
  FVec sum = zero();
  FVec term = x;
  int sign = p() - 1;
  while (!is_zero(term)) {
    sum = vec_add(sum, vec_scale(term, sign, p()), p());
    term = mul(term, x);
    sign = p() - sign;
  }
  return sum;
}

bool NilpotentAlgebra::is_commutative_zero() const {
  return std::all_of(structure_.begin(), structure_.end(), [](const FVec& v) { return is_zero(v); });
}

Inclusion::Inclusion(AlgebraPtr sub, AlgebraPtr ambient)
    : sub_(std::move(sub)), ambient_(std::move(ambient)), image_(ambient_->p(), ambient_->dim()) {
  if (sub_->p() != ambient_->p() || sub_->matrix_size() != ambient_->matrix_size())
    throw InvalidArgument("subalgebra and algebra must share matrix size and prime");
  embed_ = FMat(ambient_->dim(), sub_->dim());
  for (int k = 0; k < sub_->dim(); ++k) {
    auto c = ambient_->coords(sub_->basis()[static_cast<std::size_t>(k)]);
    if (!c) throw InvalidArgument("subalgebra is not contained in the algebra");
    for (int j = 0; j < ambient_->dim(); ++j) embed_.at(j, k) = (*c)[static_cast<std::size_t>(j)];
    image_.add(*c);
  }
}

FVec Inclusion::embed(const FVec& x) const { return embed_.apply(x, ambient_->p()); }

std::optional<FVec> Inclusion::pull_back(const FVec& x) const {
  if (!image_.contains(x)) return std::nullopt;
  return sub_->coords(ambient_->matrix(x));
}

FVec Inclusion::restrict_functional(const FVec& lambda) const {
  if (static_cast<int>(lambda.size()) != ambient_->dim()) throw InvalidArgument("functional length mismatch");
  return embed_.transpose().apply(lambda, ambient_->p());
}

bool is_subalgebra(const NilpotentAlgebra& m, const NilpotentAlgebra& n) {
  if (m.p() != n.p() || m.matrix_size() != n.matrix_size()) return false;
  return n.span().contains(m.span());
}

bool is_ideal(const NilpotentAlgebra& m, const NilpotentAlgebra& n) {
  if (!is_subalgebra(m, n)) throw InvalidArgument("m is not contained in n");
  for (const auto& x : n.basis())
    for (const auto& y : m.basis()) {
      if (!m.contains(x.times(y, n.p()))) return false;
      if (!m.contains(y.times(x, n.p()))) return false;
    }
  return true;
}

Subspace perp(const Inclusion& inc) {
  Subspace k = kernel(inc.embedding().transpose(), inc.ambient()->p());
  SUPCHAR_CHECK(k.dimension() + inc.sub()->dim() == inc.ambient()->dim(), "|m^perp| = |n|/|m|");
  return k;
}

Quotient quotient(const AlgebraPtr& n, const AlgebraPtr& m) {
  if (!is_ideal(*m, *n)) throw NotIdeal("quotient needs a two-sided ideal");
  const int p = n->p();
  const int d = n->dim();
  Inclusion inc(m, n);
  const Subspace& msp = inc.image();
  std::vector<int> free;
  {
    std::vector<bool> piv(static_cast<std::size_t>(d), false);
    for (int c : msp.pivots()) piv[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < d; ++c)
      if (!piv[static_cast<std::size_t>(c)]) free.push_back(c);
  }
  const int r = static_cast<int>(free.size());
  // projection onto coset coordinates
  auto proj = [&](const FVec& x) {
    FVec red = msp.reduce(x);
    FVec out(static_cast<std::size_t>(r));
    for (int t = 0; t < r; ++t) out[static_cast<std::size_t>(t)] = red[static_cast<std::size_t>(free[static_cast<std::size_t>(t)])];
    return out;
  };
  auto rep = [&](int t) {
    FVec e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(free[static_cast<std::size_t>(t)])] = 1;
    return e;
  };
  // coset-coordinate product
  auto qmul = [&](const FVec& x, const FVec& y) {
    FVec lx(static_cast<std::size_t>(d), 0), ly(static_cast<std::size_t>(d), 0);
    for (int t = 0; t < r; ++t) {
      lx = vec_add(lx, vec_scale(rep(t), x[static_cast<std::size_t>(t)], p), p);
      ly = vec_add(ly, vec_scale(rep(t), y[static_cast<std::size_t>(t)], p), p);
    }
    return proj(n->mul(lx, ly));
  };
  // Filtration Q ⊃ Q^2 ⊃ ... ; basis ordered deepest layer first.
  std::vector<Subspace> layers;
  layers.push_back(Subspace::whole(p, r));
  while (layers.back().dimension() > 0) {
    Subspace next(p, r);
    for (const auto& x : layers.back().rows())
      for (int t = 0; t < r; ++t) {
        FVec e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(t)] = 1;
        next.add(qmul(x, e));
      }
    SUPCHAR_CHECK(next.dimension() < layers.back().dimension(), "quotient is nilpotent");
    layers.push_back(next);
  }
  std::vector<FVec> fbasis;
  Subspace acc(p, r);
  for (auto it = layers.rbegin(); it != layers.rend(); ++it)
    for (const auto& v : it->rows())
      if (acc.add(v)) fbasis.push_back(v);
  SUPCHAR_CHECK(static_cast<int>(fbasis.size()) == r, "adapted basis");
  // Coordinates in fbasis: reduce (x | 0) against rows (f_c | e_c).
  auto fcoords = [&](const FVec& x) {
    std::vector<FVec> aug;
    for (int c = 0; c < r; ++c) {
      FVec v(static_cast<std::size_t>(2 * r), 0);
      for (int t = 0; t < r; ++t) v[static_cast<std::size_t>(t)] = fbasis[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)];
      v[static_cast<std::size_t>(r + c)] = 1;
      aug.push_back(v);
    }
    Subspace s = Subspace::span(p, 2 * r, aug);
    FVec target(static_cast<std::size_t>(2 * r), 0);
    for (int t = 0; t < r; ++t) target[static_cast<std::size_t>(t)] = x[static_cast<std::size_t>(t)];
    FVec red = s.reduce(target);
    FVec y(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c) y[static_cast<std::size_t>(c)] = (p - red[static_cast<std::size_t>(r + c)]) % p;
    return y;
  };
  const int big = r + 1;
  auto left_regular = [&](const FVec& x) {
    UTMatrix mat(big);
    for (int c = 0; c < r; ++c) {
      FVec y = fcoords(qmul(x, fbasis[static_cast<std::size_t>(c)]));
      for (int a = 0; a < r; ++a)
        if (y[static_cast<std::size_t>(a)] != 0) mat.set(a + 1, c + 1, y[static_cast<std::size_t>(a)]);
    }
    FVec y = fcoords(x);
    for (int a = 0; a < r; ++a)
      if (y[static_cast<std::size_t>(a)] != 0) mat.set(a + 1, big, y[static_cast<std::size_t>(a)]);
    return mat;
  };
  std::vector<UTMatrix> gens;
  for (int t = 0; t < r; ++t) {
    FVec e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(t)] = 1;
    gens.push_back(left_regular(e));
  }
  Quotient q;
  q.algebra = NilpotentAlgebra::from_spanning(big, p, gens);
  SUPCHAR_CHECK(q.algebra->dim() == r, "regular representation is faithful");
  q.projection = FMat(r, d);
  for (int k = 0; k < d; ++k) {
    FVec e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(k)] = 1;
    auto c = q.algebra->coords(left_regular(proj(e)));
    SUPCHAR_CHECK(c.has_value(), "projection lands in quotient");
    for (int t = 0; t < r; ++t) q.projection.at(t, k) = (*c)[static_cast<std::size_t>(t)];
  }
  // projection is multiplicative
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      FVec ei(static_cast<std::size_t>(d), 0), ej(static_cast<std::size_t>(d), 0);
      ei[static_cast<std::size_t>(i)] = 1;
      ej[static_cast<std::size_t>(j)] = 1;
      SUPCHAR_CHECK(q.project(n->mul(ei, ej), p) == q.algebra->mul(q.project(ei, p), q.project(ej, p)),
                    "projection is an algebra map");
    }
  return q;
}

AlgebraPtr read_algebra(std::istream& in) {
  std::string line;
  int n = -1, p = -1;
  std::vector<UTMatrix> mats;
  bool open = false;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos != std::string::npos && line[pos] == '#') continue;
    if (n < 0) {
      if (pos == std::string::npos) continue;
      std::istringstream hs(line);
      std::string a, b;
      hs >> a >> b;
      if (a.rfind("n=", 0) != 0 || b.rfind("p=", 0) != 0) throw InvalidArgument("algebra file must start with n=<int> p=<prime>");
      n = std::stoi(a.substr(2));
      p = std::stoi(b.substr(2));
      if (n < 1) throw InvalidArgument("matrix size must be positive");
      PrimeField check(p);
      continue;
    }
    if (pos == std::string::npos) {
      open = false;
      continue;
    }
    std::istringstream ls(line);
    int i, j, c;
    if (!(ls >> i >> j >> c)) throw InvalidArgument("bad algebra line: " + line);
    if (!open) {
      mats.emplace_back(n);
      open = true;
    }
    mats.back().set(i, j, ((c % p) + p) % p);
  }
  if (n < 0) throw InvalidArgument("algebra file missing header");
  return NilpotentAlgebra::from_spanning(n, p, mats);
}

void write_algebra(std::ostream& out, const NilpotentAlgebra& a) {
  out << "n=" << a.matrix_size() << " p=" << a.p() << "\n";
  bool first = true;
  for (const auto& b : a.basis()) {
    if (!first) out << "\n";
    first = false;
    for (auto [i, j, c] : b.entries()) out << i << " " << j << " " << c << "\n";
  }
}

}  // namespace supchar
