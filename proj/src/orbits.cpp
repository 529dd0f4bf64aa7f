#include "supchar/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "supchar/error.hpp"

namespace supchar {

namespace {

constexpr std::uint64_t kCacheEntries = 1ull << 22;

std::size_t sidx(Side s) { return s == Side::Left ? 0 : 1; }
std::size_t spidx(Space s) { return s == Space::Algebra ? 0 : 1; }

}  // namespace

std::uint64_t checked_group_order(const NilpotentAlgebra& n) {
  std::uint64_t order = n.order();
  require_within_bound(order, "group enumeration");
  return order;
}

Action::Action(AlgebraPtr acting, AlgebraPtr target) : acting_(std::move(acting)), target_(std::move(target)) {
  if (acting_->p() != target_->p() || acting_->matrix_size() != target_->matrix_size())
    throw InvalidArgument("acting and target algebras must share matrix size and prime");
  const int p = target_->p();
  const int dt = target_->dim();
  for (const auto& b : acting_->basis()) {
    FMat l(dt, dt), r(dt, dt);
    for (int j = 0; j < dt; ++j) {
      const UTMatrix& t = target_->basis()[static_cast<std::size_t>(j)];
      auto lc = target_->coords(b.times(t, p));
      auto rc = target_->coords(t.times(b, p));
      if (!lc || !rc) throw InvalidArgument("target is not stable under multiplication by the acting algebra (result escapes subalgebra)");
      for (int i = 0; i < dt; ++i) {
        l.at(i, j) = (*lc)[static_cast<std::size_t>(i)];
        r.at(i, j) = (*rc)[static_cast<std::size_t>(i)];
      }
    }
    left_.push_back(std::move(l));
    right_.push_back(std::move(r));
  }
  std::uint64_t order = acting_->order();
  if (order * static_cast<std::uint64_t>(dt * dt + 1) * 4 <= kCacheEntries) {
    for (auto& sp : cache_)
      for (auto& c : sp) c.reserve(static_cast<std::size_t>(order));
    for (std::uint64_t g = 0; g < order; ++g) {
      FVec x = acting_->decode(static_cast<Code>(g));
      FVec xi = acting_->group_inv(x);
      cache_[0][0].push_back(raw(x, Side::Left));
      cache_[0][1].push_back(raw(x, Side::Right));
      cache_[1][0].push_back(raw(xi, Side::Left).transpose());
      cache_[1][1].push_back(raw(xi, Side::Right).transpose());
    }
  }
}

Action make_action(const AlgebraPtr& acting, const AlgebraPtr& target) { return Action(acting, target); }

FMat Action::raw(const FVec& g, Side side) const {
  const int p = target_->p();
  FMat m = FMat::identity(target_->dim());
  const auto& gens = side == Side::Left ? left_ : right_;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (g[i] != 0) m = mat_add(m, mat_scale(gens[i], g[i], p), p);
  return m;
}

FMat Action::matrix(Code g, Space space, Side side) const {
  if (g >= acting_->order()) throw InvalidArgument("group element code out of range");
  const auto& c = cache_[spidx(space)][sidx(side)];
  if (!c.empty()) return c[g];
  FVec x = acting_->decode(g);
  if (space == Space::Algebra) return raw(x, side);
  return raw(acting_->group_inv(x), side).transpose();
}

FVec Action::act(Code g, const FVec& v, Space space, Side side) const {
  const auto& c = cache_[spidx(space)][sidx(side)];
  if (!c.empty()) return c[g].apply(v, target_->p());
  return matrix(g, space, side).apply(v, target_->p());
}

Code Action::act(Code g, Code v, Space space, Side side) const {
  return target_->encode(act(g, target_->decode(v), space, side));
}

std::vector<Code> one_sided_orbit(const Action& act, Space space, Side side, Code v) {
  const std::uint64_t order = checked_group_order(*act.acting());
  FVec x = act.target()->decode(v);
  std::vector<Code> out;
  out.reserve(static_cast<std::size_t>(order));
  for (std::uint64_t g = 0; g < order; ++g) out.push_back(act.target()->encode(act.act(static_cast<Code>(g), x, space, side)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Orbit two_sided_orbit(const Action& act, Space space, Code v) {
  Orbit o;
  o.left = one_sided_orbit(act, space, Side::Left, v);
  o.right = one_sided_orbit(act, space, Side::Right, v);
  std::unordered_set<Code> seen(o.right.begin(), o.right.end());
  std::vector<Code> members(o.right.begin(), o.right.end());
  for (Code u : o.left) {
    if (seen.count(u)) continue;
    for (Code w : one_sided_orbit(act, space, Side::Right, u))
      if (seen.insert(w).second) members.push_back(w);
  }
  std::sort(members.begin(), members.end());
  o.members = std::move(members);
  o.rep = o.members.front();
  std::vector<Code> both;
  std::set_intersection(o.left.begin(), o.left.end(), o.right.begin(), o.right.end(), std::back_inserter(both));
  o.intersection = both.size();
  SUPCHAR_CHECK(o.members.size() * o.intersection == o.left.size() * o.right.size(),
                "|UxU| = |Ux||xU|/|Ux ∩ xU|");
  return o;
}

std::vector<Orbit> orbit_partition(const Action& act, Space space) {
  const std::uint64_t size = act.target_size();
  require_within_bound(size, "orbit partition");
  std::vector<char> visited(static_cast<std::size_t>(size), 0);
  std::vector<Orbit> out;
  for (std::uint64_t c = 0; c < size; ++c) {
    if (visited[c]) continue;
    Orbit o = two_sided_orbit(act, space, static_cast<Code>(c));
    SUPCHAR_CHECK(o.rep == c, "orbit representative is the least member");
    for (Code m : o.members) {
      SUPCHAR_CHECK(!visited[m], "orbits are disjoint");
      visited[m] = 1;
    }
    out.push_back(std::move(o));
  }
  return out;
}

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(int p, std::size_t size) : p_(p), num_(size, Cyclotomic(p)), den_(1) {}

ClassFunction::ClassFunction(std::vector<Cyclotomic> values, std::int64_t denominator)
    : p_(values.empty() ? 2 : values.front().prime()), num_(std::move(values)), den_(denominator) {
  if (den_ == 0) throw InvalidArgument("zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  reduce();
}

void ClassFunction::reduce() {
  std::int64_t g = den_;
  for (const auto& v : num_)
    for (auto c : v.coeffs()) g = std::gcd(g, c < 0 ? -c : c);
  if (g > 1) {
    for (auto& v : num_) v = v.divided(g);
    den_ /= g;
  }
}

Cyclotomic ClassFunction::integral_value(std::size_t i) const { return num_[i].divided(den_); }

bool ClassFunction::value_is_integral(std::size_t i) const {
  for (auto c : num_[i].coeffs())
    if (c % den_ != 0) return false;
  return true;
}

std::vector<Rational> ClassFunction::rational_coeffs(std::size_t i) const {
  std::vector<Rational> out;
  for (auto c : num_[i].coeffs()) out.emplace_back(BigInt(c), BigInt(den_));
  return out;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (size() != o.size() || p_ != o.p_) throw InvalidArgument("class functions on different groups");
  std::vector<Cyclotomic> v;
  v.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) v.push_back(num_[i].scaled(o.den_) + o.num_[i].scaled(den_));
  return ClassFunction(std::move(v), checked_mul(den_, o.den_));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const { return *this + o.scaled(Rational(-1)); }

ClassFunction ClassFunction::scaled(const Rational& r) const {
  std::int64_t a = to_int64(boost::multiprecision::numerator(r));
  std::int64_t b = to_int64(boost::multiprecision::denominator(r));
  std::vector<Cyclotomic> v;
  v.reserve(size());
  for (const auto& x : num_) v.push_back(x.scaled(a));
  if (v.empty()) return *this;
  return ClassFunction(std::move(v), checked_mul(den_, b));
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  for (const auto& x : num_) v.push_back(x.conj());
  if (v.empty()) return *this;
  return ClassFunction(std::move(v), den_);
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (size() != o.size() || p_ != o.p_) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (num_[i].scaled(o.den_) != o.num_[i].scaled(den_)) return false;
  return true;
}

bool ClassFunction::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

ClassFunction ClassFunction::restricted(const std::vector<Code>& codes) const {
  std::vector<Cyclotomic> v;
  v.reserve(codes.size());
  for (Code c : codes) v.push_back(num_.at(c));
  if (v.empty()) return ClassFunction(p_, 0);
  return ClassFunction(std::move(v), den_);
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size() || a.p() != b.p()) throw InvalidArgument("inner product of functions on different groups");
  Cyclotomic s(a.p());
  for (std::size_t i = 0; i < a.size(); ++i) s += a.numerator(i) * b.numerator(i).conj();
  if (!s.is_integer()) throw CheckFailed("inner product has a non-rational part: " + s.to_string());
  BigInt den = BigInt(static_cast<std::int64_t>(a.size())) * a.denominator() * b.denominator();
  return Rational(BigInt(s.integer_value()), den);
}

// ---------------------------------------------------------------------------

Cyclotomic orbit_character_value(const NilpotentAlgebra& n, const std::vector<Code>& orbit, std::uint64_t left_size,
                                 const FVec& x) {
  const int p = n.p();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
  for (Code mu : orbit) ++counts[static_cast<std::size_t>(dot(n.decode(mu), x, p))];
  Cyclotomic sum = Cyclotomic::from_power_counts(p, counts);
  return sum.scaled(static_cast<std::int64_t>(left_size)).divided(static_cast<std::int64_t>(orbit.size()));
}

SupercharacterTheory::SupercharacterTheory(AlgebraPtr n) : n_(std::move(n)), act_(n_, n_) {
  checked_group_order(*n_);
  for (auto& o : orbit_partition(act_, Space::Algebra)) classes_.push_back(Superclass{o.rep, std::move(o.members)});
  for (auto& o : orbit_partition(act_, Space::Dual)) {
    Supercharacter c;
    c.rep = o.rep;
    c.degree = o.left.size();
    SUPCHAR_CHECK(o.left.size() == o.right.size(), "|U lambda| = |lambda U|");
    c.intersection = o.intersection;
    c.left_orbit = std::move(o.left);
    c.right_orbit = std::move(o.right);
    c.members = std::move(o.members);
    chars_.push_back(std::move(c));
  }
  SUPCHAR_CHECK(classes_.size() == chars_.size(), "equal numbers of orbits on n and n*");
  class_index_.assign(static_cast<std::size_t>(n_->order()), 0);
  char_index_.assign(static_cast<std::size_t>(n_->order()), 0);
  for (std::size_t k = 0; k < classes_.size(); ++k)
    for (Code m : classes_[k].members) class_index_[m] = static_cast<std::uint32_t>(k);
  for (std::size_t k = 0; k < chars_.size(); ++k)
    for (Code m : chars_[k].members) char_index_[m] = static_cast<std::uint32_t>(k);
  SUPCHAR_CHECK(classes_.front().members.size() == 1 && classes_.front().rep == 0, "{1} is a superclass");
}

Cyclotomic SupercharacterTheory::value_at(Code lambda, Code x) const {
  const auto& c = chars_[char_index_.at(lambda)];
  return orbit_character_value(*n_, c.members, c.degree, n_->decode(x));
}

ClassFunction SupercharacterTheory::character(std::size_t chi) const {
  const auto& c = chars_.at(chi);
  const std::uint64_t order = n_->order();
  std::vector<Cyclotomic> vals;
  vals.reserve(static_cast<std::size_t>(order));
  std::vector<FVec> decoded;
  decoded.reserve(c.members.size());
  for (Code mu : c.members) decoded.push_back(n_->decode(mu));
  const int p = n_->p();
  for (std::uint64_t g = 0; g < order; ++g) {
    FVec x = n_->decode(static_cast<Code>(g));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
    for (const auto& mu : decoded) ++counts[static_cast<std::size_t>(dot(mu, x, p))];
    vals.push_back(Cyclotomic::from_power_counts(p, counts)
                       .scaled(static_cast<std::int64_t>(c.degree))
                       .divided(static_cast<std::int64_t>(c.members.size())));
  }
  for (const auto& k : classes_)
    for (Code m : k.members) SUPCHAR_CHECK(vals[m] == vals[k.rep], "supercharacter constant on superclasses");
  return ClassFunction(std::move(vals));
}

std::uint64_t SupercharacterTheory::orbit_inner_product(std::size_t a, std::size_t b) const {
  return a == b ? chars_.at(a).intersection : 0;
}

std::vector<std::vector<Cyclotomic>> SupercharacterTheory::table() const {
  std::vector<std::vector<Cyclotomic>> t;
  for (std::size_t chi = 0; chi < chars_.size(); ++chi) {
    std::vector<Cyclotomic> row;
    for (const auto& k : classes_) row.push_back(value(chi, k.rep));
    t.push_back(std::move(row));
  }
  return t;
}

std::vector<Code> SupercharacterTheory::kernel(std::size_t chi) const {
  ClassFunction f = character(chi);
  std::vector<Code> out;
  for (std::size_t g = 0; g < f.size(); ++g)
    if (f.numerator(g) == f.numerator(0)) out.push_back(static_cast<Code>(g));
  // union of superclasses
  for (const auto& k : classes_) {
    bool in = std::binary_search(out.begin(), out.end(), k.rep);
    for (Code m : k.members) SUPCHAR_CHECK(std::binary_search(out.begin(), out.end(), m) == in, "kernel is a union of superclasses");
  }
  return out;
}

bool regular_decomposition_check(const SupercharacterTheory& theory) {
  const std::uint64_t order = theory.order();
  const int p = theory.p();
  std::vector<Cyclotomic> acc(static_cast<std::size_t>(order), Cyclotomic(p));
  for (std::size_t chi = 0; chi < theory.supercharacters().size(); ++chi) {
    const auto& c = theory.supercharacters()[chi];
    SUPCHAR_CHECK(c.members.size() % c.degree == 0, "regular coefficient is an integer");
    std::int64_t coeff = static_cast<std::int64_t>(c.members.size() / c.degree);
    ClassFunction f = theory.character(chi);
    for (std::size_t g = 0; g < f.size(); ++g) acc[g] += f.integral_value(g).scaled(coeff);
  }
  for (std::size_t g = 0; g < acc.size(); ++g) {
    Cyclotomic expect = Cyclotomic::integer(p, g == 0 ? static_cast<std::int64_t>(order) : 0);
    if (acc[g] != expect) return false;
  }
  return true;
}

}  // namespace supchar
