#include "supchar/supernormal.hpp"

#include <algorithm>
#include <set>

#include "supchar/error.hpp"

namespace supchar {

bool Subgroup::contains(Code c) const { return std::binary_search(members.begin(), members.end(), c); }

Subgroup make_subgroup(const AlgebraPtr& parent, std::vector<Code> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h{parent, std::move(members), nullptr};
  if (!h.contains(0)) throw InvalidArgument("subgroup must contain the identity");
  for (Code x : h.members) {
    FVec xv = parent->decode(x);
    if (!h.contains(parent->encode(parent->group_inv(xv)))) throw InvalidArgument("subset not closed under inverses");
    for (Code y : h.members)
      if (!h.contains(parent->encode(parent->group_mul(xv, parent->decode(y)))))
        throw InvalidArgument("subset not closed under multiplication");
  }
  return h;
}

Subgroup algebra_subgroup(const AlgebraPtr& parent, const AlgebraPtr& m) {
  Inclusion inc(m, parent);
  Subgroup h{parent, inc.image().elements(), m};
  return h;
}

AlgebraPtr generated_subalgebra(int n, int p, const std::vector<UTMatrix>& mats) {
  Subspace span(p, n * (n - 1) / 2);
  PrimeField f(p);
  auto add = [&](const UTMatrix& m) {
    FVec v = flatten(m);
    for (auto& x : v) x = f.norm(x);
    return span.add(v);
  };
  for (const auto& m : mats) add(m);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<UTMatrix> basis;
    for (const auto& r : span.rows()) basis.push_back(unflatten(n, r));
    for (const auto& a : basis)
      for (const auto& b : basis)
        if (add(a.times(b, p))) grew = true;
  }
  std::vector<UTMatrix> basis;
  for (const auto& r : span.rows()) basis.push_back(unflatten(n, r));
  return NilpotentAlgebra::from_spanning(n, p, basis);
}

bool is_supernormal(const Subgroup& h) {
  const auto& n = h.parent;
  Action act(n, n);
  const std::uint64_t order = checked_group_order(*n);
  for (Code x : h.members) {
    FVec xv = n->decode(x);
    for (std::uint64_t g = 0; g < order; ++g) {
      if (!h.contains(n->encode(act.act(static_cast<Code>(g), xv, Space::Algebra, Side::Left)))) return false;
      if (!h.contains(n->encode(act.act(static_cast<Code>(g), xv, Space::Algebra, Side::Right)))) return false;
    }
  }
  return true;
}

bool EquivalencePanel::agree() const {
  return std::all_of(conditions.begin(), conditions.end(), [&](bool b) { return b == conditions[0]; });
}

EquivalencePanel equivalence_panel(const AlgebraPtr& m, const AlgebraPtr& n) {
  if (!is_subalgebra(*m, *n)) throw InvalidArgument("m is not a subalgebra of n");
  EquivalencePanel panel;
  Subgroup h = algebra_subgroup(n, m);
  const std::uint64_t order = checked_group_order(*n);
  Action self(n, n);

  panel.conditions[0] = is_supernormal(h);

  bool normal = true, left_stable = true;
  for (std::uint64_t g = 0; g < order && (normal || left_stable); ++g) {
    FVec gv = n->decode(static_cast<Code>(g));
    FVec gi = n->group_inv(gv);
    for (Code x : h.members) {
      FVec xv = n->decode(x);
      if (!h.contains(n->encode(n->group_mul(n->group_mul(gv, xv), gi)))) normal = false;
      if (!h.contains(n->encode(self.act(static_cast<Code>(g), xv, Space::Algebra, Side::Left)))) left_stable = false;
    }
  }
  panel.normal = normal;
  panel.conditions[1] = normal && left_stable;

  panel.conditions[2] = is_ideal(*m, *n);

  Inclusion inc(m, n);
  Subspace mperp = perp(inc);
  Action sub_on_n(m, n);
  bool trivial = true;
  for (Code gamma : mperp.elements()) {
    for (std::uint64_t g = 0; g < m->order() && trivial; ++g) {
      if (sub_on_n.act(static_cast<Code>(g), gamma, Space::Dual, Side::Left) != gamma) trivial = false;
      if (sub_on_n.act(static_cast<Code>(g), gamma, Space::Dual, Side::Right) != gamma) trivial = false;
    }
  }
  panel.conditions[3] = trivial;

  bool stable = true;
  for (Code gamma : mperp.elements()) {
    FVec gv = n->decode(gamma);
    for (std::uint64_t g = 0; g < order && stable; ++g) {
      if (!mperp.contains(self.act(static_cast<Code>(g), gv, Space::Dual, Side::Left))) stable = false;
      if (!mperp.contains(self.act(static_cast<Code>(g), gv, Space::Dual, Side::Right))) stable = false;
    }
  }
  panel.conditions[4] = stable;
  return panel;
}

std::vector<std::size_t> kernel_intersection_representation(const Subgroup& h, const SupercharacterTheory& theory) {
  if (h.parent->dim() != theory.algebra()->dim() || h.parent->p() != theory.p())
    throw InvalidArgument("subgroup and supercharacter theory live in different groups");
  std::vector<std::size_t> chosen;
  std::vector<Code> meet;
  for (Code c = 0; c < theory.order(); ++c) meet.push_back(c);
  for (std::size_t chi = 0; chi < theory.supercharacters().size(); ++chi) {
    std::vector<Code> ker = theory.kernel(chi);
    if (!std::includes(ker.begin(), ker.end(), h.members.begin(), h.members.end())) continue;
    chosen.push_back(chi);
    std::vector<Code> next;
    std::set_intersection(meet.begin(), meet.end(), ker.begin(), ker.end(), std::back_inserter(next));
    meet = std::move(next);
  }
  if (meet != h.members) throw NotRepresentable("subgroup is not an intersection of supercharacter kernels");
  return chosen;
}

std::vector<Code> classifying_kernel(const LabeledSetPartition& lambda, const NilpotentAlgebra& full) {
  const int n = full.matrix_size();
  if (lambda.n() != n || full.dim() != n * (n - 1) / 2) throw InvalidArgument("expected the full algebra n_n(p)");
  const int p = full.p();
  Poset pp = Poset::full(n);
  auto pos = positions(n);
  std::vector<char> forced(pos.size(), 0);
  for (std::size_t t = 0; t < pos.size(); ++t)
    for (const auto& a : lambda.arcs())
      if (pp.internal_lt(pos[t], Pair{a.i, a.j})) forced[t] = 1;
  std::vector<Code> out;
  for (Code c = 0; c < full.order(); ++c) {
    FVec x = full.decode(c);
    bool ok = true;
    for (std::size_t t = 0; t < pos.size() && ok; ++t)
      if (forced[t] && x[t] != 0) ok = false;
    if (!ok) continue;
    long long v = 0;
    for (const auto& a : lambda.arcs()) v += static_cast<long long>(a.c) * x[static_cast<std::size_t>(pp.index_of({a.i, a.j}))];
    if (v % p == 0) out.push_back(c);
  }
  return out;
}

bool is_avoiding(const Subspace& u) {
  for (int i = 0; i < u.ambient_dim(); ++i) {
    FVec e(static_cast<std::size_t>(u.ambient_dim()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    if (u.contains(e)) return false;
  }
  return true;
}

std::vector<Subspace> enumerate_subspaces(int k, int p, bool avoiding) {
  if (k < 0) throw InvalidArgument("dimension must be non-negative");
  PrimeField f(p);
  BigInt total = 0;
  for (int i = 0; i <= k; ++i) total += q_binomial(k, i, CountingParameter(p));
  if (total > BigInt(element_bound())) throw BoundExceeded("subspace enumeration: too many subspaces");
  auto all = all_subspaces(k, p);
  if (!avoiding) return all;
  std::vector<Subspace> out;
  for (auto& u : all)
    if (is_avoiding(u)) out.push_back(std::move(u));
  return out;
}

BigInt tilde_count(int k, const CountingParameter& q) {
  if (k < 0) throw InvalidArgument("dimension must be non-negative");
  BigInt s = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt v = 0;
    for (int i = 0; i <= j; ++i) v += q_binomial(j, i, q);
    BigInt t = binomial(k, j) * v;
    s += ((k - j) % 2 == 0) ? t : BigInt(-t);
  }
  return s;
}

Subgroup build_G(const Antichain& s, const Subspace& u, const AlgebraPtr& full) {
  const int n = full->matrix_size();
  if (full->dim() != n * (n - 1) / 2) throw InvalidArgument("expected the full algebra n_n(p)");
  if (u.ambient_dim() != static_cast<int>(s.elements.size())) throw InvalidArgument("subspace dimension must match |S|");
  if (!is_avoiding(u)) throw InvalidArgument("subspace contains a standard basis vector");
  Poset pp = Poset::full(n);
  for (std::size_t a = 0; a < s.elements.size(); ++a)
    for (std::size_t b = 0; b < s.elements.size(); ++b)
      if (pp.internal_lt(s.elements[a], s.elements[b])) throw InvalidArgument("S is not an antichain");
  auto pos = positions(n);
  std::vector<char> forced(pos.size(), 0);
  for (std::size_t t = 0; t < pos.size(); ++t)
    for (const auto& e : s.elements)
      if (pp.internal_lt(pos[t], e)) forced[t] = 1;
  std::vector<int> phi;
  for (const auto& e : s.elements) phi.push_back(pp.index_of(e));

  std::vector<Code> members;
  std::vector<UTMatrix> span;
  for (Code c = 0; c < full->order(); ++c) {
    FVec x = full->decode(c);
    bool ok = true;
    for (std::size_t t = 0; t < pos.size() && ok; ++t)
      if (forced[t] && x[t] != 0) ok = false;
    if (!ok) continue;
    FVec y;
    for (int i : phi) y.push_back(x[static_cast<std::size_t>(i)]);
    if (!u.contains(y)) continue;
    members.push_back(c);
    span.push_back(full->matrix(x));
  }
  Subgroup g{full, members, NilpotentAlgebra::from_spanning(n, full->p(), span)};
  SUPCHAR_CHECK(g.algebra->order() == g.members.size(), "G_n(S,U) - 1 is a subspace");
  SUPCHAR_CHECK(is_supernormal(g), "G_n(S,U) is supernormal");
  return g;
}

std::vector<SupernormalEntry> enumerate_supernormal(int n, int p) {
  PrimeField f(p);
  auto full = NilpotentAlgebra::full(n, p);
  checked_group_order(*full);
  std::vector<SupernormalEntry> out;
  for (const auto& s : antichains(Poset::full(n))) {
    for (auto& u : enumerate_subspaces(static_cast<int>(s.elements.size()), p, true)) {
      Subgroup g = build_G(s, u, full);
      out.push_back(SupernormalEntry{SupernormalDescriptor{s, std::move(u)}, std::move(g)});
    }
  }
  std::set<std::vector<Code>> distinct;
  for (const auto& e : out) distinct.insert(e.group.members);
  SUPCHAR_CHECK(distinct.size() == out.size(), "(S,U) -> G_n(S,U) is injective");
  SUPCHAR_CHECK(BigInt(out.size()) == count_supernormal(n, CountingParameter(p)), "enumeration matches the count");
  return out;
}

BigInt count_supernormal(int n, const CountingParameter& q) {
  if (n < 1) throw InvalidArgument("n must be positive");
  BigInt s = 0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i) {
        BigInt t = binomial(n, k + 1) * binomial(n, k) * binomial(k, j) * q_binomial(j, i, q);
        s += ((k - j) % 2 == 0) ? t : BigInt(-t);
      }
  SUPCHAR_CHECK(s % n == 0, "supernormal count is an integer");
  s /= n;
  BigInt check = 0;
  for (int k = 0; k < n; ++k) check += narayana(n, k + 1) * tilde_count(k, q);
  SUPCHAR_CHECK(s == check, "two evaluations of the supernormal count agree");
  return s;
}

std::vector<Subspace> ideal_oracle(const NilpotentAlgebra& n) {
  const int d = n.dim();
  std::vector<Subspace> out;
  for (auto& u : enumerate_subspaces(d, n.p(), false)) {
    bool ideal = true;
    for (int b = 0; b < d && ideal; ++b) {
      FVec e(static_cast<std::size_t>(d), 0);
      e[static_cast<std::size_t>(b)] = 1;
      for (const auto& r : u.rows())
        if (!u.contains(n.mul(e, r)) || !u.contains(n.mul(r, e))) {
          ideal = false;
          break;
        }
    }
    if (ideal) out.push_back(std::move(u));
  }
  return out;
}

Subgroup product_subgroup(const Subgroup& a, const Subgroup& b) {
  if (a.parent->dim() != b.parent->dim() || a.parent->p() != b.parent->p())
    throw InvalidArgument("subgroups of different groups");
  if (!is_supernormal(a) || !is_supernormal(b)) throw InvalidArgument("inputs must be supernormal");
  const auto& n = a.parent;
  std::vector<Code> prod;
  for (Code x : a.members)
    for (Code y : b.members) prod.push_back(n->encode(n->group_mul(n->decode(x), n->decode(y))));
  Subgroup h = make_subgroup(n, std::move(prod));
  SUPCHAR_CHECK(is_supernormal(h), "product of supernormal subgroups is supernormal");
  std::vector<Code> sum_codes;
  {
    std::vector<FVec> gens;
    for (Code x : a.members) gens.push_back(n->decode(x));
    for (Code y : b.members) gens.push_back(n->decode(y));
    sum_codes = Subspace::span(n->p(), n->dim(), gens).elements();
  }
  SUPCHAR_CHECK(sum_codes == h.members, "HH' = 1 + (h + h')");
  std::vector<UTMatrix> mats;
  for (Code c : h.members) mats.push_back(n->matrix(n->decode(c)));
  h.algebra = NilpotentAlgebra::from_spanning(n->matrix_size(), n->p(), mats);
  return h;
}

std::size_t lift_supercharacter(const Quotient& q, const SupercharacterTheory& quotient_theory, std::size_t chi,
                                const SupercharacterTheory& n_theory) {
  const auto& n = n_theory.algebra();
  const int p = n->p();
  FVec lbar = quotient_theory.algebra()->decode(quotient_theory.supercharacters().at(chi).rep);
  FVec lifted = q.projection.transpose().apply(lbar, p);
  std::size_t idx = n_theory.character_of(n->encode(lifted));
  SUPCHAR_CHECK(n_theory.supercharacters()[idx].degree == quotient_theory.supercharacters()[chi].degree,
                "lift preserves degree");
  for (Code x = 0; x < n->order(); ++x) {
    Code xbar = quotient_theory.algebra()->encode(q.project(n->decode(x), p));
    SUPCHAR_CHECK(n_theory.value_at(n->encode(lifted), x) == quotient_theory.value(chi, xbar),
                  "lift agrees with the quotient character");
  }
  return idx;
}

bool lift_bijection_check(const AlgebraPtr& n, const AlgebraPtr& m) {
  Quotient q = quotient(n, m);
  SupercharacterTheory qt(q.algebra);
  SupercharacterTheory nt(n);
  std::set<std::size_t> lifts;
  for (std::size_t chi = 0; chi < qt.supercharacters().size(); ++chi) lifts.insert(lift_supercharacter(q, qt, chi, nt));
  if (lifts.size() != qt.supercharacters().size()) return false;
  Subgroup h = algebra_subgroup(n, m);
  std::set<std::size_t> above;
  for (std::size_t chi = 0; chi < nt.supercharacters().size(); ++chi) {
    auto ker = nt.kernel(chi);
    if (std::includes(ker.begin(), ker.end(), h.members.begin(), h.members.end())) above.insert(chi);
  }
  return lifts == above;
}

}  // namespace supchar
