#include "supchar/littlegroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "supchar/error.hpp"
#include "supchar/resind.hpp"

namespace supchar {

namespace {

AlgebraPtr subalgebra_of(const AlgebraPtr& parent, const Subspace& coords) {
  std::vector<UTMatrix> mats;
  for (const auto& v : coords.rows()) mats.push_back(parent->matrix(v));
  return NilpotentAlgebra::from_spanning(parent->matrix_size(), parent->p(), mats);
}

int evaluate(const NilpotentAlgebra& n, const FVec& lambda, const UTMatrix& m) {
  auto c = n.coords(m);
  SUPCHAR_CHECK(c.has_value(), "product stays in n");
  return dot(lambda, *c, n.p());
}

// (1 + g) x (1 + h)
UTMatrix sandwich(const UTMatrix& g, const UTMatrix& x, const UTMatrix& h, int p) {
  UTMatrix gx = g.times(x, p);
  return x.plus(gx, p).plus(x.times(h, p), p).plus(gx.times(h, p), p);
}

std::vector<Code> as_codes(const NilpotentAlgebra& n, const Subspace& u) {
  std::vector<Code> out;
  for (Code c : u.elements()) out.push_back(n.encode(decode(c, u.ambient_dim(), u.p())));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Code> shifted(const NilpotentAlgebra& n, const std::vector<Code>& orbit, const FVec& alpha) {
  std::vector<Code> out;
  for (Code c : orbit) out.push_back(n.encode(vec_sub(n.decode(c), alpha, n.p())));
  std::sort(out.begin(), out.end());
  return out;
}

Subspace annihilator_in(const AlgebraPtr& sub, const AlgebraPtr& n) { return perp(Inclusion(sub, n)); }

int f_order(int n, int i, int j) { return i + (n - 1 - j + i) * (n - j + i) / 2; }

}  // namespace

std::pair<FVec, FVec> SemidirectDecomposition::split(const FVec& x) const {
  Inclusion hi(h, n), ai(a, n);
  FMat b(n->dim(), n->dim());
  for (int c = 0; c < h->dim(); ++c)
    for (int r = 0; r < n->dim(); ++r) b.at(r, c) = hi.embedding().at(r, c);
  for (int c = 0; c < a->dim(); ++c)
    for (int r = 0; r < n->dim(); ++r) b.at(r, h->dim() + c) = ai.embedding().at(r, c);
  auto sol = solve(b, x, n->p());
  SUPCHAR_CHECK(sol.has_value(), "n = h + a");
  FVec hc(sol->begin(), sol->begin() + h->dim());
  FVec ac(sol->begin() + h->dim(), sol->end());
  return {hc, ac};
}

FVec SemidirectDecomposition::extend(const FVec& tau) const {
  if (static_cast<int>(tau.size()) != a->dim()) throw InvalidArgument("functional on a has the wrong length");
  Inclusion hi(h, n), ai(a, n);
  FMat rows(n->dim(), n->dim());
  FVec rhs(static_cast<std::size_t>(n->dim()), 0);
  for (int i = 0; i < h->dim(); ++i)
    for (int c = 0; c < n->dim(); ++c) rows.at(i, c) = hi.embedding().at(c, i);
  for (int j = 0; j < a->dim(); ++j) {
    for (int c = 0; c < n->dim(); ++c) rows.at(h->dim() + j, c) = ai.embedding().at(c, j);
    rhs[static_cast<std::size_t>(h->dim() + j)] = tau[static_cast<std::size_t>(j)];
  }
  auto sol = solve(rows, rhs, n->p());
  SUPCHAR_CHECK(sol.has_value(), "extension to h-perp exists");
  return *sol;
}

SemidirectDecomposition validate_decomposition(const AlgebraPtr& n, const AlgebraPtr& h, const AlgebraPtr& a) {
  if (!is_subalgebra(*h, *n) || !is_subalgebra(*a, *n)) throw InvalidArgument("h and a must be subalgebras of n");
  Inclusion hi(h, n), ai(a, n);
  if (h->dim() + a->dim() != n->dim() || hi.image().intersect(ai.image()).dimension() != 0)
    throw NotDirectSum("n is not the direct sum of h and a");
  for (const auto& x : a->basis())
    for (const auto& y : a->basis())
      if (!x.times(y, n->p()).is_zero()) throw SquareNonzero("a^2 is not zero");
  if (!is_ideal(*a, *n)) throw NotIdeal("a is not a two-sided ideal of n");
  return SemidirectDecomposition{n, h, a};
}

StabilizerData stabilizers(const SemidirectDecomposition& d, const FVec& alpha) {
  const auto& n = d.n;
  const auto& h = d.h;
  const auto& a = d.a;
  const int p = n->p();
  if (static_cast<int>(alpha.size()) != n->dim()) throw InvalidArgument("functional has the wrong length");
  Inclusion hi(h, n);
  if (!is_zero(hi.restrict_functional(alpha))) throw InvalidArgument("alpha must vanish on h");

  FMat left(a->dim(), h->dim()), right(a->dim(), h->dim());
  for (int i = 0; i < h->dim(); ++i)
    for (int j = 0; j < a->dim(); ++j) {
      const auto& hb = h->basis()[static_cast<std::size_t>(i)];
      const auto& ab = a->basis()[static_cast<std::size_t>(j)];
      left.at(j, i) = evaluate(*n, alpha, hb.times(ab, p));
      right.at(j, i) = evaluate(*n, alpha, ab.times(hb, p));
    }
  Subspace lc = kernel(left, p), rc = kernel(right, p);
  Subspace sc = lc.intersect(rc);

  StabilizerData st;
  st.alpha = alpha;
  st.l = subalgebra_of(h, lc);
  st.r = subalgebra_of(h, rc);
  st.s = subalgebra_of(h, sc);

  const std::uint64_t hsize = checked_group_order(*h);
  require_within_bound(hsize * hsize, "stabilizer pair enumeration");
  Action h_on_n(h, n);
  const Code ac = n->encode(alpha);
  std::vector<Code> left_img(static_cast<std::size_t>(hsize)), right_img(static_cast<std::size_t>(hsize));
  for (Code g = 0; g < hsize; ++g) {
    left_img[g] = h_on_n.act(g, ac, Space::Dual, Side::Left);
    right_img[g] = h_on_n.act(g, ac, Space::Dual, Side::Right);
    const FVec gv = h->decode(g);
    SUPCHAR_CHECK((left_img[g] == ac) == lc.contains(gv), "l_alpha is the left stabilizer");
    SUPCHAR_CHECK((right_img[g] == ac) == rc.contains(gv), "r_alpha is the right stabilizer");
  }
  // g alpha h^-1 = alpha exactly when g alpha = alpha h
  std::multimap<Code, Code> by_right;
  for (Code x = 0; x < hsize; ++x) by_right.emplace(right_img[x], x);
  for (Code g = 0; g < hsize; ++g) {
    auto [lo, hi_it] = by_right.equal_range(left_img[g]);
    for (auto it = lo; it != hi_it; ++it) st.t.emplace_back(g, it->second);
  }

  Action a_on_n(a, n);
  Subspace aperp = annihilator_in(a, n);
  auto lhs_left = shifted(*n, one_sided_orbit(a_on_n, Space::Dual, Side::Left, ac), alpha);
  auto lhs_right = shifted(*n, one_sided_orbit(a_on_n, Space::Dual, Side::Right, ac), alpha);
  Orbit both = two_sided_orbit(a_on_n, Space::Dual, ac);
  auto lhs_both = shifted(*n, both.members, alpha);
  SUPCHAR_CHECK(lhs_left == as_codes(*n, annihilator_in(st.r, n).intersect(aperp)), "U_a alpha - alpha = r-perp in a-perp");
  SUPCHAR_CHECK(lhs_right == as_codes(*n, annihilator_in(st.l, n).intersect(aperp)), "alpha U_a - alpha = l-perp in a-perp");
  SUPCHAR_CHECK(lhs_both == as_codes(*n, annihilator_in(st.s, n).intersect(aperp)), "U_a alpha U_a - alpha = s-perp in a-perp");
  st.a_orbit_size = both.size();
  SUPCHAR_CHECK(st.a_orbit_size * st.s->order() == hsize, "|U_a alpha U_a| |S_alpha| = |U_h|");

  for (const auto& [g, x] : st.t) {
    UTMatrix gm = h->matrix(h->decode(g));
    UTMatrix xinv = h->matrix(h->group_inv(h->decode(x)));
    for (const auto& sb : st.s->basis())
      SUPCHAR_CHECK(st.s->contains(sandwich(gm, sb, xinv, p)), "T_alpha preserves s_alpha");
  }
  return st;
}

std::vector<Orbit> tau_orbits(const SemidirectDecomposition& d) {
  require_within_bound(d.a->order(), "functionals on a");
  return orbit_partition(Action(d.h, d.a), Space::Dual);
}

std::vector<Code> orbit_representatives(const SemidirectDecomposition& d) {
  std::vector<Code> out;
  for (const auto& o : tau_orbits(d)) out.push_back(o.rep);
  return out;
}

std::vector<Code> t_orbit_canonical(const SemidirectDecomposition& d, const StabilizerData& st) {
  const auto& h = d.h;
  const auto& s = st.s;
  const int p = s->p();
  const int ds = s->dim();
  // eta -> (g,h).eta, eta'(X_i) = eta(g^-1 X_i h)
  std::vector<FMat> mats;
  mats.reserve(st.t.size());
  for (const auto& [g, x] : st.t) {
    UTMatrix ginv = h->matrix(h->group_inv(h->decode(g)));
    UTMatrix xm = h->matrix(h->decode(x));
    FMat m(ds, ds);
    for (int i = 0; i < ds; ++i) {
      auto c = s->coords(sandwich(ginv, s->basis()[static_cast<std::size_t>(i)], xm, p));
      SUPCHAR_CHECK(c.has_value(), "T acts on s");
      for (int j = 0; j < ds; ++j) m.at(i, j) = (*c)[static_cast<std::size_t>(j)];
    }
    mats.push_back(std::move(m));
  }
  const std::uint64_t size = s->order();
  constexpr Code unset = ~Code{0};
  std::vector<Code> canon(static_cast<std::size_t>(size), unset);
  for (Code e = 0; e < size; ++e) {
    if (canon[e] != unset) continue;
    const FVec eta = s->decode(e);
    std::set<Code> orbit;
    for (const auto& m : mats) orbit.insert(s->encode(m.apply(eta, p)));
    SUPCHAR_CHECK(orbit.count(e) == 1, "the identity pair lies in T");
    for (Code c : orbit) {
      SUPCHAR_CHECK(canon[c] == unset, "T-orbits are disjoint");
      canon[c] = *orbit.begin();
    }
  }
  return canon;
}

LittleGroupsClassification classify(const SemidirectDecomposition& d, bool verify_inverse) {
  const auto& n = d.n;
  const auto& a = d.a;
  const int p = n->p();
  SupercharacterTheory theory(n);
  Inclusion a_in(a, n), h_in(d.h, n);

  LittleGroupsClassification out;
  out.orbits = tau_orbits(d);
  std::vector<std::size_t> orbit_of(static_cast<std::size_t>(a->order()));
  for (std::size_t o = 0; o < out.orbits.size(); ++o)
    for (Code c : out.orbits[o].members) orbit_of[c] = o;

  std::vector<std::vector<Code>> canon;
  std::vector<std::map<Code, std::size_t>> t_orbit_size;
  std::vector<Inclusion> s_in;
  for (const auto& o : out.orbits) {
    out.stabilizers.push_back(stabilizers(d, d.extend(a->decode(o.rep))));
    const auto& st = out.stabilizers.back();
    canon.push_back(t_orbit_canonical(d, st));
    std::map<Code, std::size_t> sizes;
    for (Code c : canon.back()) ++sizes[c];
    out.label_count += sizes.size();
    t_orbit_size.push_back(std::move(sizes));
    s_in.emplace_back(st.s, n);
  }

  // Forward map. Every member of a two-sided orbit restricts into one
  // U_h-orbit on a*; among members over the chosen tau, the T-class of the
  // restriction to s_tau does not depend on the member.
  const auto& chars = theory.supercharacters();
  std::set<LittleGroupsLabel> seen;
  for (std::size_t chi = 0; chi < chars.size(); ++chi) {
    std::optional<std::size_t> orbit;
    std::optional<Code> psi;
    for (Code g : chars[chi].members) {
      const FVec gv = n->decode(g);
      const Code tau = a->encode(a_in.restrict_functional(gv));
      const std::size_t o = orbit_of[tau];
      SUPCHAR_CHECK(!orbit || *orbit == o, "one supercharacter meets one U_h-orbit on a*");
      orbit = o;
      if (tau != out.orbits[o].rep) continue;
      const auto& s = out.stabilizers[o].s;
      const Code c = canon[o][s->encode(s_in[o].restrict_functional(gv))];
      SUPCHAR_CHECK(!psi || *psi == c, "labels agree across the two-sided orbit");
      psi = c;
    }
    SUPCHAR_CHECK(orbit && psi, "some member restricts to the chosen representative");
    LittleGroupsLabel label{out.orbits[*orbit].rep, *psi};
    SUPCHAR_CHECK(seen.insert(label).second, "distinct supercharacters get distinct labels");
    out.entries.push_back(LittleGroupsEntry{label, chi});

    const std::uint64_t expect = out.orbits[*orbit].size() * out.stabilizers[*orbit].a_orbit_size *
                                 t_orbit_size[*orbit].at(*psi);
    SUPCHAR_CHECK(chars[chi].members.size() == expect, "|U lambda U| = |U_h alpha U_h| |U_a alpha U_a| |T eta|");
  }
  SUPCHAR_CHECK(out.label_count == chars.size(), "labels and supercharacters are equinumerous");
  std::sort(out.entries.begin(), out.entries.end(),
            [](const LittleGroupsEntry& x, const LittleGroupsEntry& y) { return x.label < y.label; });

  // alpha + eta and alpha + eta' give one supercharacter exactly when
  // their restrictions to s_alpha share a T-orbit.
  Subspace aperp = annihilator_in(a, n);
  for (std::size_t o = 0; o < out.orbits.size(); ++o) {
    const auto& st = out.stabilizers[o];
    std::map<Code, std::size_t> class_to_chi;
    std::map<std::size_t, Code> chi_to_class;
    for (Code e : aperp.elements()) {
      const FVec lambda = vec_add(st.alpha, decode(e, n->dim(), p), p);
      const std::size_t chi = theory.character_of(n->encode(lambda));
      const Code c = canon[o][st.s->encode(s_in[o].restrict_functional(lambda))];
      auto [it1, new1] = class_to_chi.emplace(c, chi);
      auto [it2, new2] = chi_to_class.emplace(chi, c);
      SUPCHAR_CHECK(it1->second == chi && it2->second == c, "T-orbits on s* match supercharacters over alpha");
    }
  }

  if (!verify_inverse) return out;

  for (const auto& entry : out.entries) {
    const std::size_t o = orbit_of[entry.label.tau];
    const auto& st = out.stabilizers[o];
    const auto& s = st.s;
    const FVec tau = a->decode(entry.label.tau);
    SupercharacterTheory s_theory(s);

    std::set<std::size_t> thetas;
    for (Code c = 0; c < s->order(); ++c)
      if (canon[o][c] == entry.label.psi) thetas.insert(s_theory.character_of(c));

    // U_{a+s}, listed in n-coordinates, with each element split as (1+A)(1+S)
    std::vector<UTMatrix> gens(a->basis());
    gens.insert(gens.end(), s->basis().begin(), s->basis().end());
    AlgebraPtr as = NilpotentAlgebra::from_spanning(n->matrix_size(), p, gens);
    Inclusion as_in(as, n);
    std::vector<std::pair<Code, std::pair<Code, int>>> pts;  // n-code, (s-code, tau(A))
    for (Code c = 0; c < as->order(); ++c) {
      const FVec x = as_in.embed(as->decode(c));
      auto [hc, acoords] = d.split(x);
      const FVec sn = h_in.embed(hc);
      auto sc = s_in[o].pull_back(sn);
      SUPCHAR_CHECK(sc.has_value(), "h-part of a + s lies in s");
      const FVec ap = a_in.embed(acoords);
      const FVec am = vec_add(ap, n->mul(ap, n->group_inv(sn)), p);
      auto ac = a_in.pull_back(am);
      SUPCHAR_CHECK(ac.has_value(), "a is an ideal");
      pts.push_back({n->encode(x), {s->encode(*sc), dot(tau, *ac, p)}});
    }
    std::sort(pts.begin(), pts.end());
    std::vector<Code> sub;
    for (const auto& pt : pts) sub.push_back(pt.first);

    ClassFunction f(p, sub.size());
    const Rational orbit_size(BigInt(out.orbits[o].size()));
    for (std::size_t th : thetas) {
      ClassFunction theta_fn = s_theory.character(th);
      const Rational m_theta = Rational(BigInt(s_theory.supercharacters()[th].degree)) / inner_product(theta_fn, theta_fn);
      std::vector<Cyclotomic> vals;
      for (const auto& pt : pts) vals.push_back(s_theory.value(th, pt.second.first) * theta(pt.second.second, p));
      f = f + ClassFunction(std::move(vals)).scaled(m_theta * orbit_size);
    }
    ClassFunction lhs = superinduce_orbit_average(theory, sub, f);
    ClassFunction chi_fn = theory.character(entry.chi);
    const Rational m_chi = Rational(BigInt(chars[entry.chi].degree)) / inner_product(chi_fn, chi_fn);
    SUPCHAR_CHECK(lhs == chi_fn.scaled(m_chi), "explicit inverse recovers m_chi chi");
  }
  return out;
}

ExamplePosets example_posets(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("example needs m, n >= 1");
  std::vector<Pair> chains;
  for (int i = 1; i < m; ++i) chains.emplace_back(i, i + 1);
  for (int i = m + 1; i < m + n; ++i) chains.emplace_back(i, i + 1);
  Poset hp = Poset::closure(m + n, chains);
  chains.emplace_back(1, m + 1);
  chains.emplace_back(m, m + n);
  Poset pp = Poset::closure(m + n, chains);
  std::vector<Pair> diff;
  for (const auto& r : pp.relations())
    if (!hp.contains(r)) diff.push_back(r);
  return ExamplePosets{hp, pp, Poset::closed(m + n, diff)};
}

SemidirectDecomposition build_example(int m, int n, int p) {
  ExamplePosets e = example_posets(m, n);
  return validate_decomposition(NilpotentAlgebra::pattern(e.p, p), NilpotentAlgebra::pattern(e.h, p),
                                NilpotentAlgebra::pattern(e.a, p));
}

BigInt example_count(int m, int n, const CountingParameter& q) {
  if (m < 1 || n < 1) throw InvalidArgument("example needs m, n >= 1");
  const BigInt qm1 = q.big() - 1;
  auto factor = [&](int k) { return bell_q(k + 1, q) - qm1 * bell_q(k - 1, q); };
  return factor(m) * factor(n) + qm1 * bell_q(m - 1, q) * bell_q(n - 1, q);
}

namespace {

void check_lr_hypotheses(int size, const std::vector<Pair>& j, const AlgebraPtr& l, const AlgebraPtr& r) {
  const int p = l->p();
  if (l->matrix_size() != size || r->matrix_size() != size || r->p() != p)
    throw InvalidArgument("L and R must live in U_n(p)");
  std::set<Pair> js(j.begin(), j.end());
  for (const auto& [a, b] : js)
    if (a < 1 || b > size || a >= b) throw InvalidArgument("J must lie above the diagonal");
  auto in_j = [&](const UTMatrix& x) {
    for (auto [a, b, c] : x.entries())
      if (!js.count({a, b})) return false;
    return true;
  };
  for (const auto& [a, b] : js) {
    UTMatrix e = UTMatrix::unit(size, a, b);
    for (const auto& g : l->basis())
      if (!in_j(g.times(e, p))) throw InvalidArgument("L does not preserve n_J");
    for (const auto& g : r->basis())
      if (!in_j(e.times(g, p))) throw InvalidArgument("R does not preserve n_J");
  }
  for (int a = 1; a <= size; ++a)
    for (int b = a + 1; b <= size; ++b)
      for (int c = b + 1; c <= size; ++c) {
        if (js.count({a, c}) && js.count({b, c}) && !l->contains(UTMatrix::unit(size, a, b)))
          throw InvalidArgument("L is missing 1 + e_" + std::to_string(a) + std::to_string(b));
        if (js.count({a, b}) && js.count({a, c}) && !r->contains(UTMatrix::unit(size, b, c)))
          throw InvalidArgument("R is missing 1 + e_" + std::to_string(b) + std::to_string(c));
      }
}

LabeledSetPartition clear_to_partition(UTMatrix x, const AlgebraPtr& l, const AlgebraPtr& r) {
  const int size = x.size();
  const PrimeField field(l->p());
  const int p = field.p();
  std::set<Pair> settled;
  while (true) {
    int best = -1;
    Pair at{0, 0};
    for (auto [i, k, c] : x.entries()) {
      if (settled.count({i, k})) continue;
      const int f = f_order(size, i, k);
      if (f > best) best = f, at = {i, k};
    }
    if (best < 0) break;
    const auto [j, k] = at;
    const int inv = field.inv(x.at(j, k));
    UTMatrix left(size), right(size);
    for (int i = 1; i < j; ++i)
      if (x.at(i, k) != 0) left.set(i, j, field.neg(field.mul(x.at(i, k), inv)));
    for (int t = k + 1; t <= size; ++t)
      if (x.at(j, t) != 0) right.set(k, t, field.neg(field.mul(x.at(j, t), inv)));
    // the factors commute and multiply out to 1 + left, 1 + right
    SUPCHAR_CHECK(l->contains(left) && r->contains(right), "clearing factors lie in L and R");
    x = sandwich(left, x, right, p);
    settled.insert(at);
  }
  return from_matrix(x, p);
}

}  // namespace

LabeledSetPartition canonicalize_LR(const UTMatrix& x, const std::vector<Pair>& j, const AlgebraPtr& l,
                                    const AlgebraPtr& r) {
  check_lr_hypotheses(x.size(), j, l, r);
  std::set<Pair> js(j.begin(), j.end());
  for (auto [a, b, c] : x.entries())
    if (!js.count({a, b})) throw InvalidArgument("X is not supported on J");
  return clear_to_partition(x, l, r);
}

std::size_t lr_orbit_check(const std::vector<Pair>& j, const AlgebraPtr& l, const AlgebraPtr& r) {
  const int size = l->matrix_size();
  const int p = l->p();
  check_lr_hypotheses(size, j, l, r);
  std::vector<Pair> js(j.begin(), j.end());
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  const auto k = static_cast<int>(js.size());
  require_within_bound(ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(k)), "n_J enumeration");
  require_within_bound(checked_group_order(*l) * checked_group_order(*r), "L x R enumeration");

  auto to_matrix = [&](Code c) {
    FVec v = decode(c, k, p);
    UTMatrix m(size);
    for (int t = 0; t < k; ++t) m.set(js[static_cast<std::size_t>(t)].first, js[static_cast<std::size_t>(t)].second,
                                      v[static_cast<std::size_t>(t)]);
    return m;
  };
  auto to_code = [&](const UTMatrix& m) {
    FVec v(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) v[static_cast<std::size_t>(t)] = m.at(js[static_cast<std::size_t>(t)].first, js[static_cast<std::size_t>(t)].second);
    return encode(v, p);
  };
  std::vector<UTMatrix> ls, rs;
  for (Code g = 0; g < l->order(); ++g) ls.push_back(l->matrix(l->decode(g)));
  for (Code g = 0; g < r->order(); ++g) rs.push_back(r->matrix(r->decode(g)));

  const std::uint64_t total = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
  constexpr std::size_t unset = ~std::size_t{0};
  std::vector<std::size_t> orbit_id(static_cast<std::size_t>(total), unset);
  std::map<std::string, std::size_t> label_owner;
  std::size_t orbits = 0;
  for (Code c = 0; c < total; ++c) {
    if (orbit_id[c] != unset) continue;
    const UTMatrix x = to_matrix(c);
    const LabeledSetPartition canon = clear_to_partition(x, l, r);
    SUPCHAR_CHECK(clear_to_partition(canon.matrix(), l, r) == canon, "canonicalization is idempotent");
    SUPCHAR_CHECK(label_owner.emplace(canon.label(), orbits).second, "distinct orbits get distinct representatives");
    std::vector<Code> members;
    for (const auto& g : ls)
      for (const auto& h : rs) members.push_back(to_code(sandwich(g, x, h, p)));
    for (Code mcode : members) {
      if (orbit_id[mcode] == unset) {
        orbit_id[mcode] = orbits;
        SUPCHAR_CHECK(clear_to_partition(to_matrix(mcode), l, r) == canon, "canonicalization is constant on orbits");
      }
      SUPCHAR_CHECK(orbit_id[mcode] == orbits, "orbits are disjoint");
    }
    ++orbits;
  }
  return orbits;
}

}  // namespace supchar
