#include "supchar/resind.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "supchar/error.hpp"

namespace supchar {

namespace {

// n-codes of the members of U_m, listed by m-code.
std::vector<Code> embedded_codes(const Inclusion& inc) {
  const auto& m = inc.sub();
  const auto& n = inc.ambient();
  std::vector<Code> out;
  out.reserve(static_cast<std::size_t>(m->order()));
  for (Code c = 0; c < m->order(); ++c) out.push_back(n->encode(inc.embed(m->decode(c))));
  return out;
}

int exact_log(std::uint64_t value, int p) {
  int e = 0;
  while (value > 1) {
    SUPCHAR_CHECK(value % static_cast<std::uint64_t>(p) == 0, "orbit ratio is a power of q");
    value /= static_cast<std::uint64_t>(p);
    ++e;
  }
  SUPCHAR_CHECK(value == 1, "orbit ratio is a positive power of q");
  return e;
}

// Average f° over x (g-1) y with x, y ranging over `group`, for each g in `points`.
std::vector<Cyclotomic> double_sum(const AlgebraPtr& parent, const std::vector<Code>& group, const std::vector<Code>& d,
                                   const ClassFunction& f, const std::vector<Code>& points) {
  Action act(parent, parent);
  const int p = parent->p();
  std::vector<FMat> left, right;
  left.reserve(group.size());
  right.reserve(group.size());
  for (Code x : group) {
    left.push_back(act.matrix(x, Space::Algebra, Side::Left));
    right.push_back(act.matrix(x, Space::Algebra, Side::Right));
  }
  std::vector<Cyclotomic> out;
  out.reserve(points.size());
  for (Code g : points) {
    FVec gv = parent->decode(g);
    Cyclotomic acc(p);
    for (const auto& l : left) {
      FVec v = l.apply(gv, p);
      for (const auto& r : right) {
        Code z = parent->encode(r.apply(v, p));
        auto it = std::lower_bound(d.begin(), d.end(), z);
        if (it != d.end() && *it == z) acc += f.numerator(static_cast<std::size_t>(it - d.begin()));
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

ClassFunction CharacterCombination::evaluate(const SupercharacterTheory& theory) const {
  ClassFunction acc(theory.p(), static_cast<std::size_t>(theory.order()));
  for (const auto& t : terms) acc = acc + theory.character(t.chi).scaled(t.coeff);
  return acc;
}

CharacterCombination restrict_supercharacter(const SupercharacterTheory& n_theory, Code lambda,
                                             const SupercharacterTheory& m_theory, const Inclusion& inc) {
  const auto& n = n_theory.algebra();
  const auto& m = m_theory.algebra();
  if (inc.ambient()->dim() != n->dim() || inc.sub()->dim() != m->dim()) throw InvalidArgument("inclusion does not match the theories");
  if (!is_ideal(*m, *n)) throw NotIdeal("restriction formula needs a supernormal subgroup");
  FVec mu = inc.restrict_functional(n->decode(lambda));
  Code muc = m->encode(mu);
  Action n_on_m(n, m);
  Orbit big = two_sided_orbit(n_on_m, Space::Dual, muc);

  const auto& lam_char = n_theory.supercharacters()[n_theory.character_of(lambda)];
  const auto& mu_char = m_theory.supercharacters()[m_theory.character_of(muc)];
  Rational coeff(BigInt(lam_char.degree) * mu_char.members.size(), BigInt(mu_char.degree) * big.size());

  std::set<std::size_t> constituents;
  for (Code c : big.members) constituents.insert(m_theory.character_of(c));
  SUPCHAR_CHECK(constituents.size() * mu_char.members.size() == big.size(),
                "U_n mu U_n splits into equal U_m orbits");
  CharacterCombination comb;
  for (std::size_t chi : constituents) {
    const auto& c = m_theory.supercharacters()[chi];
    SUPCHAR_CHECK(c.degree == mu_char.degree, "constituents share one degree");
    comb.terms.push_back(CharacterTerm{coeff, chi, c.rep, c.degree});
  }

  ClassFunction direct = n_theory.character(n_theory.character_of(lambda)).restricted(embedded_codes(inc));
  SUPCHAR_CHECK(comb.evaluate(m_theory) == direct, "restriction formula agrees pointwise");
  return comb;
}

ClassFunction superinduce_definitional(const SupercharacterTheory& n_theory, const std::vector<Code>& sub,
                                       const ClassFunction& f) {
  const auto& n = n_theory.algebra();
  const std::uint64_t order = n->order();
  std::vector<Code> group(static_cast<std::size_t>(order));
  std::iota(group.begin(), group.end(), Code{0});
  // Every point when cheap, otherwise superclass representatives only.
  const bool every = order * order * order <= (std::uint64_t{1} << 21);
  std::vector<Code> points;
  if (every) {
    points = group;
  } else {
    for (const auto& k : n_theory.superclasses()) points.push_back(k.rep);
  }
  auto sums = double_sum(n, group, sub, f, points);
  std::vector<Cyclotomic> vals(static_cast<std::size_t>(order), Cyclotomic(n->p()));
  if (every) {
    vals = std::move(sums);
  } else {
    for (std::size_t t = 0; t < points.size(); ++t)
      for (Code g : n_theory.superclasses()[t].members) vals[g] = sums[t];
  }
  std::int64_t den = checked_mul(checked_mul(f.denominator(), static_cast<std::int64_t>(sub.size())),
                                 static_cast<std::int64_t>(order));
  return ClassFunction(std::move(vals), den);
}

ClassFunction superinduce_orbit_average(const SupercharacterTheory& n_theory, const std::vector<Code>& sub,
                                        const ClassFunction& f) {
  if (f.size() != sub.size()) throw InvalidArgument("function must be given on every member of the subset");
  const auto& n = n_theory.algebra();
  const auto order = static_cast<std::int64_t>(n->order());
  const std::int64_t square = checked_mul(order, order);
  std::vector<Cyclotomic> vals(static_cast<std::size_t>(order), Cyclotomic(n->p()));
  for (const auto& k : n_theory.superclasses()) {
    Cyclotomic acc(n->p());
    for (Code z : k.members) {
      auto it = std::lower_bound(sub.begin(), sub.end(), z);
      if (it != sub.end() && *it == z) acc += f.numerator(static_cast<std::size_t>(it - sub.begin()));
    }
    const auto size = static_cast<std::int64_t>(k.members.size());
    SUPCHAR_CHECK(square % size == 0, "superclass size divides |U|^2");
    acc = acc.scaled(square / size);
    for (Code g : k.members) vals[g] = acc;
  }
  std::int64_t den = checked_mul(checked_mul(f.denominator(), static_cast<std::int64_t>(sub.size())), order);
  return ClassFunction(std::move(vals), den);
}

ClassFunction superinduce_within(const AlgebraPtr& parent, const std::vector<Code>& k, const std::vector<Code>& d,
                                 const ClassFunction& f) {
  if (f.size() != d.size()) throw InvalidArgument("function must be given on every member of the subset");
  auto sums = double_sum(parent, k, d, f, k);
  std::int64_t den = checked_mul(checked_mul(f.denominator(), static_cast<std::int64_t>(d.size())),
                                 static_cast<std::int64_t>(k.size()));
  return ClassFunction(std::move(sums), den);
}

CharacterCombination superinduce(const SupercharacterTheory& m_theory, std::size_t mu,
                                 const SupercharacterTheory& n_theory, const Inclusion& inc) {
  const auto& n = n_theory.algebra();
  const auto& m = m_theory.algebra();
  if (!is_subalgebra(*m, *n)) throw InvalidArgument("m is not a subalgebra of n");
  const auto& mu_char = m_theory.supercharacters().at(mu);
  std::map<std::size_t, Rational> coeffs;
  for (Code lam = 0; lam < n->order(); ++lam) {
    Code r = m->encode(inc.restrict_functional(n->decode(lam)));
    if (!std::binary_search(mu_char.members.begin(), mu_char.members.end(), r)) continue;
    std::size_t chi = n_theory.character_of(lam);
    coeffs[chi] += Rational(BigInt(mu_char.degree), BigInt(mu_char.members.size()) * n_theory.supercharacters()[chi].degree);
  }
  CharacterCombination comb;
  for (const auto& [chi, c] : coeffs) {
    const auto& sc = n_theory.supercharacters()[chi];
    comb.terms.push_back(CharacterTerm{c, chi, sc.rep, sc.degree});
  }

  if (is_ideal(*m, *n)) {
    Action n_on_m(n, m);
    std::uint64_t big = two_sided_orbit(n_on_m, Space::Dual, mu_char.rep).size();
    for (const auto& t : comb.terms) {
      const auto& sc = n_theory.supercharacters()[t.chi];
      Rational expect(BigInt(mu_char.degree) * sc.members.size(), BigInt(sc.degree) * big);
      SUPCHAR_CHECK(t.coeff == expect, "superinduction coefficient matches the ideal case formula");
    }
  }

  std::vector<Code> emb = embedded_codes(inc);
  std::vector<std::size_t> order(emb.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return emb[a] < emb[b]; });
  std::vector<Code> sorted, perm;
  for (std::size_t i : order) {
    sorted.push_back(emb[i]);
    perm.push_back(static_cast<Code>(i));
  }
  ClassFunction f = m_theory.character(mu).restricted(perm);
  ClassFunction def = superinduce_definitional(n_theory, sorted, f);
  SUPCHAR_CHECK(comb.evaluate(n_theory) == def, "superinduction agrees with the defining average");
  Rational deg = Rational(BigInt(n->order()), BigInt(m->order())) * mu_char.degree;
  SUPCHAR_CHECK(def.numerator(0).is_integer() && Rational(def.numerator(0).integer_value(), def.denominator()) == deg,
                "degree of the superinduced function");
  return comb;
}

bool reciprocity_check(const SupercharacterTheory& m_theory, const SupercharacterTheory& n_theory,
                       const Inclusion& inc) {
  std::vector<Code> emb = embedded_codes(inc);
  std::vector<ClassFunction> n_chars, restricted;
  for (std::size_t psi = 0; psi < n_theory.supercharacters().size(); ++psi) {
    n_chars.push_back(n_theory.character(psi));
    restricted.push_back(n_chars.back().restricted(emb));
  }
  for (std::size_t mu = 0; mu < m_theory.supercharacters().size(); ++mu) {
    ClassFunction ind = superinduce(m_theory, mu, n_theory, inc).evaluate(n_theory);
    ClassFunction chi = m_theory.character(mu);
    for (std::size_t psi = 0; psi < n_chars.size(); ++psi)
      if (inner_product(ind, n_chars[psi]) != inner_product(chi, restricted[psi])) return false;
  }
  return true;
}

DoubleCosets double_cosets(const AlgebraPtr& g, const std::vector<Code>& h, const std::vector<Code>& k) {
  const std::uint64_t order = checked_group_order(*g);
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  DoubleCosets out;
  for (Code c = 0; c < order; ++c) {
    if (seen[c]) continue;
    std::set<Code> coset;
    FVec cv = g->decode(c);
    for (Code x : h) {
      FVec xc = g->group_mul(g->decode(x), cv);
      for (Code y : k) coset.insert(g->encode(g->group_mul(xc, g->decode(y))));
    }
    for (Code m : coset) {
      SUPCHAR_CHECK(!seen[m], "double cosets are disjoint");
      seen[m] = 1;
    }
    SUPCHAR_CHECK(*coset.begin() == c, "double coset representative is its least member");
    out.reps.push_back(c);
    out.cosets.emplace_back(coset.begin(), coset.end());
  }
  return out;
}

bool mackey_check(const AlgebraPtr& g, const AlgebraPtr& h, const AlgebraPtr& k, std::size_t chi,
                  MackeyWeight weight) {
  SupercharacterTheory h_theory(h);
  Inclusion inc_h(h, g);
  const std::vector<Code> hset = algebra_subgroup(g, h).members;
  const std::vector<Code> kset = algebra_subgroup(g, k).members;
  const std::uint64_t order = checked_group_order(*g);
  std::vector<Code> all(static_cast<std::size_t>(order));
  std::iota(all.begin(), all.end(), Code{0});

  ClassFunction chi_h = h_theory.character(chi);
  auto chi_at = [&](const FVec& x) {
    auto hv = inc_h.pull_back(x);
    SUPCHAR_CHECK(hv.has_value(), "conjugate lies in H");
    return chi_h.integral_value(h->encode(*hv));
  };
  std::vector<Cyclotomic> on_h;
  for (Code c : hset) on_h.push_back(chi_at(g->decode(c)));
  ClassFunction lhs = superinduce_within(g, all, hset, ClassFunction(on_h)).restricted(kset);

  ClassFunction rhs(g->p(), kset.size());
  DoubleCosets dc = double_cosets(g, hset, kset);
  for (std::size_t t = 0; t < dc.reps.size(); ++t) {
    FVec s = g->decode(dc.reps[t]);
    FVec si = g->group_inv(s);
    std::vector<Code> d;
    for (Code x : hset) {
      Code conj = g->encode(g->group_mul(g->group_mul(si, g->decode(x)), s));
      if (std::binary_search(kset.begin(), kset.end(), conj)) d.push_back(conj);
    }
    std::sort(d.begin(), d.end());
    std::vector<Cyclotomic> vals;
    for (Code x : d) vals.push_back(chi_at(g->group_mul(g->group_mul(s, g->decode(x)), si)));
    ClassFunction term = superinduce_within(g, kset, d, ClassFunction(vals));
    if (weight == MackeyWeight::CosetFraction)
      term = term.scaled(Rational(BigInt(dc.cosets[t].size()), BigInt(order)));
    rhs = rhs + term;
  }
  return lhs == rhs;
}

DeltaProfile codim1_profile(const SupercharacterTheory& n_theory, Code lambda, const SupercharacterTheory& m_theory,
                            const Inclusion& inc) {
  const auto& n = n_theory.algebra();
  const auto& m = m_theory.algebra();
  if (n->dim() - m->dim() != 1) throw InvalidArgument("subalgebra must have codimension one");
  SUPCHAR_CHECK(is_ideal(*m, *n), "a codimension-one subalgebra is an ideal");
  const int p = n->p();
  Subspace mp = perp(inc);
  SUPCHAR_CHECK(mp.dimension() == 1, "m-perp is a line");
  FVec lam = n->decode(lambda);
  Code shifted = n->encode(vec_add(lam, mp.rows()[0], p));
  Code muc = m->encode(inc.restrict_functional(lam));

  Action m_on_n(m, n), n_on_m(n, m);
  auto in = [](const std::vector<Code>& v, Code c) { return std::binary_search(v.begin(), v.end(), c); };
  auto nl = one_sided_orbit(n_theory.action(), Space::Dual, Side::Left, lambda);
  auto nr = one_sided_orbit(n_theory.action(), Space::Dual, Side::Right, lambda);
  auto ml = one_sided_orbit(m_on_n, Space::Dual, Side::Left, lambda);
  auto mr = one_sided_orbit(m_on_n, Space::Dual, Side::Right, lambda);
  DeltaProfile d;
  d.delta_l = in(nl, shifted);
  d.delta_r = in(nr, shifted);
  d.delta_l_prime = in(ml, shifted);
  d.delta_r_prime = in(mr, shifted);

  std::size_t n_mu_l = one_sided_orbit(n_on_m, Space::Dual, Side::Left, muc).size();
  std::size_t n_mu_r = one_sided_orbit(n_on_m, Space::Dual, Side::Right, muc).size();
  std::size_t m_mu_l = one_sided_orbit(m_theory.action(), Space::Dual, Side::Left, muc).size();
  std::size_t m_mu_r = one_sided_orbit(m_theory.action(), Space::Dual, Side::Right, muc).size();
  auto pw = [p](int e) { return static_cast<std::size_t>(e ? p : 1); };
  SUPCHAR_CHECK(nl.size() == pw(d.delta_l) * n_mu_l, "left ratio over U_n");
  SUPCHAR_CHECK(nr.size() == pw(d.delta_r) * n_mu_r, "right ratio over U_n");
  SUPCHAR_CHECK(n_mu_r == pw(d.delta_l_prime) * m_mu_r, "right ratio from U_m to U_n");
  SUPCHAR_CHECK(n_mu_l == pw(d.delta_r_prime) * m_mu_l, "left ratio from U_m to U_n");

  CharacterCombination comb = restrict_supercharacter(n_theory, lambda, m_theory, inc);
  const Rational& c = comb.terms.front().coeff;
  SUPCHAR_CHECK(boost::multiprecision::denominator(c) == 1, "restriction multiplicity is an integer");
  d.a = exact_log(boost::multiprecision::numerator(c).convert_to<std::uint64_t>(), p);
  d.b = exact_log(comb.terms.size(), p);
  SUPCHAR_CHECK(d.a + d.b == d.delta_l + d.delta_r_prime, "a + b = delta_L + delta'_R");
  SUPCHAR_CHECK(d.a + d.b == d.delta_l_prime + d.delta_r, "a + b = delta'_L + delta_R");
  return d;
}

AlternatingGroup alternating_subgroup(const Poset& poset, int p) {
  if (poset.size() == 0) throw InvalidArgument("poset must have at least one relation");
  AlternatingGroup alt;
  alt.pattern = NilpotentAlgebra::pattern(poset, p);
  const auto& n = alt.pattern;
  alt.sgn.assign(static_cast<std::size_t>(n->dim()), 0);
  for (const auto& c : poset.covers()) alt.sgn[static_cast<std::size_t>(poset.index_of(c))] = 1;
  FMat row(1, n->dim());
  for (int j = 0; j < n->dim(); ++j) row.at(0, j) = alt.sgn[static_cast<std::size_t>(j)];
  std::vector<UTMatrix> mats;
  Subspace ker = kernel(row, p);
  for (const auto& v : ker.rows()) mats.push_back(n->matrix(v));
  alt.alternating = NilpotentAlgebra::from_spanning(n->matrix_size(), p, mats);
  const std::uint64_t order = checked_group_order(*n);
  for (Code x = 0; x < order; ++x) {
    FVec xv = n->decode(x);
    for (Code y = 0; y < order; ++y) {
      FVec yv = n->decode(y);
      SUPCHAR_CHECK(dot(alt.sgn, n->group_mul(xv, yv), p) == (dot(alt.sgn, xv, p) + dot(alt.sgn, yv, p)) % p,
                    "sgn is a homomorphism");
    }
  }
  SUPCHAR_CHECK(alt.alternating->order() * static_cast<std::uint64_t>(p) == order, "A_P has index p");
  return alt;
}

bool alternating_restriction_check(const AlternatingGroup& alt) {
  SupercharacterTheory nt(alt.pattern);
  SupercharacterTheory mt(alt.alternating);
  Inclusion inc(alt.alternating, alt.pattern);
  for (Code lam = 0; lam < alt.pattern->order(); ++lam) {
    DeltaProfile d = codim1_profile(nt, lam, mt, inc);
    if (d.a_plus_b() != 0) return false;
  }
  return true;
}

BigInt alternating_count(int n, const CountingParameter& q) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  BigInt num = bell_q(n + 1, q) + (q.big() - 1) * feasible_count(n, q);
  SUPCHAR_CHECK(num % q.big() == 0, "alternating count is an integer");
  return num / q.big();
}

}  // namespace supchar
