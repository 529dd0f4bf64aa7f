// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "supchar/error.hpp"
#include "supchar/littlegroups.hpp"
#include "supchar/resind.hpp"
#include "supchar/supernormal.hpp"

using namespace supchar;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << "failed: " << what << "; ";
    }
  }
};

UTMatrix e(int n, int i, int j, int c = 1) { return UTMatrix::unit(n, i, j, c); }

std::vector<Code> image_codes(const Inclusion& inc) {
  std::vector<Code> out;
  const auto& m = inc.sub();
  for (Code c = 0; c < m->order(); ++c) out.push_back(inc.ambient()->encode(inc.embed(m->decode(c))));
  return out;
}

std::vector<AlgebraPtr> all_subalgebras(int n, int p) {
  std::vector<AlgebraPtr> out;
  for (const auto& s : all_subspaces(n * (n - 1) / 2, p)) {
    std::vector<UTMatrix> mats;
    for (const auto& r : s.rows()) mats.push_back(unflatten(n, r));
    try {
      out.push_back(NilpotentAlgebra::from_spanning(n, p, mats));
    } catch (const NotClosed&) {
    }
  }
  return out;
}

bool normal_by_conjugation(const Subgroup& h) {
  const auto& n = *h.parent;
  for (Code g = 0; g < n.order(); ++g) {
    FVec gv = n.decode(g), gi = n.group_inv(gv);
    for (Code c : h.members)
      if (!h.contains(n.encode(n.group_mul(n.group_mul(gv, n.decode(c)), gi)))) return false;
  }
  return true;
}

void criterion1(Outcome& o) {
  const std::tuple<int, int, std::size_t> cases[] = {{2, 2, 2}, {3, 2, 6}, {4, 2, 25}, {2, 3, 2}, {3, 3, 7}};
  for (auto [n, p, expected] : cases) {
    auto t = Clock::now();
    std::size_t enumerated = enumerate_supernormal(n, p).size();
    BigInt counted = count_supernormal(n, CountingParameter(p));
    std::size_t ideals = ideal_oracle(*NilpotentAlgebra::full(n, p)).size();
    double dt = seconds_since(t);
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(p) + ")";
    o.require(enumerated == expected && counted == expected && ideals == expected, tag + " counts");
    o.require(dt < 10.0, tag + " time");
    o.detail << tag << "=" << enumerated << " ";
  }
}

void criterion2(Outcome& o) {
  auto t = Clock::now();
  std::size_t cells = 0;
  for (auto [n, p] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
    auto alg = NilpotentAlgebra::full(n, p);
    SupercharacterTheory theory(alg);
    auto all = enumerate_snq(n, p);
    for (const auto& lam : all)
      for (const auto& mu : all) {
        ++cells;
        o.require(closed_char_value(lam, mu, alg->field()) ==
                      theory.value_at(alg->encode(lam.coords()), alg->encode(mu.coords())),
                  "cell " + lam.label() + " / " + mu.label());
      }
  }
  double dt = seconds_since(t);
  o.require(cells == 25 + 225 + 121, "cell count");
  o.require(dt < 60.0, "time");
  o.detail << cells << " cells";
}

void criterion3(Outcome& o) {
  for (auto [n, p] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2}, std::pair{1, 3},
                      std::pair{2, 3}, std::pair{3, 3}}) {
    auto alg = NilpotentAlgebra::full(n, p);
    SupercharacterTheory t(alg);
    BigInt b = bell_q(n, CountingParameter(p));
    std::string tag = "U_" + std::to_string(n) + "(" + std::to_string(p) + ")";
    o.require(BigInt(t.superclasses().size()) == b && BigInt(t.supercharacters().size()) == b, tag + " counts");
    std::vector<ClassFunction> chars;
    for (std::size_t a = 0; a < t.supercharacters().size(); ++a) chars.push_back(t.character(a));
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t c = 0; c < chars.size(); ++c) {
        Rational ip = inner_product(chars[a], chars[c]);
        Rational expect = a == c ? Rational(t.supercharacters()[a].intersection) : Rational(0);
        o.require(ip == expect, tag + " orthogonality");
      }
    o.require(regular_decomposition_check(t), tag + " regular decomposition");
    if (n >= 3) o.detail << tag << ":" << b << " ";
  }
}

void criterion4(Outcome& o) {
  std::size_t cases = 0;
  for (int n : {3, 4}) {
    auto full = NilpotentAlgebra::full(n, 2);
    SupercharacterTheory nt(full);
    std::vector<ClassFunction> chars;
    for (std::size_t a = 0; a < nt.supercharacters().size(); ++a) chars.push_back(nt.character(a));
    for (const auto& entry : enumerate_supernormal(n, 2)) {
      auto m = entry.group.algebra;
      o.require(m != nullptr, "supernormal subgroup is an algebra group");
      if (!m) continue;
      SupercharacterTheory mt(m);
      Inclusion inc(m, full);
      auto image = image_codes(inc);
      std::vector<ClassFunction> mchars;
      for (std::size_t b = 0; b < mt.supercharacters().size(); ++b) mchars.push_back(mt.character(b));
      for (std::size_t chi = 0; chi < chars.size(); ++chi) {
        ++cases;
        auto comb = restrict_supercharacter(nt, nt.supercharacters()[chi].rep, mt, inc);
        ClassFunction direct = chars[chi].restricted(image);
        o.require(comb.evaluate(mt) == direct, "pointwise restriction");
        // coefficients again, from inner products with every supercharacter of U_m
        std::vector<Rational> from_ip(mchars.size(), 0);
        for (std::size_t b = 0; b < mchars.size(); ++b)
          from_ip[b] = inner_product(direct, mchars[b]) / inner_product(mchars[b], mchars[b]);
        std::vector<Rational> from_formula(mchars.size(), 0);
        for (const auto& term : comb.terms) from_formula[term.chi] = term.coeff;
        o.require(from_ip == from_formula, "coefficients agree with inner products");
        for (const auto& term : comb.terms) {
          o.require(term.coeff == comb.terms[0].coeff, "one multiplicity");
          o.require(term.degree == comb.terms[0].degree, "one degree");
        }
      }
    }
  }
  o.detail << cases << " (m, chi) cases";
}

void criterion5(Outcome& o) {
  auto n3 = NilpotentAlgebra::full(3, 2);
  SupercharacterTheory nt(n3);
  auto m = NilpotentAlgebra::from_spanning(3, 2, {e(3, 1, 2), e(3, 1, 3)});
  SupercharacterTheory mt(m);
  Inclusion inc(m, n3);

  // orbit-sum decomposition vs definitional average, for every subalgebra of n_3(2)
  std::size_t decomposition_cases = 0;
  for (const auto& sub : all_subalgebras(3, 2)) {
    SupercharacterTheory st(sub);
    Inclusion si(sub, n3);
    auto image = image_codes(si);
    std::vector<std::size_t> order(image.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return image[a] < image[b]; });
    std::vector<Code> sorted, perm;
    for (std::size_t i : order) {
      sorted.push_back(image[i]);
      perm.push_back(static_cast<Code>(i));
    }
    for (std::size_t mu = 0; mu < st.supercharacters().size(); ++mu) {
      ++decomposition_cases;
      auto comb = superinduce(st, mu, nt, si);
      o.require(comb.evaluate(nt) == superinduce_definitional(nt, sorted, st.character(mu).restricted(perm)),
                "superinduction decomposition");
    }
  }

  // reciprocity on all pairs for m = span{e12, e13}
  auto image = image_codes(inc);
  std::size_t pairs = 0;
  for (std::size_t mu = 0; mu < mt.supercharacters().size(); ++mu) {
    ClassFunction sind = superinduce(mt, mu, nt, inc).evaluate(nt);
    for (std::size_t chi = 0; chi < nt.supercharacters().size(); ++chi) {
      ++pairs;
      o.require(inner_product(sind, nt.character(chi)) ==
                    inner_product(mt.character(mu), nt.character(chi).restricted(image)),
                "reciprocity");
    }
  }
  o.require(reciprocity_check(mt, nt, inc), "library reciprocity check");

  auto sub = [&](std::vector<UTMatrix> v) { return NilpotentAlgebra::from_spanning(3, 2, v); };
  std::vector<std::pair<AlgebraPtr, AlgebraPtr>> mackey_pairs{
      {sub({e(3, 1, 2), e(3, 1, 3)}), sub({e(3, 2, 3), e(3, 1, 3)})},
      {sub({e(3, 1, 2)}), sub({e(3, 1, 2).plus(e(3, 2, 3), 2), e(3, 1, 3)})},
      {sub({e(3, 1, 2)}), sub({e(3, 2, 3), e(3, 1, 3)})},
      {sub({e(3, 1, 3)}), n3},
  };
  std::size_t mackey_ok = 0;
  for (const auto& [h, k] : mackey_pairs) {
    SupercharacterTheory ht(h);
    bool all = true;
    for (std::size_t chi = 0; chi < ht.supercharacters().size(); ++chi) all = all && mackey_check(n3, h, k, chi);
    mackey_ok += all;
  }
  o.require(mackey_ok >= 3, "Mackey on at least 3 pairs");
  o.detail << decomposition_cases << " decomposition cases, " << pairs << " reciprocity pairs, Mackey " << mackey_ok << "/"
           << mackey_pairs.size() << " pairs";
}

void criterion6(Outcome& o) {
  auto n4 = NilpotentAlgebra::full(4, 2);
  auto m = NilpotentAlgebra::from_spanning(4, 2, {e(4, 1, 2).plus(e(4, 3, 4), 2), e(4, 1, 3).plus(e(4, 2, 4), 2),
                                                  e(4, 1, 4)});
  auto h = algebra_subgroup(n4, m);
  o.require(normal_by_conjugation(h), "example is normal");
  o.require(!is_supernormal(h), "example is not supernormal");
  auto panel = equivalence_panel(m, n4);
  o.require(panel.normal && panel.conditions == std::array<bool, 5>{}, "example panel");

  std::mt19937 rng(20240611);
  std::size_t tested = 0, positive = 0;
  for (auto [n, p] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}, std::pair{4, 3}}) {
    auto full = NilpotentAlgebra::full(n, p);
    std::uniform_int_distribution<Code> d(0, static_cast<Code>(full->order() - 1));
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<UTMatrix> gens;
      for (int g = 0; g <= trial % 3; ++g) gens.push_back(full->matrix(full->decode(d(rng))));
      auto sub = generated_subalgebra(n, p, gens);
      auto pn = equivalence_panel(sub, full);
      ++tested;
      positive += pn.conditions[0];
      o.require(pn.agree(), "panel agreement");
    }
  }
  o.require(tested >= 50, "at least 50 random subalgebras");
  o.detail << "example normal and not supernormal; " << tested << " random panels agree (" << positive
           << " supernormal)";
}

void criterion7(Outcome& o) {
  const long long expected[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    auto full = Poset::full(n);
    auto anti = antichains(full);
    std::set<std::vector<Pair>> distinct;
    for (const auto& s : anti) {
      Poset ps = normal_subposet_from_antichain(full, s);
      o.require(is_normal_subposet(ps, full), "P_S is normal");
      distinct.insert(ps.relations());
      DyckPath d = dyck_of_antichain(s, n);
      o.require(is_dyck(d) && antichain_of_dyck(d) == s, "Dyck round trip");
    }
    o.require(distinct.size() == anti.size(), "S -> P_S injective");
    o.require(BigInt(distinct.size()) == catalan(n) && catalan(n) == expected[n - 1], "Catalan count");
  }
  Antichain s{4, {{1, 2}, {2, 4}}};
  o.require(to_string(dyck_of_antichain(s, 4)) == "UDUUDUDD", "displayed path");
  o.require(antichain_of_dyck(parse_dyck("UDUUDUDD")) == s, "displayed antichain");
  o.detail << "1 2 5 14 42 132; S={(1,2),(2,4)} <-> UDUUDUDD";
}

void criterion8(Outcome& o) {
  for (int n : {2, 3, 4}) {
    auto alt = alternating_subgroup(Poset::full(n), 2);
    SupercharacterTheory nt(alt.pattern), at(alt.alternating);
    Inclusion inc(alt.alternating, alt.pattern);
    auto image = image_codes(inc);
    std::set<std::vector<std::string>> distinct;
    for (std::size_t chi = 0; chi < nt.supercharacters().size(); ++chi) {
      auto comb = restrict_supercharacter(nt, nt.supercharacters()[chi].rep, at, inc);
      o.require(comb.terms.size() == 1 && comb.terms[0].coeff == 1, "single supercharacter restriction");
      auto r = nt.character(chi).restricted(image);
      std::vector<std::string> key;
      for (std::size_t i = 0; i < r.size(); ++i) key.push_back(r.integral_value(i).to_string());
      distinct.insert(key);
    }
    o.require(alternating_restriction_check(alt), "codim-one profile a + b = 0");
    BigInt formula = alternating_count(n - 1, CountingParameter(2));
    o.require(BigInt(distinct.size()) == formula && BigInt(at.supercharacters().size()) == formula,
              "alternating count");
    if (n >= 3) o.detail << "A_" << n << "(2)=" << distinct.size() << " ";
  }
  o.require(alternating_count(2, CountingParameter(2)) == 3 && alternating_count(3, CountingParameter(2)) == 8,
            "expected values");
}

void criterion9(Outcome& o) {
  auto d = build_example(2, 2, 2);
  auto cls = classify(d, true);
  SupercharacterTheory t(d.n);
  std::set<std::size_t> hit;
  for (const auto& en : cls.entries) hit.insert(en.chi);
  o.require(cls.label_count == 17 && t.supercharacters().size() == 17 && hit.size() == 17, "17 labels");

  // size identity, recomputed here from the classification
  for (std::size_t i = 0; i < cls.orbits.size(); ++i) {
    const auto& st = cls.stabilizers[i];
    auto canon = t_orbit_canonical(d, st);
    for (const auto& en : cls.entries) {
      if (en.label.tau != cls.orbits[i].rep) continue;
      std::size_t t_orbit = static_cast<std::size_t>(std::count(canon.begin(), canon.end(), en.label.psi));
      o.require(t.supercharacters()[en.chi].members.size() == cls.orbits[i].size() * st.a_orbit_size * t_orbit,
                "size identity");
    }
  }

  auto t0 = Clock::now();
  auto big = NilpotentAlgebra::pattern(example_posets(2, 3).p, 2);
  std::size_t classes = SupercharacterTheory(big).superclasses().size();
  double dt = seconds_since(t0);
  o.require(big->dim() == 8 && big->order() == 256, "8-dimensional pattern algebra");
  o.require(example_count(2, 3, CountingParameter(2)) == 54 && classes == 54, "54 superclasses");
  o.require(dt < 60.0, "time");
  o.detail << "17 labels = 17 supercharacters; example_count(2,3,2) = " << classes << " superclasses";
}

void criterion10(Outcome& o) {
  std::size_t groups = 0, kernels = 0;
  for (int n : {3, 4}) {
    auto full = NilpotentAlgebra::full(n, 2);
    SupercharacterTheory t(full);
    for (const auto& entry : enumerate_supernormal(n, 2)) {
      ++groups;
      auto chosen = kernel_intersection_representation(entry.group, t);
      std::vector<Code> meet;
      for (Code c = 0; c < full->order(); ++c) meet.push_back(c);
      for (std::size_t chi : chosen) {
        auto ker = t.kernel(chi);
        std::vector<Code> next;
        std::set_intersection(meet.begin(), meet.end(), ker.begin(), ker.end(), std::back_inserter(next));
        meet = std::move(next);
      }
      o.require(meet == entry.group.members, "kernel intersection reproduces the subgroup");
    }
  }
  for (int n = 1; n <= 4; ++n) {
    auto full = NilpotentAlgebra::full(n, 2);
    SupercharacterTheory t(full);
    for (const auto& lam : enumerate_snq(n, 2)) {
      ++kernels;
      o.require(classifying_kernel(lam, *full) == t.kernel(t.character_of(full->encode(lam.coords()))),
                "kernel description for " + lam.label());
    }
  }
  o.detail << groups << " subgroups, " << kernels << " kernels";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"supernormal count", criterion1},       {"closed character formula", criterion2},
      {"supercharacter theory axioms", criterion3}, {"restriction", criterion4},
      {"superinduction", criterion5},          {"normal vs supernormal", criterion6},
      {"poset combinatorics", criterion7},     {"alternating groups", criterion8},
      {"little groups", criterion9},           {"kernels", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail << "exception: " << ex.what();
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail.str()
              << " [" << static_cast<int>(seconds_since(t) * 1000) << " ms]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
