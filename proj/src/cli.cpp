#include "supchar/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "supchar/error.hpp"
#include "supchar/littlegroups.hpp"
#include "supchar/resind.hpp"
#include "supchar/setpart.hpp"
#include "supchar/supernormal.hpp"

namespace supchar::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  int n = 0;
  int m = 0;
  int p = 2;
  long long q = 0;  // falls back to p
  std::string poset_file;
  std::string algebra_file;
  std::string sub_file;
  std::string lambda;
  std::string format = "json";
  std::uint64_t bound = 0;
  std::string mode;
  std::string name;
  std::string scope = "all";

  long long q_or_p() const { return q > 0 ? q : p; }
  bool csv() const { return format == "csv"; }
};

// ---- input -------------------------------------------------------------

AlgebraPtr load_algebra(const Options& o) {
  if (!o.algebra_file.empty()) {
    std::ifstream in(o.algebra_file);
    if (!in) throw UsageError("cannot open " + o.algebra_file);
    return read_algebra(in);
  }
  if (!o.poset_file.empty()) {
    std::ifstream in(o.poset_file);
    if (!in) throw UsageError("cannot open " + o.poset_file);
    return NilpotentAlgebra::pattern(read_poset(in), o.p);
  }
  if (o.n >= 1) return NilpotentAlgebra::full(o.n, o.p);
  throw UsageError("give --n, --poset or --algebra");
}

AlgebraPtr load_sub(const Options& o, const NilpotentAlgebra& n) {
  if (o.sub_file.empty()) throw UsageError("--sub is required");
  std::ifstream in(o.sub_file);
  if (!in) throw UsageError("cannot open " + o.sub_file);
  AlgebraPtr m = read_algebra(in);
  if (m->matrix_size() != n.matrix_size() || m->p() != n.p())
    throw UsageError("--sub must use the same matrix size and prime as the algebra");
  return m;
}

FVec parse_coords(const std::string& text, int dim, int p) {
  FVec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      long long x = std::stoll(item);
      v.push_back(static_cast<int>(((x % p) + p) % p));
    } catch (const std::exception&) {
      throw UsageError("bad coordinate: " + item);
    }
  }
  if (static_cast<int>(v.size()) != dim)
    throw UsageError("--lambda needs " + std::to_string(dim) + " comma-separated coordinates");
  return v;
}

// ---- rendering ---------------------------------------------------------

Json coords_json(const FVec& v) { return Json(v); }

std::string coords_text(const FVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

Json algebra_json(const NilpotentAlgebra& a) {
  Json blocks = Json::array();
  for (const auto& b : a.basis()) {
    Json block = Json::array();
    for (auto [i, j, c] : b.entries()) block.push_back({i, j, c});
    blocks.push_back(block);
  }
  return blocks;
}

bool is_full(const NilpotentAlgebra& a) {
  return a.poset().has_value() && *a.poset() == Poset::full(a.matrix_size());
}

// The member of a two-sided orbit that is a labeled set partition.
std::optional<LabeledSetPartition> partition_in(const NilpotentAlgebra& a, const std::vector<Code>& members) {
  for (Code c : members) {
    try {
      return from_matrix(unflatten(a.matrix_size(), a.decode(c)), a.p());
    } catch (const InvalidArgument&) {
    }
  }
  return std::nullopt;
}

// ---- commands ----------------------------------------------------------

int cmd_table(const Options& o, std::ostream& out) {
  AlgebraPtr n = load_algebra(o);
  checked_group_order(*n);
  SupercharacterTheory theory(n);
  const auto& chars = theory.supercharacters();
  const auto& classes = theory.superclasses();
  const bool full = is_full(*n);

  std::vector<std::size_t> row(chars.size()), col(classes.size());
  std::iota(row.begin(), row.end(), 0);
  std::iota(col.begin(), col.end(), 0);
  std::vector<std::optional<LabeledSetPartition>> row_label(chars.size()), col_label(classes.size());
  if (full) {
    for (std::size_t i = 0; i < chars.size(); ++i) row_label[i] = partition_in(*n, chars[i].members);
    for (std::size_t i = 0; i < classes.size(); ++i) col_label[i] = partition_in(*n, classes[i].members);
    for (const auto& l : row_label) SUPCHAR_CHECK(l.has_value(), "each supercharacter orbit meets S_n(q)");
    for (const auto& l : col_label) SUPCHAR_CHECK(l.has_value(), "each superclass meets S_n(q)");
    std::sort(row.begin(), row.end(), [&](auto a, auto b) { return *row_label[a] < *row_label[b]; });
    std::sort(col.begin(), col.end(), [&](auto a, auto b) { return *col_label[a] < *col_label[b]; });
  }
  auto values = theory.table();
  if (full) {
    // the product formula, cell by cell
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = 0; j < classes.size(); ++j)
        SUPCHAR_CHECK(closed_char_value(*row_label[i], *col_label[j], n->field()) == values[i][j],
                      "closed form matches the orbit sum");
  }
  auto row_name = [&](std::size_t i) {
    return full ? row_label[i]->label() : coords_text(n->decode(chars[i].rep));
  };
  auto col_name = [&](std::size_t j) {
    return full ? col_label[j]->label() : coords_text(n->decode(classes[j].rep));
  };

  if (o.csv()) {
    out << "character";
    for (std::size_t j : col) out << "," << csv_cell(col_name(j));
    out << "\n";
    for (std::size_t i : row) {
      out << csv_cell(row_name(i));
      for (std::size_t j : col) out << "," << csv_cell(values[i][j].to_string());
      out << "\n";
    }
    return kOk;
  }
  Json j;
  j["n"] = n->matrix_size();
  j["p"] = n->p();
  j["algebra"] = algebra_json(*n);
  Json jc = Json::array();
  for (std::size_t i : row) {
    Json c;
    if (full) c["label"] = row_label[i]->label();
    c["rep"] = coords_json(n->decode(chars[i].rep));
    c["degree"] = chars[i].degree;
    c["orbit_sizes"] = {chars[i].left_orbit.size(), chars[i].right_orbit.size(), chars[i].members.size()};
    jc.push_back(c);
  }
  j["supercharacters"] = jc;
  Json jk = Json::array();
  for (std::size_t k : col) {
    Json c;
    if (full) c["label"] = col_label[k]->label();
    c["rep"] = coords_json(n->decode(classes[k].rep));
    c["size"] = classes[k].members.size();
    jk.push_back(c);
  }
  j["superclasses"] = jk;
  Json vals = Json::array();
  for (std::size_t i : row) {
    Json r = Json::array();
    for (std::size_t k : col) r.push_back(values[i][k].coeffs());
    vals.push_back(r);
  }
  j["values"] = vals;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_superclasses(const Options& o, std::ostream& out) {
  AlgebraPtr n = load_algebra(o);
  checked_group_order(*n);
  SupercharacterTheory theory(n);
  const bool full = is_full(*n);
  Json arr = Json::array();
  if (o.csv()) out << "label,rep,size\n";
  for (const auto& k : theory.superclasses()) {
    std::string label = full ? partition_in(*n, k.members)->label() : "";
    if (o.csv()) {
      out << csv_cell(label) << "," << coords_text(n->decode(k.rep)) << "," << k.members.size() << "\n";
      continue;
    }
    Json c;
    if (full) c["label"] = label;
    c["rep"] = coords_json(n->decode(k.rep));
    c["size"] = k.members.size();
    arr.push_back(c);
  }
  if (!o.csv()) out << arr.dump(2) << "\n";
  return kOk;
}

int cmd_supernormal(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n is required");
  if (o.mode == "count") {
    out << count_supernormal(o.n, CountingParameter(o.q_or_p())) << "\n";
    return kOk;
  }
  auto entries = enumerate_supernormal(o.n, o.p);
  if (o.csv()) out << "antichain,subspace_basis,order\n";
  Json arr = Json::array();
  for (const auto& e : entries) {
    Json anti = Json::array();
    for (auto [i, j] : e.descriptor.antichain.elements) anti.push_back({i, j});
    Json basis = Json::array();
    for (const auto& r : e.descriptor.subspace.rows()) basis.push_back(r);
    if (o.csv()) {
      out << csv_cell(anti.dump()) << "," << csv_cell(basis.dump()) << "," << e.group.size() << "\n";
      continue;
    }
    arr.push_back({{"antichain", anti}, {"subspace_basis", basis}, {"order", e.group.size()}});
  }
  if (!o.csv()) out << arr.dump(2) << "\n";
  return kOk;
}

void write_terms(const CharacterCombination& comb, const SupercharacterTheory& theory, const Options& o,
                 std::ostream& out) {
  const auto& a = *theory.algebra();
  if (o.csv()) {
    out << "coeff,rep,degree\n";
    for (const auto& t : comb.terms) out << to_string(t.coeff) << "," << coords_text(a.decode(t.rep)) << "," << t.degree << "\n";
    return;
  }
  Json terms = Json::array();
  for (const auto& t : comb.terms)
    terms.push_back({{"coeff", to_string(t.coeff)}, {"rep", coords_json(a.decode(t.rep))}, {"degree", t.degree}});
  out << Json{{"terms", terms}}.dump(2) << "\n";
}

int cmd_restrict(const Options& o, std::ostream& out) {
  AlgebraPtr n = load_algebra(o);
  AlgebraPtr m = load_sub(o, *n);
  checked_group_order(*n);
  FVec lambda = parse_coords(o.lambda, n->dim(), n->p());
  SupercharacterTheory nt(n), mt(m);
  Inclusion inc(m, n);
  write_terms(restrict_supercharacter(nt, n->encode(lambda), mt, inc), mt, o, out);
  return kOk;
}

int cmd_sind(const Options& o, std::ostream& out) {
  AlgebraPtr n = load_algebra(o);
  AlgebraPtr m = load_sub(o, *n);
  checked_group_order(*n);
  FVec mu = parse_coords(o.lambda, m->dim(), m->p());
  SupercharacterTheory nt(n), mt(m);
  Inclusion inc(m, n);
  if (!is_subalgebra(*m, *n)) throw UsageError("--sub is not a subalgebra of the algebra");
  write_terms(superinduce(mt, mt.character_of(m->encode(mu)), nt, inc), nt, o, out);
  return kOk;
}

int cmd_little_groups(const Options& o, std::ostream& out) {
  if (o.m < 1 || o.n < 1) throw UsageError("--m and --n are required");
  SemidirectDecomposition d = build_example(o.m, o.n, o.p);
  SupercharacterTheory theory(d.n);
  LittleGroupsClassification c = classify(d);
  const BigInt formula = example_count(o.m, o.n, CountingParameter(o.p));
  const bool match = BigInt(c.label_count) == formula && c.label_count == theory.supercharacters().size();

  std::map<Code, std::size_t> orbit_index;
  for (std::size_t i = 0; i < c.orbits.size(); ++i) orbit_index[c.orbits[i].rep] = i;
  if (o.csv()) {
    out << "tau,psi,chi_rep,degree\n";
    for (const auto& e : c.entries) {
      const auto& s = c.stabilizers[orbit_index.at(e.label.tau)].s;
      const auto& ch = theory.supercharacters()[e.chi];
      out << coords_text(d.a->decode(e.label.tau)) << "," << coords_text(s->decode(e.label.psi)) << ","
          << coords_text(d.n->decode(ch.rep)) << "," << ch.degree << "\n";
    }
  } else {
    Json labels = Json::array();
    for (const auto& e : c.entries) {
      const auto& s = c.stabilizers[orbit_index.at(e.label.tau)].s;
      const auto& ch = theory.supercharacters()[e.chi];
      labels.push_back({{"tau", coords_json(d.a->decode(e.label.tau))},
                        {"psi", coords_json(s->decode(e.label.psi))},
                        {"chi_rep", coords_json(d.n->decode(ch.rep))},
                        {"degree", ch.degree}});
    }
    Json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["p"] = o.p;
    j["dims"] = {{"n", d.n->dim()}, {"h", d.h->dim()}, {"a", d.a->dim()}};
    j["tau_orbits"] = c.orbits.size();
    j["labels"] = labels;
    j["label_count"] = c.label_count;
    j["supercharacter_count"] = theory.supercharacters().size();
    j["formula"] = formula.str();
    j["match"] = match;
    out << j.dump(2) << "\n";
  }
  return match ? kOk : kVerification;
}

int cmd_counts(const Options& o, std::ostream& out) {
  const CountingParameter q(o.q_or_p());
  const std::string& name = o.name;
  BigInt v;
  if (name == "bell") v = bell_q(o.n, q);
  else if (name == "narayana") v = narayana(o.n, o.m);
  else if (name == "catalan") v = catalan(o.n);
  else if (name == "qbinom") v = q_binomial(o.n, o.m, q);
  else if (name == "tilde_v") v = tilde_count(o.n, q);
  else if (name == "supernormal") v = count_supernormal(o.n, q);
  else if (name == "feasible") v = feasible_count(o.n, q);
  else if (name == "alternating") v = alternating_count(o.n, q);
  else if (name == "littlegroups-example") v = example_count(o.m, o.n, q);
  else throw UsageError("unknown count: " + name);
  out << v << "\n";
  return kOk;
}

// ---- verify ------------------------------------------------------------

struct Report {
  std::ostream& out;
  bool ok = true;
  void check(const std::string& name, const std::function<std::string()>& body) {
    try {
      std::string detail = body();
      out << "PASS " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    } catch (const CheckFailed& e) {
      ok = false;
      out << "FAIL " << name << ": " << e.what() << "\n";
    }
  }
};


void verify_counts(Report& r) {
  r.check("bell vs set partitions", [] {
    for (int q : {2, 3})
      for (int n = 0; n <= 5; ++n)
        SUPCHAR_CHECK(BigInt(enumerate_snq(n, q).size()) == bell_q(n, CountingParameter(q)), "B_n(q) = |S_n(q)|");
    return std::string("n <= 5, q in {2,3}");
  });
  r.check("row counts", [] {
    for (int q : {2, 3})
      for (int n = 1; n <= 5; ++n) {
        CountingParameter cq(q);
        BigInt s = bell_q(n, cq);
        for (int i = 1; i <= n; ++i) s += (q - 1) * n_row_count(n, i, cq);
        SUPCHAR_CHECK(s == bell_q(n + 1, cq), "B_n + sum (q-1) N_{n,i} = B_{n+1}");
      }
    return std::string();
  });
  r.check("feasible partitions", [] {
    for (int n = 0; n <= 5; ++n) {
      std::size_t direct = 0;
      for (const auto& l : enumerate_snq(n, 2)) {
        bool all = true;
        for (const auto& b : l.blocks()) all = all && b.size() > 1;
        direct += all;
      }
      SUPCHAR_CHECK(BigInt(direct) == feasible_count(n, CountingParameter(2)), "F_n(2) by enumeration");
    }
    return std::string("n <= 5, q = 2");
  });
  r.check("catalan and narayana", [] {
    for (int n = 1; n <= 8; ++n) {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k) s += narayana(n, k);
      SUPCHAR_CHECK(s == catalan(n), "sum of Narayana numbers");
    }
    for (int n = 1; n <= 6; ++n)
      SUPCHAR_CHECK(BigInt(antichains(Poset::full(n)).size()) == catalan(n), "antichains of [[n]]");
    return std::string();
  });
  r.check("subspace counts", [] {
    for (auto [k, p] : {std::pair{1, 2}, {2, 2}, {3, 2}, {4, 2}, {1, 3}, {2, 3}, {3, 3}}) {
      auto all = all_subspaces(k, p);
      for (int i = 0; i <= k; ++i) {
        auto c = std::count_if(all.begin(), all.end(), [&](const Subspace& u) { return u.dimension() == i; });
        SUPCHAR_CHECK(BigInt(c) == q_binomial(k, i, CountingParameter(p)), "q-binomial");
      }
      SUPCHAR_CHECK(BigInt(enumerate_subspaces(k, p, true).size()) == tilde_count(k, CountingParameter(p)),
                     "avoiding subspaces");
    }
    return std::string();
  });
}

void verify_supernormal(Report& r, int n, int p) {
  r.check("supernormal n=" + std::to_string(n) + " p=" + std::to_string(p), [&] {
    const auto enumerated = enumerate_supernormal(n, p).size();
    const BigInt formula = count_supernormal(n, CountingParameter(p));
    const auto ideals = ideal_oracle(*NilpotentAlgebra::full(n, p)).size();
    SUPCHAR_CHECK(BigInt(enumerated) == formula && enumerated == ideals, "enumeration, formula and ideals agree");
    return std::to_string(enumerated) + " = " + formula.str() + " = " + std::to_string(ideals);
  });
}

void verify_table(Report& r, int n, int p) {
  r.check("table n=" + std::to_string(n) + " p=" + std::to_string(p), [&] {
    AlgebraPtr a = NilpotentAlgebra::full(n, p);
    SupercharacterTheory theory(a);
    auto values = theory.table();
    std::size_t cells = 0;
    for (std::size_t i = 0; i < theory.supercharacters().size(); ++i)
      for (std::size_t j = 0; j < theory.superclasses().size(); ++j, ++cells) {
        auto l = partition_in(*a, theory.supercharacters()[i].members);
        auto m = partition_in(*a, theory.superclasses()[j].members);
        SUPCHAR_CHECK(l && m, "orbits meet S_n(q)");
        SUPCHAR_CHECK(closed_char_value(*l, *m, a->field()) == values[i][j], "closed form matches the orbit sum");
      }
    SUPCHAR_CHECK(BigInt(theory.supercharacters().size()) == bell_q(n, CountingParameter(p)), "B_n(q) supercharacters");
    SUPCHAR_CHECK(regular_decomposition_check(theory), "regular character decomposition");
    return std::to_string(cells) + " cells";
  });
}

void verify_resind(Report& r, int n, int p, bool restrict_side) {
  r.check(std::string(restrict_side ? "restrict" : "sind") + " n=" + std::to_string(n) + " p=" + std::to_string(p), [&] {
    AlgebraPtr full = NilpotentAlgebra::full(n, p);
    SupercharacterTheory nt(full);
    std::size_t cases = 0;
    for (const auto& e : enumerate_supernormal(n, p)) {
      const AlgebraPtr& m = e.group.algebra;
      SupercharacterTheory mt(m);
      Inclusion inc(m, full);
      if (restrict_side) {
        for (const auto& ch : nt.supercharacters()) restrict_supercharacter(nt, ch.rep, mt, inc), ++cases;
      } else {
        for (std::size_t mu = 0; mu < mt.supercharacters().size(); ++mu) superinduce(mt, mu, nt, inc), ++cases;
      }
    }
    return std::to_string(cases) + " cases";
  });
}

void verify_littlegroups(Report& r, int p) {
  r.check("little groups m=2 n=2 p=" + std::to_string(p), [&] {
    auto c = classify(build_example(2, 2, p));
    const BigInt formula = example_count(2, 2, CountingParameter(p));
    SUPCHAR_CHECK(BigInt(c.label_count) == formula, "labels match the counting formula");
    return std::to_string(c.label_count) + " labels";
  });
}

int cmd_verify(const Options& o, std::ostream& out) {
  static const std::vector<std::string> scopes{"counts", "supernormal", "table", "restrict", "sind", "littlegroups", "all"};
  if (std::find(scopes.begin(), scopes.end(), o.scope) == scopes.end()) throw UsageError("unknown scope: " + o.scope);
  const int n = o.n >= 1 ? o.n : 3;
  const bool all = o.scope == "all";
  Report r{out};
  if (all || o.scope == "counts") verify_counts(r);
  if (all || o.scope == "supernormal") verify_supernormal(r, n, o.p);
  if (all || o.scope == "table") verify_table(r, n, o.p);
  if (all || o.scope == "restrict") verify_resind(r, n, o.p, true);
  if (all || o.scope == "sind") verify_resind(r, n, o.p, false);
  if (all || o.scope == "littlegroups") verify_littlegroups(r, o.p);
  return r.ok ? kOk : kVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Supercharacter theories of algebra groups over prime fields", "supchar"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--bound", o.bound, "Largest number of group elements to enumerate");
  };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Use n_n(p)");
    sub->add_option("--p", o.p, "Prime");
    sub->add_option("--poset", o.poset_file, "Poset file: n=<int>, then one 'i j' per line");
    sub->add_option("--algebra", o.algebra_file, "Algebra file: n=<int> p=<prime>, then 'i j c' blocks");
    add_format(sub);
  };

  auto* table = app.add_subcommand("table", "Supercharacter table");
  add_algebra(table);
  auto* classes = app.add_subcommand("superclasses", "Superclasses with sizes");
  add_algebra(classes);

  auto* sn = app.add_subcommand("supernormal", "Supernormal subgroups of U_n(p)");
  sn->add_option("mode", o.mode, "enum or count")->required()->check(CLI::IsMember({"enum", "count"}));
  sn->add_option("--n", o.n, "Matrix size")->required();
  sn->add_option("--p", o.p, "Prime");
  sn->add_option("--q", o.q, "Counting parameter for count (defaults to p)");
  add_format(sn);

  auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a supercharacter to an ideal");
  add_algebra(restrict_cmd);
  restrict_cmd->add_option("--sub", o.sub_file, "Subalgebra file")->required();
  restrict_cmd->add_option("--lambda", o.lambda, "Functional on the algebra, comma-separated")->required();

  auto* sind = app.add_subcommand("sind", "Superinduce a supercharacter of a subalgebra");
  add_algebra(sind);
  sind->add_option("--sub", o.sub_file, "Subalgebra file")->required();
  sind->add_option("--lambda", o.lambda, "Functional on the subalgebra, comma-separated")->required();

  auto* lg = app.add_subcommand("little-groups", "Little-groups labels for the two-chain example");
  lg->add_option("--m", o.m, "Length of the first chain")->required();
  lg->add_option("--n", o.n, "Length of the second chain")->required();
  lg->add_option("--p", o.p, "Prime");
  add_format(lg);

  auto* counts = app.add_subcommand("counts", "Counting formulas");
  counts->add_option("name", o.name, "bell narayana catalan qbinom tilde_v supernormal feasible alternating littlegroups-example")
      ->required();
  counts->add_option("--n", o.n, "n (k for qbinom and tilde_v)");
  counts->add_option("--m", o.m, "m (r for narayana, i for qbinom)");
  counts->add_option("--q", o.q, "Counting parameter");
  counts->add_option("--p", o.p, "Used as q when --q is absent");

  auto* verify = app.add_subcommand("verify", "Run the built-in consistency checks");
  verify->add_option("--scope", o.scope, "counts supernormal table restrict sind littlegroups all");
  verify->add_option("--n", o.n, "Matrix size (default 3)");
  verify->add_option("--p", o.p, "Prime");
  verify->add_option("--bound", o.bound, "Largest number of group elements to enumerate");

  std::vector<const char*> argv{"supchar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::uint64_t saved = element_bound();
  if (o.bound > 0) set_element_bound(o.bound);
  int code = kOk;
  try {
    if (!is_prime(o.p)) throw UsageError("--p must be prime");
    if (*table) code = cmd_table(o, out);
    else if (*classes) code = cmd_superclasses(o, out);
    else if (*sn) code = cmd_supernormal(o, out);
    else if (*restrict_cmd) code = cmd_restrict(o, out);
    else if (*sind) code = cmd_sind(o, out);
    else if (*lg) code = cmd_little_groups(o, out);
    else if (*counts) code = cmd_counts(o, out);
    else if (*verify) code = cmd_verify(o, out);
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "; the counting formulas (counts ...) work at any size\n";
    code = kBound;
  } catch (const CheckFailed& e) {
    err << "verification failed: " << e.what() << "\n";
    code = kVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  }
  set_element_bound(saved);
  return code;
}

}  // namespace supchar::cli
