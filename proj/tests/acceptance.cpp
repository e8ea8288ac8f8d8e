// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "nestobetti/betti.hpp"
#include "nestobetti/hat_poset.hpp"
#include "nestobetti/nested_complex.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace nestobetti;
using V = std::vector<std::uint64_t>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> info;
};

std::string join(const V& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

ElementSet set_of(const std::vector<int>& labels) {
  ElementSet s;
  for (int v : labels) s = s.with(v);
  return s;
}

// Instances shared by several criteria: every connected chordal building set
// on [4] plus 100 random ones on [6].
const std::vector<BuildingSet>& corpus() {
  static const std::vector<BuildingSet> all = [] {
    std::vector<BuildingSet> out = oracle::connected_chordal_building_sets(4);
    std::mt19937_64 gen(20240601);
    for (int i = 0; i < 100; ++i) out.push_back(oracle::random_connected_chordal(6, gen));
    return out;
  }();
  return all;
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str();
}

// --- 1 ---------------------------------------------------------------------
Outcome path_six() {
  Outcome o;
  const BuildingSet b = graphical_building_set(path_graph(6));
  const auto alt = real_betti_alternating(b);
  const auto hom = real_betti_homology_oracle(b);
  std::vector<SubsetContribution> want;
  for (const auto& row : path6_breakdown_reference())
    want.push_back({set_of(row.subset), static_cast<int>(row.subset.size() / 2), row.count});
  const bool cli_ok = run_cli({"betti", "--path", "6", "--method", "both"}) ==
                      "k\talternating\thomology\n0\t1\t1\n1\t5\t5\n2\t9\t9\n3\t5\t5\n";
  o.pass = alt.betti == V{1, 5, 9, 5} && hom.betti == alt.betti && alt.breakdown == want && hom.breakdown == want && cli_ok;
  o.detail = "alternating " + join(alt.betti) + ", homology " + join(hom.betti) + ", " +
             std::to_string(want.size()) + " subsets matched";
  return o;
}

// --- 2 ---------------------------------------------------------------------
Outcome hochschild_two_four() {
  Outcome o;
  const BuildingSet b = hochschild_building_set(2, 4);
  const V closed = hochschild_betti(2, 4).betti;
  const V generic = real_betti_alternating(b).betti;
  const V hom = real_betti_homology_oracle(b).betti;
  const bool counts = count_alt_hoch(2, 2) == 3 && count_alt_hoch(1, 3) == 1 && count_alt_hoch(0, 4) == 0 &&
                      count_alt_hoch(2, 4) == 2;
  o.pass = closed == V{1, 4, 5, 2} && generic == closed && hom == closed && counts;
  o.detail = "closed " + join(closed) + ", generic " + join(generic) + ", homology " + join(hom) +
             ", Alt(2,2),(1,3),(0,4),(2,4) = " + std::to_string(count_alt_hoch(2, 2)) + "," +
             std::to_string(count_alt_hoch(1, 3)) + "," + std::to_string(count_alt_hoch(0, 4)) + "," +
             std::to_string(count_alt_hoch(2, 4));
  return o;
}

// --- 3 ---------------------------------------------------------------------
Outcome hochschild_table() {
  Outcome o;
  int rows = 0, bad = 0, stretch_rows = 0, stretch_bad = 0;
  for (const auto& row : hochschild_reference()) {
    std::vector<int> ns{row.n};
    if (row.stable) ns = {row.n, row.n + 1, row.n + 2};
    for (int n : ns) {
      const bool ok = hochschild_betti(row.m, n).betti == row.betti;
      if (row.m <= 6) {
        ++rows;
        bad += !ok;
      } else {
        ++stretch_rows;
        stretch_bad += !ok;
      }
      if (!ok) o.info.push_back("row m=" + std::to_string(row.m) + " n=" + std::to_string(n) + " differs");
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(rows - bad) + "/" + std::to_string(rows) + " rows for m<=6; stretch m=7,8: " +
             std::to_string(stretch_rows - stretch_bad) + "/" + std::to_string(stretch_rows);
  return o;
}

// --- 4 ---------------------------------------------------------------------
Outcome oracle_equivalence() {
  Outcome o;
  int agree = 0;
  for (const auto& b : corpus()) {
    const auto alt = real_betti_alternating(b);
    const auto hom = real_betti_homology_oracle(b);
    if (alt.betti == hom.betti && alt.breakdown == hom.breakdown) {
      ++agree;
    } else {
      o.info.push_back("disagreement on ground of size " + std::to_string(b.ground().size()));
    }
  }
  o.pass = agree == static_cast<int>(corpus().size());
  o.detail = std::to_string(agree) + "/" + std::to_string(corpus().size()) + " instances agree per degree and per subset";
  return o;
}

// --- 5 ---------------------------------------------------------------------
Outcome concentration() {
  Outcome o;
  std::size_t checked = 0, off = 0;
  for (const auto& b : corpus()) {
    for_each_subset(b.ground(), [&](ElementSet i) {
      if (i.empty() || i.size() % 2) return;
      const BettiVector h = parity_subcomplex_homology(b, i);
      for (int d : h.support()) off += d != i.size() / 2 - 1;
      ++checked;
    });
  }
  o.pass = off == 0;
  o.detail = std::to_string(checked) + " even subsets, " + std::to_string(off) + " off-degree classes";
  return o;
}

// --- 6 ---------------------------------------------------------------------
bool omega_geq(OmegaLabel x, OmegaLabel y) {
  return (x.a >= x.b && x.b >= y.a && y.a >= y.b) || (x.a == y.a && y.a >= x.b && x.b >= y.b);
}

bool label_geq(const EdgeLabel& x, const EdgeLabel& y) {
  return x.component_max > y.component_max || (x.component_max == y.component_max && omega_geq(x.omega, y.omega));
}

template <typename T, typename Geq, typename Cmp>
bool order_axioms(const T& x, const T& y, const T& z, Geq geq, Cmp cmp) {
  if (!geq(x, x) || cmp(x, x) != Comparison::Equal) return false;
  if (geq(x, y) && geq(y, x) && !(x == y)) return false;
  if (geq(x, y) && geq(y, z) && !geq(x, z)) return false;
  const Comparison c = cmp(x, y);
  const bool ge = geq(x, y), le = geq(y, x);
  return c == (ge && le ? Comparison::Equal
               : ge     ? Comparison::Greater
               : le     ? Comparison::Less
                        : Comparison::Incomparable);
}

Outcome el_shellability() {
  Outcome o;
  const auto h = verify_el(hochschild_building_set(2, 4));
  const Chain fig{ElementSet{}, set_of({5, 6}), set_of({3, 4, 5, 6}), ElementSet::interval(1, 6)};
  bool ok = h.ok && h.top_chain == fig;
  ok &= verify_el(maximal_building_set(ElementSet::interval(1, 4))).ok;
  ok &= verify_el(maximal_building_set(ElementSet::interval(1, 6))).ok;
  int instances = 0;
  for (const auto& b : corpus()) {
    const auto r = verify_el(b);
    if (!r.ok) o.info.push_back("EL failure: " + r.failure);
    ok &= r.ok;
    ++instances;
  }
  std::mt19937_64 gen(77);
  std::uniform_int_distribution<int> coord(-10, 10);
  auto draw = [&] {
    int a = coord(gen), b = coord(gen);
    if (a < b) std::swap(a, b);
    return EdgeLabel{std::uniform_int_distribution<int>(a, 10)(gen), {a, b}};
  };
  int triples_ok = 0;
  for (int t = 0; t < 100000; ++t) {
    const EdgeLabel x = draw(), y = draw(), z = draw();
    triples_ok += order_axioms(x.omega, y.omega, z.omega, omega_geq, omega_compare) &&
                  order_axioms(x, y, z, label_geq, label_compare);
  }
  o.pass = ok && triples_ok == 100000;
  o.detail = "top chain " + chain_to_string(h.top_chain) + "; maximal [4],[6] and " + std::to_string(instances) +
             " chordal instances shellable; " + std::to_string(triples_ok) + "/100000 label triples";
  return o;
}

// --- 7 ---------------------------------------------------------------------
std::int64_t chi_by_chains(const HatPoset& p) {
  const ElementSet top = p.building_set().ground();
  std::vector<ElementSet> proper;
  for (ElementSet x : p.elements())
    if (!x.empty() && x != top) proper.push_back(x);
  std::int64_t chi = 0;
  std::function<void(std::size_t, ElementSet, int)> walk = [&](std::size_t from, ElementSet last, int len) {
    for (std::size_t i = from; i < proper.size(); ++i) {
      if (!last.is_subset_of(proper[i]) || last == proper[i]) continue;
      chi += len % 2 == 0 ? 1 : -1;
      walk(i + 1, proper[i], len + 1);
    }
  };
  walk(0, ElementSet{}, 0);
  return chi;
}

Outcome bijection_and_euler() {
  Outcome o;
  int good = 0;
  for (const auto& b : corpus()) {
    const HatPoset p(b);
    std::uint64_t free_chains = 0;
    p.for_each_maximal_chain(ElementSet{}, b.ground(), [&](const Chain& c) { free_chains += p.decreasing_positions(c).empty(); });
    const auto alt = alt_histogram(p);
    const int k = b.ground().size() / 2;
    const std::int64_t chi = chi_by_chains(p);
    const std::int64_t sign = (k - 2) % 2 == 0 ? 1 : -1;
    const bool ok = free_chains == oracle::alternating_b_count(b.members(), b.ground()) && alt.size() == static_cast<std::size_t>(k) &&
                    alt.back() == 1 && chi == static_cast<std::int64_t>(alt.back()) + sign * static_cast<std::int64_t>(alt[0]) &&
                    euler_identity_check(b).chi == chi;
    good += ok;
  }
  o.pass = good == static_cast<int>(corpus().size());
  o.detail = std::to_string(good) + "/" + std::to_string(corpus().size()) + " instances";
  return o;
}

// --- 8 ---------------------------------------------------------------------
Outcome permutohedron() {
  Outcome o;
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    V want;
    for (int k = 0; 2 * k <= n + 1; ++k) want.push_back(oracle::binom(n + 1, 2 * k) * oracle::zigzag(2 * k));
    std::string tsv = "k\tbeta\n";
    for (std::size_t k = 0; k < want.size(); ++k) tsv += std::to_string(k) + "\t" + std::to_string(want[k]) + "\n";
    const bool row = run_cli({"betti", "--complete", std::to_string(n + 1)}) == tsv;
    if (!row) o.info.push_back("K_" + std::to_string(n + 1) + " expected " + join(want));
    ok &= row;
  }
  o.pass = ok;
  o.detail = "K_2..K_7, zigzag a_2,a_4,a_6,a_8 = " + std::to_string(oracle::zigzag(2)) + "," +
             std::to_string(oracle::zigzag(4)) + "," + std::to_string(oracle::zigzag(6)) + "," + std::to_string(oracle::zigzag(8));
  if (ok) o.detail += ", K_7 " + join(real_betti_graph(complete_graph(7)).betti);
  return o;
}

// --- 9 ---------------------------------------------------------------------
Outcome catalan() {
  Outcome o;
  V got;
  for (int k = 0; k <= 8; ++k) {
    got.push_back(count_312_avoiding_alternating(2 * k));
    o.pass &= got.back() == oracle::catalan(k);
  }
  o.detail = join(got);
  return o;
}

// --- 10 --------------------------------------------------------------------
Outcome cycle_counterexample() {
  Outcome o;
  const SimpleGraph c5 = cycle_graph(5);
  const auto cmp = compare_methods(graphical_building_set(c5));
  const ElementSet path = set_of({1, 2, 3, 5});
  std::uint64_t alt = 0, hom = 0;
  for (const auto& row : cmp.rows)
    if (row.subset == path) alt = row.alternating, hom = row.homology;
  const bool pair_ok = alt == 3 && hom == 2;
  const V graph = real_betti_graph(c5).betti;
  const bool totals_ok = graph == cmp.homology_totals;
  o.pass = pair_ok && totals_ok;
  o.detail = "I={1,2,3,5}: alternating " + std::to_string(alt) + ", homology " + std::to_string(hom) +
             " (expected 3, 2); a-number totals " + join(graph) + (totals_ok ? " = " : " != ") + "homology " +
             join(cmp.homology_totals);
  const SimpleGraph relabeled(ElementSet::interval(1, 5), {{1, 2}, {2, 4}, {4, 3}, {3, 5}, {5, 1}});
  for (const auto& m : compare_methods(graphical_building_set(relabeled)).mismatches()) {
    o.info.push_back("cycle order 1,2,4,3,5: I=" + m.subset.to_string() + " alternating " + std::to_string(m.alternating) +
                     ", homology " + std::to_string(m.homology));
  }
  return o;
}

// --- 11 --------------------------------------------------------------------
Outcome complex_betti_check() {
  Outcome o;
  const V max4 = complex_betti(maximal_building_set(ElementSet::interval(1, 4)));
  const V p4 = complex_betti(graphical_building_set(path_graph(4)));
  bool palindromic = true;
  for (const auto& b : corpus()) {
    const V h = complex_betti(b);
    palindromic &= std::equal(h.begin(), h.end(), h.rbegin());
  }
  o.pass = max4 == V{1, 11, 11, 1} && p4 == V{1, 6, 6, 1} && palindromic;
  o.detail = "maximal [4] " + join(max4) + ", path " + join(p4) + ", palindromic on all " + std::to_string(corpus().size() + 2);
  return o;
}

// --- 12 --------------------------------------------------------------------
Outcome lemmas() {
  Outcome o;
  int l1 = 0, l2 = 0, l3 = 0, bad1 = 0, bad2 = 0, bad3 = 0;
  std::vector<BuildingSet> pool = oracle::connected_chordal_building_sets(4);
  for (std::size_t i = oracle::connected_chordal_building_sets(4).size(); i < corpus().size(); i += 4) pool.push_back(corpus()[i]);
  for (const auto& b : pool) {
    const HatPoset p(b);
    const bool same = reduced_betti(p.proper_part_order_complex()) == reduced_betti(even_complex(b).complex);
    bad1 += !same;
    ++l1;
    for_each_subset(b.ground(), [&](ElementSet i) {
      if (i.empty() || i.size() % 2) return;
      const BuildingSet r = b.restrict(i);
      const BettiVector lhs = reduced_betti(induced_parity_subcomplex(b, i).complex);
      bad2 += !(lhs == reduced_betti(odd_complex(r).complex));
      ++l2;
      if (r.has_odd_component()) {
        bad3 += !lhs.all_zero() || !reduced_betti(odd_complex(r).complex).all_zero();
        ++l3;
      }
    });
  }
  o.pass = bad1 + bad2 + bad3 == 0;
  o.detail = std::to_string(l1 - bad1) + "/" + std::to_string(l1) + " order/even pairs, " + std::to_string(l2 - bad2) + "/" +
             std::to_string(l2) + " parity/odd pairs, " + std::to_string(l3 - bad3) + "/" + std::to_string(l3) +
             " odd-component subsets contractible";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "path P_6 table, both methods with breakdown", path_six, 1.0},
      {2, "Hoch(2,4) by closed form, generic and homology", hochschild_two_four, 5.0},
      {3, "Hochschild table, m <= 6", hochschild_table, 300.0},
      {4, "alternating = homology on [4] exhaustive and 100 random [6]", oracle_equivalence, 600.0},
      {5, "homology concentrated in degree |I|/2 - 1", concentration, 600.0},
      {6, "EL-shellability and label order axioms", el_shellability, 600.0},
      {7, "chain bijection and Euler characteristic identity", bijection_and_euler, 600.0},
      {8, "complete graphs against zigzag numbers", permutohedron, 60.0},
      {9, "312-avoiding alternating counts are Catalan", catalan, 60.0},
      {10, "cyclic C_5: (3, 2) on the induced 4-path, totals agree", cycle_counterexample, 60.0},
      {11, "complex Betti numbers, palindromic", complex_betti_check, 60.0},
      {12, "homotopy-level lemma checks", lemmas, 600.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " [over budget]";
    }
    failures += !o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << o.detail << " (" << secs << " s)";
    std::cout << line.str() << '\n';
    for (const auto& i : o.info) std::cout << "      info: " << i << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << '\n';
  return failures == 0 ? 0 : 1;
}
