#include "nestobetti/betti.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

#include "nestobetti/nested_complex.hpp"
#include "nestobetti/permutations.hpp"

namespace nestobetti {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_connected(const BuildingSet& b) {
  if (!b.is_connected()) throw Error(ErrorCode::NotConnected, "building set is not connected");
}

void require_chordal(const BuildingSet& b) {
  if (const auto report = b.is_chordal(); !report) {
    throw Error(ErrorCode::NotChordal, "building set is not chordal: member " +
                                           report.witness->member.to_string() + " lacks tail " +
                                           report.witness->missing_tail.to_string());
  }
}

std::vector<std::uint64_t> even_masks(int ranks) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << ranks); ++m) {
    if (std::popcount(m) % 2 == 0) out.push_back(m);
  }
  return out;
}

// Runs body(i) for i in [0, n) under the chosen execution, rethrowing the
// first exception after the loop.
template <typename Body>
void sweep(std::size_t n, Execution exec, Body&& body) {
  std::exception_ptr failure;
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(nestobetti_sweep_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
  if (failure) std::rethrow_exception(failure);
}

void add_at(std::vector<std::uint64_t>& v, int k, std::uint64_t x) {
  if (static_cast<std::size_t>(k) >= v.size()) v.resize(static_cast<std::size_t>(k) + 1, 0);
  v[static_cast<std::size_t>(k)] += x;
}

void trim(std::vector<std::uint64_t>& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
}

void sort_breakdown(std::vector<SubsetContribution>& rows) {
  std::sort(rows.begin(), rows.end(), [](const SubsetContribution& a, const SubsetContribution& b) {
    if (a.subset != b.subset) return canonical_less(a.subset, b.subset);
    return a.k < b.k;
  });
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Alternating: return "alternating";
    case Method::Homology: return "homology";
    case Method::Both: return "both";
    case Method::ClosedForm: return "closed-form";
    case Method::ANumber: return "a-number";
  }
  return "?";
}

std::vector<std::uint64_t> BettiReport::breakdown_totals() const {
  std::vector<std::uint64_t> out;
  for (const auto& row : breakdown) add_at(out, row.k, row.count);
  trim(out);
  return out;
}

BettiReport real_betti_alternating(const BuildingSet& b, Execution exec) {
  const auto start = Clock::now();
  require_connected(b);
  require_chordal(b);
  const ComponentTable table(b, exec);
  const auto masks = even_masks(table.rank_count());
  std::vector<std::uint64_t> counts(masks.size(), 0);
  sweep(masks.size(), exec, [&](std::size_t i) {
    // Odd components admit no alternating permutation.
    if (!table.has_odd_component(masks[i])) counts[i] = count_alternating_in(table, masks[i]);
  });

  BettiReport report;
  report.method = Method::Alternating;
  report.betti = {1};
  report.breakdown.push_back({ElementSet{}, 0, 1});
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (counts[i] == 0) continue;
    const int k = std::popcount(masks[i]) / 2;
    add_at(report.betti, k, counts[i]);
    report.breakdown.push_back({table.to_set(masks[i]), k, counts[i]});
  }
  sort_breakdown(report.breakdown);
  trim(report.betti);
  report.seconds = seconds_since(start);
  return report;
}

BettiVector parity_subcomplex_homology(const BuildingSet& b, ElementSet subset, RankMethod rank) {
  return reduced_betti(induced_parity_subcomplex(b, subset).complex, rank);
}

BettiReport real_betti_homology_oracle(const BuildingSet& b, Execution exec, RankMethod rank) {
  const auto start = Clock::now();
  require_connected(b);
  const ComponentTable table(b, Execution::Serial);
  const auto masks = even_masks(table.rank_count());
  std::vector<BettiVector> homology(masks.size());
  sweep(masks.size(), exec, [&](std::size_t i) {
    homology[i] = parity_subcomplex_homology(b, table.to_set(masks[i]), rank);
  });

  BettiReport report;
  report.method = Method::Homology;
  report.betti = {1};
  report.breakdown.push_back({ElementSet{}, 0, 1});
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (int d : homology[i].support()) {
      const std::uint64_t x = homology[i].at(d);
      add_at(report.betti, d + 1, x);
      report.breakdown.push_back({table.to_set(masks[i]), d + 1, x});
    }
  }
  sort_breakdown(report.breakdown);
  trim(report.betti);
  report.seconds = seconds_since(start);
  return report;
}

std::vector<std::uint64_t> complex_betti(const BuildingSet& b) {
  return descent_histogram_of_b_permutations(b);
}

namespace {

// sa of every induced subgraph, indexed by rank mask over g's sorted labels.
std::vector<std::int64_t> signed_a_table(const SimpleGraph& g, int bound) {
  const std::vector<int> labels = g.vertices().labels();
  const int n = static_cast<int>(labels.size());
  if (n > bound) {
    throw Error(ErrorCode::TooLarge, "a-number limited to " + std::to_string(bound) + " vertices");
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]))
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;

  std::vector<std::int64_t> sa(full + 1, 0);
  sa[0] = 1;
  // Subsets of m are numerically smaller than m, so ascending order works.
  for (std::uint64_t m = 1; m <= full; ++m) {
    std::uint64_t comp = m & (~m + 1);
    for (std::uint64_t frontier = comp; frontier != 0;) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & m & ~comp;
      comp |= frontier;
    }
    if (comp != m) {
      sa[m] = sa[comp] * sa[m & ~comp];
    } else if (std::popcount(m) % 2 == 1) {
      sa[m] = 0;
    } else {
      std::int64_t sum = 0;
      for (std::uint64_t sub = (m - 1) & m;; sub = (sub - 1) & m) {
        sum += sa[sub];
        if (sub == 0) break;
      }
      sa[m] = -sum;
    }
  }
  return sa;
}

}  // namespace

std::int64_t signed_a_number(const SimpleGraph& g, int bound) {
  return signed_a_table(g, bound).back();
}

std::uint64_t a_number(const SimpleGraph& g, int bound) {
  const std::int64_t s = signed_a_number(g, bound);
  return static_cast<std::uint64_t>(s < 0 ? -s : s);
}

BettiReport real_betti_graph(const SimpleGraph& g, int bound) {
  const auto start = Clock::now();
  const std::vector<std::int64_t> sa = signed_a_table(g, bound);
  const std::vector<int> labels = g.vertices().labels();
  BettiReport report;
  report.method = Method::ANumber;
  report.betti = {1};
  report.breakdown.push_back({ElementSet{}, 0, 1});
  for (std::uint64_t m = 1; m < sa.size(); ++m) {
    if (std::popcount(m) % 2 == 1 || sa[m] == 0) continue;
    ElementSet subset;
    for (std::uint64_t f = m; f != 0; f &= f - 1) subset = subset.with(labels[static_cast<std::size_t>(std::countr_zero(f))]);
    const auto a = static_cast<std::uint64_t>(sa[m] < 0 ? -sa[m] : sa[m]);
    add_at(report.betti, subset.size() / 2, a);
    report.breakdown.push_back({subset, subset.size() / 2, a});
  }
  sort_breakdown(report.breakdown);
  trim(report.betti);
  report.seconds = seconds_since(start);
  return report;
}

std::vector<HochschildTerm> hochschild_terms(int m, int n, int k) {
  std::vector<HochschildTerm> out;
  for (int s = 0; s <= std::min(m, 2 * k); ++s) {
    const int r = 2 * k - s;
    if (r > n) continue;
    const std::uint64_t alt = count_alt_hoch(s, r);
    if (alt == 0) continue;
    out.push_back({s, r, binomial(m, s), alt});
  }
  return out;
}

BettiReport hochschild_betti(int m, int n) {
  const auto start = Clock::now();
  if (m < 0 || n < 0 || m + n < 1) {
    throw Error(ErrorCode::InvalidArgument, "Hochschild parameters need m, n >= 0 and m + n >= 1");
  }
  BettiReport report;
  report.method = Method::ClosedForm;
  for (int k = 0; 2 * k <= m + n; ++k) {
    std::uint64_t total = 0;
    for (const auto& t : hochschild_terms(m, n, k)) total += t.binomial * t.alt;
    report.betti.push_back(total);
  }
  trim(report.betti);
  report.seconds = seconds_since(start);
  return report;
}

bool hochschild_stability_check(int m) {
  const auto base = hochschild_betti(m, m + 2).betti;
  return hochschild_betti(m, m + 3).betti == base && hochschild_betti(m, m + 4).betti == base;
}

bool MethodComparison::all_agree() const {
  return totals_agree() &&
         std::all_of(rows.begin(), rows.end(), [](const SubsetComparison& r) { return r.agree(); });
}

std::vector<SubsetComparison> MethodComparison::mismatches() const {
  std::vector<SubsetComparison> out;
  for (const auto& r : rows)
    if (!r.agree()) out.push_back(r);
  return out;
}

MethodComparison compare_methods(const BuildingSet& b, Execution exec) {
  require_connected(b);
  const ComponentTable table(b, exec);
  const auto masks = even_masks(table.rank_count());
  std::vector<std::uint64_t> alt(masks.size(), 0);
  std::vector<BettiVector> homology(masks.size());
  sweep(masks.size(), exec, [&](std::size_t i) {
    alt[i] = table.has_odd_component(masks[i]) ? 0 : count_alternating_in(table, masks[i]);
    homology[i] = parity_subcomplex_homology(b, table.to_set(masks[i]));
  });

  MethodComparison out;
  out.chordal = static_cast<bool>(b.is_chordal());
  out.alternating_totals = {1};
  out.homology_totals = {1};
  for (std::size_t i = 0; i < masks.size(); ++i) {
    SubsetComparison row;
    row.subset = table.to_set(masks[i]);
    row.k = row.subset.size() / 2;
    row.alternating = alt[i];
    row.homology = homology[i].at(row.k - 1);
    for (int d : homology[i].support()) {
      if (d != row.k - 1) row.off_degree += homology[i].at(d);
      add_at(out.homology_totals, d + 1, homology[i].at(d));
    }
    add_at(out.alternating_totals, row.k, alt[i]);
    if (row.alternating != 0 || row.homology != 0 || row.off_degree != 0) out.rows.push_back(row);
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const SubsetComparison& x, const SubsetComparison& y) {
    return canonical_less(x.subset, y.subset);
  });
  trim(out.alternating_totals);
  trim(out.homology_totals);
  return out;
}

bool is_unimodal(const std::vector<std::uint64_t>& seq) {
  std::size_t i = 0;
  while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
  while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
  return i + 1 >= seq.size();
}

bool is_log_concave(const std::vector<std::uint64_t>& seq) {
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    const auto mid = static_cast<unsigned __int128>(seq[i]) * seq[i];
    if (mid < static_cast<unsigned __int128>(seq[i - 1]) * seq[i + 1]) return false;
  }
  return true;
}

}  // namespace nestobetti
