#include "nestobetti/hat_poset.hpp"

#include <algorithm>

namespace nestobetti {

namespace {

// (x1, x2) >= (y1, y2) under R1 or R2.
bool omega_geq(OmegaLabel x, OmegaLabel y) {
  const bool r1 = x.a >= x.b && x.b >= y.a && y.a >= y.b;
  const bool r2 = x.a == y.a && x.a >= x.b && x.b >= y.b;
  return r1 || r2;
}

}  // namespace

std::string EdgeLabel::to_string() const {
  return "(" + std::to_string(component_max) + ",(" + std::to_string(omega.a) + "," +
         std::to_string(omega.b) + "))";
}

Comparison omega_compare(OmegaLabel alpha, OmegaLabel beta) {
  const bool ge = omega_geq(alpha, beta);
  const bool le = omega_geq(beta, alpha);
  if (ge && le) return Comparison::Equal;
  if (ge) return Comparison::Greater;
  if (le) return Comparison::Less;
  return Comparison::Incomparable;
}

Comparison label_compare(const EdgeLabel& a, const EdgeLabel& b) {
  if (a.component_max > b.component_max) return Comparison::Greater;
  if (a.component_max < b.component_max) return Comparison::Less;
  return omega_compare(a.omega, b.omega);
}

std::string chain_to_string(const Chain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) out += ' ';
    out += chain[i].to_string();
  }
  return out;
}

HatPoset::HatPoset(const BuildingSet& b) : b_(b) {
  if (b.ground().size() > ComponentTable::kMaxTabulatedRanks) {
    throw Error(ErrorCode::GroundTooLarge, "ground set too large for the subset sweep");
  }
  const ComponentTable table(b, Execution::Serial);
  const int n = table.rank_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) % 2 == 0 && !table.has_odd_component(mask)) {
      elements_.push_back(table.to_set(mask));
    }
  }
  std::sort(elements_.begin(), elements_.end(), CanonicalLess{});
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].bits(), i);

  up_.resize(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    const ElementSet lower = elements_[i];
    const std::vector<int> rest = (b.ground() - lower).labels();
    for (std::size_t p = 0; p < rest.size(); ++p) {
      for (std::size_t q = p + 1; q < rest.size(); ++q) {
        const ElementSet added = ElementSet::singleton(rest[p]).with(rest[q]);
        const ElementSet upper = lower | added;
        const auto it = index_.find(upper.bits());
        if (it == index_.end()) continue;
        // The component of B|_upper holding the added pair.
        const std::uint64_t pair_bit = table.to_mask(ElementSet::singleton(rest[q]));
        ElementSet family;
        for (std::uint64_t comp : table.components(table.to_mask(upper))) {
          if (comp & pair_bit) family = table.to_set(comp);
        }
        up_[i].push_back({it->second, EdgeLabel{family.max(), OmegaLabel{rest[q], rest[p]}}});
      }
    }
    std::sort(up_[i].begin(), up_[i].end(),
              [](const Cover& x, const Cover& y) { return x.target < y.target; });
  }
}

std::uint32_t HatPoset::index_of(ElementSet s) const {
  const auto it = index_.find(s.bits());
  if (it == index_.end()) {
    throw Error(ErrorCode::EmptyInterval, s.to_string() + " is not an element of the poset");
  }
  return it->second;
}

std::size_t HatPoset::edge_count() const {
  std::size_t n = 0;
  for (const auto& u : up_) n += u.size();
  return n;
}

EdgeLabel HatPoset::label(ElementSet lower, ElementSet upper) const {
  const auto it = index_.find(lower.bits());
  const auto jt = index_.find(upper.bits());
  if (it != index_.end() && jt != index_.end()) {
    for (const Cover& c : up_[it->second]) {
      if (c.target == jt->second) return c.label;
    }
  }
  throw Error(ErrorCode::InvalidArgument,
              lower.to_string() + " -> " + upper.to_string() + " is not a cover");
}

void HatPoset::for_each_maximal_chain(ElementSet bottom, ElementSet top,
                                      const std::function<void(const Chain&)>& visit) const {
  if (!contains(bottom) || !contains(top) || !bottom.is_subset_of(top)) {
    throw Error(ErrorCode::EmptyInterval,
                "[" + bottom.to_string() + ", " + top.to_string() + "] is not an interval");
  }
  const std::uint32_t target = index_of(top);
  Chain chain{bottom};
  auto walk = [&](auto&& self, std::uint32_t at) -> void {
    if (at == target) {
      visit(chain);
      return;
    }
    for (const Cover& c : up_[at]) {
      if (!elements_[c.target].is_subset_of(top)) continue;
      chain.push_back(elements_[c.target]);
      self(self, c.target);
      chain.pop_back();
    }
  };
  walk(walk, index_of(bottom));
}

std::vector<Chain> HatPoset::maximal_chains(ElementSet bottom, ElementSet top) const {
  std::vector<Chain> out;
  for_each_maximal_chain(bottom, top, [&](const Chain& c) { out.push_back(c); });
  return out;
}

std::vector<EdgeLabel> HatPoset::labels_of(const Chain& chain) const {
  std::vector<EdgeLabel> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.push_back(label(chain[i], chain[i + 1]));
  return out;
}

std::vector<int> HatPoset::decreasing_positions(const Chain& chain) const {
  const auto labels = labels_of(chain);
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    if (label_compare(labels[i], labels[i + 1]) == Comparison::Greater) {
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

bool HatPoset::is_decreasing(const Chain& chain) const {
  const auto labels = labels_of(chain);
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    const Comparison c = label_compare(labels[i], labels[i + 1]);
    if (c != Comparison::Greater && c != Comparison::Equal) return false;
  }
  return true;
}

SimplicialComplex HatPoset::proper_part_order_complex() const {
  std::vector<ElementSet> proper;
  for (ElementSet e : elements_) {
    if (!e.empty() && e != b_.ground()) proper.push_back(e);
  }
  return order_complex(static_cast<std::uint32_t>(proper.size()),
                       [&](std::uint32_t a, std::uint32_t b) {
                         return proper[a] != proper[b] && proper[a].is_subset_of(proper[b]);
                       });
}

ElReport verify_el(const BuildingSet& b, int max_ground) {
  if (b.ground().size() > max_ground) {
    throw Error(ErrorCode::GroundTooLarge, "EL verification is limited to ground sets of size " +
                                               std::to_string(max_ground));
  }
  if (b.has_odd_component()) {
    throw Error(ErrorCode::Unbounded, "building set has an odd-order component");
  }
  const HatPoset p(b);
  ElReport report;
  const auto& el = p.elements();

  for (ElementSet bottom : el) {
    for (ElementSet top : el) {
      if (bottom == top || !bottom.is_subset_of(top)) continue;
      std::vector<std::vector<EdgeLabel>> sequences;
      std::vector<Chain> chains;
      p.for_each_maximal_chain(bottom, top, [&](const Chain& c) {
        chains.push_back(c);
        sequences.push_back(p.labels_of(c));
      });

      std::vector<std::size_t> decreasing;
      for (std::size_t i = 0; i < chains.size(); ++i) {
        if (p.is_decreasing(chains[i])) decreasing.push_back(i);
      }
      auto fail = [&](std::string why, Chain witness = {}) {
        report.ok = false;
        report.failing_interval = IntervalCertificate{bottom, top, std::move(witness)};
        report.failure = std::move(why);
        report.certificates.clear();
        report.top_chain.clear();
        return report;
      };
      if (decreasing.size() != 1) {
        return fail(std::to_string(decreasing.size()) + " decreasing chains");
      }
      const auto& best = sequences[decreasing[0]];
      for (std::size_t i = 0; i < chains.size(); ++i) {
        if (i == decreasing[0]) continue;
        std::size_t t = 0;
        while (t < best.size() && best[t] == sequences[i][t]) ++t;
        if (t == best.size()) return fail("two chains share the decreasing label sequence");
        if (label_compare(best[t], sequences[i][t]) != Comparison::Greater) {
          return fail("chain " + chain_to_string(chains[i]) +
                          " is not lexicographically below the decreasing chain",
                      chains[i]);
        }
      }
      report.certificates.push_back({bottom, top, chains[decreasing[0]]});
      if (bottom.empty() && top == b.ground()) report.top_chain = chains[decreasing[0]];
    }
  }
  return report;
}

std::vector<std::uint64_t> alt_histogram(const HatPoset& p) {
  if (!p.bounded()) throw Error(ErrorCode::Unbounded, "poset has no top element");
  const int k = p.building_set().ground().size() / 2;
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(std::max(k, 1)), 0);
  p.for_each_maximal_chain(ElementSet{}, p.building_set().ground(), [&](const Chain& c) {
    const std::size_t d = p.decreasing_positions(c).size();
    if (d >= hist.size()) hist.resize(d + 1, 0);
    ++hist[d];
  });
  return hist;
}

Permutation chain_to_permutation(const HatPoset& p, const Chain& chain) {
  const ElementSet ground = p.building_set().ground();
  const bool full = !chain.empty() && chain.front().empty() && chain.back() == ground &&
                    chain.size() == static_cast<std::size_t>(ground.size() / 2) + 1;
  // labels_of throws for non-covers.
  if (!full || !p.decreasing_positions(chain).empty()) {
    throw Error(ErrorCode::ChainHasDecreasingPosition,
                "chain " + chain_to_string(chain) +
                    " is not a full maximal chain without decreasing positions");
  }
  std::vector<int> entries;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const ElementSet added = chain[i] - chain[i - 1];
    entries.push_back(added.max());
    entries.push_back(added.min());
  }
  return Permutation(std::move(entries));
}

Chain permutation_to_chain(const Permutation& x, const BuildingSet& b) {
  if (x.underlying_set() != b.ground() || x.size() % 2 != 0 || !is_alternating(x) ||
      !is_b_permutation(x, b)) {
    throw Error(ErrorCode::NotAlternatingBPermutation,
                x.to_string() + " is not an alternating B-permutation of the ground set");
  }
  Chain chain{ElementSet{}};
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    chain.push_back(chain.back().with(x[i]).with(x[i + 1]));
  }
  return chain;
}

EulerIdentity euler_identity_check(const BuildingSet& b) {
  if (!b.is_chordal()) throw Error(ErrorCode::NotChordal, "building set is not chordal");
  if (b.has_odd_component()) throw Error(ErrorCode::Unbounded, "odd-order component present");
  const int k = b.ground().size() / 2;
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "identity needs |ground| >= 4");
  const HatPoset p(b);
  const auto hist = alt_histogram(p);
  EulerIdentity id;
  id.chi = p.proper_part_order_complex().euler_characteristic();
  id.alt_top = static_cast<std::int64_t>(hist.size() >= static_cast<std::size_t>(k) ? hist[k - 1] : 0);
  id.alt_zero = static_cast<std::int64_t>(hist[0]);
  id.rhs = id.alt_top + ((k - 2) % 2 == 0 ? id.alt_zero : -id.alt_zero);
  return id;
}

}  // namespace nestobetti
