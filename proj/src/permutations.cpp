#include "nestobetti/permutations.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nestobetti {

namespace {

inline int top_rank(std::uint64_t mask) { return 63 - std::countl_zero(mask); }
inline std::uint64_t bit(int rank) { return std::uint64_t{1} << rank; }
inline std::uint64_t below(int rank) { return bit(rank) - 1; }

void require_in_ground(const Permutation& x, const BuildingSet& b) {
  if (!x.underlying_set().is_subset_of(b.ground())) {
    throw Error(ErrorCode::LabelOutsideGround,
                "permutation " + x.to_string() + " uses labels outside " + b.ground().to_string());
  }
}

}  // namespace

void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int v : entries_) {
    const ElementSet s = ElementSet::singleton(v);
    if (set_.intersects(s)) {
      throw Error(ErrorCode::InvalidArgument, "repeated entry " + std::to_string(v));
    }
    set_ |= s;
  }
}

int Permutation::descents() const {
  int d = 0;
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] > entries_[i + 1]) ++d;
  }
  return d;
}

std::string Permutation::to_string() const {
  const bool compact = std::all_of(entries_.begin(), entries_.end(), [](int v) { return v < 10; });
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

bool is_alternating(const Permutation& x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const bool must_fall = (i % 2 == 0);
    if (must_fall ? !(x[i] > x[i + 1]) : !(x[i] < x[i + 1])) return false;
  }
  return true;
}

bool is_312_avoiding(const Permutation& x) {
  const std::size_t n = x.size();
  for (std::size_t l = 2; l < n; ++l) {
    // Need i < j < l with x_j < x_l < x_i: track, over j, whether some earlier
    // entry exceeds x_l.
    int running_max = x[0];
    for (std::size_t j = 1; j < l; ++j) {
      if (x[j] < x[l] && x[l] < running_max) return false;
      running_max = std::max(running_max, x[j]);
    }
  }
  return true;
}

bool is_b_permutation(const Permutation& x, const BuildingSet& b) {
  require_in_ground(x, b);
  ElementSet prefix;
  for (std::size_t i = 0; i < x.size(); ++i) {
    prefix = prefix.with(x[i]);
    const ElementSet comp = b.restrict(prefix).component_of(prefix.max());
    if (!comp.contains(x[i])) return false;
  }
  return true;
}

bool is_b_permutation_by_members(const Permutation& x, const BuildingSet& b) {
  require_in_ground(x, b);
  ElementSet prefix;
  for (std::size_t i = 0; i < x.size(); ++i) {
    prefix = prefix.with(x[i]);
    const ElementSet pair = ElementSet::singleton(x[i]).with(prefix.max());
    const bool found = std::any_of(b.members().begin(), b.members().end(), [&](ElementSet m) {
      return m.is_subset_of(prefix) && pair.is_subset_of(m);
    });
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ComponentTable::ComponentTable(const BuildingSet& b, Execution exec)
    : labels_(b.ground().labels()), members_by_top_(labels_.size()) {
  for (ElementSet m : b.members()) {
    const std::uint64_t mask = to_mask(m);
    members_by_top_[top_rank(mask)].push_back(mask);
  }
  const int n = rank_count();
  if (n > kMaxTabulatedRanks) return;

  const std::int64_t size = std::int64_t{1} << n;
  table_.assign(static_cast<std::size_t>(size), 0);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 1; t < size; ++t) {
      table_[t] = static_cast<std::uint32_t>(compute(static_cast<std::uint64_t>(t)));
    }
  } else {
    for (std::int64_t t = 1; t < size; ++t) {
      table_[t] = static_cast<std::uint32_t>(compute(static_cast<std::uint64_t>(t)));
    }
  }
  tabulated_ = true;
}

std::uint64_t ComponentTable::to_mask(ElementSet set) const {
  std::uint64_t mask = 0;
  for (int label : set) {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
      throw Error(ErrorCode::LabelOutsideGround, "label " + std::to_string(label) + " not in ground");
    }
    mask |= bit(static_cast<int>(it - labels_.begin()));
  }
  return mask;
}

ElementSet ComponentTable::to_set(std::uint64_t mask) const {
  ElementSet s;
  while (mask != 0) {
    s = s.with(labels_[std::countr_zero(mask)]);
    mask &= mask - 1;
  }
  return s;
}

std::uint64_t ComponentTable::compute(std::uint64_t mask) const {
  // Members of B|_mask through the top element all have that element as their
  // maximum; their union is the component.
  std::uint64_t comp = 0;
  for (std::uint64_t m : members_by_top_[top_rank(mask)]) {
    if ((m & ~mask) == 0) comp |= m;
  }
  return comp;
}

std::uint64_t ComponentTable::max_component(std::uint64_t mask) const {
  if (mask == 0) return 0;
  return tabulated_ ? table_[mask] : compute(mask);
}

std::vector<std::uint64_t> ComponentTable::components(std::uint64_t mask) const {
  std::vector<std::uint64_t> out;
  while (mask != 0) {
    const std::uint64_t comp = max_component(mask);
    out.push_back(comp);
    mask &= ~comp;
  }
  return out;
}

bool ComponentTable::has_odd_component(std::uint64_t mask) const {
  while (mask != 0) {
    const std::uint64_t comp = max_component(mask);
    if (std::popcount(comp) % 2 == 1) return true;
    mask &= ~comp;
  }
  return false;
}

namespace {

struct AlternatingSearch {
  const ComponentTable& table;
  std::uint64_t subset;
  int length;
  std::vector<Permutation>* witnesses;
  std::vector<int> prefix;
  std::uint64_t count = 0;

  void run(std::uint64_t used, int last) {
    const int placed = static_cast<int>(prefix.size());
    if (placed == length) {
      ++count;
      if (witnesses != nullptr) {
        std::vector<int> labels;
        labels.reserve(prefix.size());
        for (int r : prefix) labels.push_back(table.label(r));
        witnesses->emplace_back(std::move(labels));
      }
      return;
    }
    std::uint64_t candidates = subset & ~used;
    if (placed > 0) {
      // Next position placed+1: even positions fall, odd positions rise.
      candidates &= (placed % 2 == 1) ? below(last) : ~below(last + 1);
    }
    while (candidates != 0) {
      const int y = std::countr_zero(candidates);
      candidates &= candidates - 1;
      const std::uint64_t next = used | bit(y);
      if ((table.max_component(next) & bit(y)) == 0) continue;
      prefix.push_back(y);
      run(next, y);
      prefix.pop_back();
    }
  }
};

}  // namespace

std::uint64_t count_alternating_in(const ComponentTable& table, std::uint64_t subset,
                                   std::vector<Permutation>* witnesses) {
  const int length = std::popcount(subset);
  if (length == 0) {
    if (witnesses != nullptr) witnesses->emplace_back();
    return 1;
  }
  if (length % 2 == 1) return 0;
  AlternatingSearch search{table, subset, length, witnesses, {}, 0};
  search.prefix.reserve(static_cast<std::size_t>(length));
  search.run(0, -1);
  return search.count;
}

std::uint64_t count_alternating_b_permutations(const BuildingSet& b,
                                               std::vector<Permutation>* witnesses) {
  if (b.ground().size() % 2 == 1) return 0;
  const ComponentTable table(b, Execution::Serial);
  return count_alternating_in(table, table.to_mask(b.ground()), witnesses);
}

DescentHistogram descent_histogram_of_b_permutations(const BuildingSet& b) {
  if (!b.is_connected()) throw Error(ErrorCode::NotConnected, "building set is not connected");
  if (!b.is_chordal()) throw Error(ErrorCode::NotChordal, "building set is not chordal");
  const int n = b.ground().size();
  constexpr int kMaxRanks = 14;
  if (n > kMaxRanks) {
    throw Error(ErrorCode::TooLarge, "descent histogram limited to grounds of at most 14 labels");
  }
  const ComponentTable table(b, Execution::Serial);
  const std::size_t states = std::size_t{1} << n;
  const auto nn = static_cast<std::size_t>(n);
  // dp[(mask * n + last) * n + descents]
  std::vector<std::uint64_t> dp(states * nn * nn, 0);
  auto at = [&](std::uint64_t mask, int last, int d) -> std::uint64_t& {
    return dp[(mask * nn + static_cast<std::size_t>(last)) * nn + static_cast<std::size_t>(d)];
  };
  for (int y = 0; y < n; ++y) at(bit(y), y, 0) = 1;
  for (std::uint64_t mask = 1; mask < states; ++mask) {
    const int placed = std::popcount(mask);
    for (int last = 0; last < n; ++last) {
      if ((mask & bit(last)) == 0) continue;
      for (int d = 0; d < placed; ++d) {
        const std::uint64_t ways = at(mask, last, d);
        if (ways == 0) continue;
        std::uint64_t free = (states - 1) & ~mask;
        while (free != 0) {
          const int y = std::countr_zero(free);
          free &= free - 1;
          const std::uint64_t next = mask | bit(y);
          if ((table.max_component(next) & bit(y)) == 0) continue;
          at(next, y, d + (y < last ? 1 : 0)) += ways;
        }
      }
    }
  }
  DescentHistogram hist(static_cast<std::size_t>(std::max(n, 1)), 0);
  for (int last = 0; last < n; ++last) {
    for (int d = 0; d < n; ++d) hist[static_cast<std::size_t>(d)] += at(states - 1, last, d);
  }
  if (n == 0) hist[0] = 1;
  while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
  return hist;
}

std::uint64_t count_alt_hoch(int s, int r) {
  if (s < 0 || r < 0) throw Error(ErrorCode::InvalidArgument, "negative Alt_Hoch parameter");
  const int length = s + r;
  if (length % 2 == 1) return 0;
  if (length == 0) return 1;
  if (s > 20 || length > 62) throw Error(ErrorCode::TooLarge, "Alt_Hoch parameters too large");

  // State: small values used (bitmask over 1..s), number j of large values
  // placed (always s+r, s+r-1, ... in that order), last value placed.
  const std::size_t masks = std::size_t{1} << s;
  const auto width = static_cast<std::size_t>(length + 1);
  const auto large_levels = static_cast<std::size_t>(r + 1);
  std::vector<std::uint64_t> dp(masks * large_levels * width, 0);
  auto at = [&](std::size_t mask, int j, int last) -> std::uint64_t& {
    return dp[(mask * large_levels + static_cast<std::size_t>(j)) * width +
              static_cast<std::size_t>(last)];
  };
  at(0, 0, 0) = 1;  // last == 0 marks the empty prefix

  for (std::size_t mask = 0; mask < masks; ++mask) {
    for (int j = 0; j <= r; ++j) {
      const int placed = std::popcount(mask) + j;
      if (placed == length) continue;
      for (int last = 0; last <= length; ++last) {
        const std::uint64_t ways = at(mask, j, last);
        if (ways == 0) continue;
        auto allowed = [&](int value) {
          if (placed == 0) return true;
          return (placed % 2 == 1) ? value < last : value > last;
        };
        for (int v = 1; v <= s; ++v) {
          const std::size_t b = std::size_t{1} << (v - 1);
          if ((mask & b) == 0 && allowed(v)) at(mask | b, j, v) += ways;
        }
        if (j < r) {
          const int next_large = length - j;
          if (allowed(next_large)) at(mask, j + 1, next_large) += ways;
        }
      }
    }
  }
  std::uint64_t total = 0;
  for (int last = 1; last <= length; ++last) total += at(masks - 1, r, last);
  return total;
}

std::uint64_t count_alt_hoch_generic(int s, int r) {
  if (s < 0 || r < 0) throw Error(ErrorCode::InvalidArgument, "negative Alt_Hoch parameter");
  if (s + r == 0) return 1;
  return count_alternating_b_permutations(hochschild_building_set(s, r));
}

namespace {

struct AvoidingSearch {
  int length;
  std::vector<Permutation>* witnesses;
  std::vector<int> prefix;
  std::uint32_t used = 0;
  std::uint64_t count = 0;

  // Appending y creates a 312 pattern iff some earlier x_j < y is preceded
  // by an x_i > y.
  bool creates_pattern(int y) const {
    int running_max = 0;
    for (int v : prefix) {
      if (v < y && y < running_max) return true;
      running_max = std::max(running_max, v);
    }
    return false;
  }

  void run() {
    const int placed = static_cast<int>(prefix.size());
    if (placed == length) {
      ++count;
      if (witnesses != nullptr) witnesses->emplace_back(prefix);
      return;
    }
    for (int y = 1; y <= length; ++y) {
      if (used & (1U << y)) continue;
      if (placed > 0) {
        const int last = prefix.back();
        if ((placed % 2 == 1) ? !(y < last) : !(y > last)) continue;
      }
      if (creates_pattern(y)) continue;
      used |= 1U << y;
      prefix.push_back(y);
      run();
      prefix.pop_back();
      used &= ~(1U << y);
    }
  }
};

}  // namespace

std::uint64_t count_312_avoiding_alternating(int length, std::vector<Permutation>* witnesses) {
  if (length < 0 || length > 30) throw Error(ErrorCode::InvalidArgument, "length out of range");
  if (length % 2 == 1) return 0;
  AvoidingSearch search{length, witnesses, {}};
  search.run();
  return search.count;
}

}  // namespace nestobetti
