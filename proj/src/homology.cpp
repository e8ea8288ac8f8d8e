#include "nestobetti/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>
#include <random>

#include "nestobetti/error.hpp"

namespace nestobetti {

namespace {

using Column = IntMatrix::Column;

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// ca * c - cp * p, dropping cancelled entries.
Column combine(std::int64_t ca, const Column& c, std::int64_t cp, const Column& p) {
  Column out;
  out.reserve(c.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < p.size()) {
    if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
      out.emplace_back(c[i].first, checked_mul(ca, c[i].second));
      ++i;
    } else if (i == c.size() || p[j].first < c[i].first) {
      out.emplace_back(p[j].first, checked_mul(-cp, p[j].second));
      ++j;
    } else {
      const std::int64_t v = checked_sub(checked_mul(ca, c[i].second), checked_mul(cp, p[j].second));
      if (v != 0) out.emplace_back(c[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

void remove_content(Column& c) {
  std::int64_t g = 0;
  for (const auto& [row, v] : c) {
    if (v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    g = std::gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& e : c) e.second /= g;
  }
}

std::size_t rank_sparse_int64(const IntMatrix& m) {
  std::vector<std::int32_t> pivot_of_row(m.rows, -1);
  std::vector<Column> reduced;
  for (const Column& original : m.columns) {
    Column c = original;
    remove_content(c);
    while (!c.empty()) {
      const auto [low, a] = c.back();
      const std::int32_t pi = pivot_of_row[low];
      if (pi < 0) {
        pivot_of_row[low] = static_cast<std::int32_t>(reduced.size());
        reduced.push_back(std::move(c));
        break;
      }
      const Column& p = reduced[static_cast<std::size_t>(pi)];
      const std::int64_t b = p.back().second;
      const std::int64_t g = std::gcd(a, b);
      c = combine(b / g, c, a / g, p);
      remove_content(c);
    }
  }
  return reduced.size();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t to_residue(std::int64_t v, std::uint64_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

}  // namespace

std::vector<std::vector<std::int64_t>> IntMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) out[r][c] = v;
  return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
  IntMatrix out;
  out.rows = rows;
  out.cols = other.cols;
  out.columns.resize(other.cols);
  for (std::size_t c = 0; c < other.cols; ++c) {
    std::vector<std::int64_t> acc(rows, 0);
    for (const auto& [k, v] : other.columns[c])
      for (const auto& [r, w] : columns[k]) acc[r] += v * w;
    for (std::size_t r = 0; r < rows; ++r)
      if (acc[r] != 0) out.columns[c].emplace_back(static_cast<std::uint32_t>(r), acc[r]);
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const Column& c) { return c.empty(); });
}

bool ChainComplexMatrices::squares_to_zero() const {
  for (std::size_t d = 2; d < boundary.size(); ++d) {
    if (!boundary[d - 1].multiply(boundary[d]).is_zero()) return false;
  }
  return true;
}

ChainComplexMatrices boundary_matrices(const SimplicialComplex& k) {
  ChainComplexMatrices out;
  if (k.is_void()) return out;
  out.boundary.resize(static_cast<std::size_t>(k.dimension()) + 2);
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto& faces = k.faces(d);
    const auto& lower = k.faces(d - 1);
    IntMatrix& m = out.boundary[static_cast<std::size_t>(d) + 1];
    m.rows = lower.size();
    m.cols = faces.size();
    m.columns.resize(faces.size());
    for (std::size_t c = 0; c < faces.size(); ++c) {
      const auto& f = faces[c];
      Column& col = m.columns[c];
      SimplicialComplex::Face g(f.size() - 1);
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != skip) g[w++] = f[i];
        const auto it = std::lower_bound(lower.begin(), lower.end(), g);
        col.emplace_back(static_cast<std::uint32_t>(it - lower.begin()), skip % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
  }
  return out;
}

std::size_t rank_exact(const IntMatrix& m) {
  try {
    return rank_sparse_int64(m);
  } catch (const Overflow&) {
    return rank_bareiss(m);
  }
}

std::size_t rank_bareiss(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols));
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) a[r][c] = v;

  std::size_t rank = 0;
  cpp_int prev = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && a[piv][col] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t p) {
  using ModColumn = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<std::int32_t> pivot_of_row(m.rows, -1);
  std::vector<ModColumn> reduced;
  for (const Column& original : m.columns) {
    ModColumn c;
    for (const auto& [r, v] : original) {
      const std::uint64_t x = to_residue(v, p);
      if (x != 0) c.emplace_back(r, x);
    }
    while (!c.empty()) {
      const auto [low, a] = c.back();
      const std::int32_t pi = pivot_of_row[low];
      if (pi < 0) {
        // Scale so the pivot entry is 1.
        const std::uint64_t inv = pow_mod(a, p - 2, p);
        for (auto& e : c) e.second = mul_mod(e.second, inv, p);
        pivot_of_row[low] = static_cast<std::int32_t>(reduced.size());
        reduced.push_back(std::move(c));
        break;
      }
      const ModColumn& q = reduced[static_cast<std::size_t>(pi)];
      ModColumn next;
      std::size_t i = 0, j = 0;
      while (i < c.size() || j < q.size()) {
        if (j == q.size() || (i < c.size() && c[i].first < q[j].first)) {
          next.push_back(c[i++]);
        } else {
          const std::uint64_t sub = mul_mod(a, q[j].second, p);
          const bool both = i < c.size() && c[i].first == q[j].first;
          const std::uint64_t base = both ? c[i].second : 0;
          const std::uint64_t v = base >= sub ? base - sub : base + (p - sub);
          if (v != 0) next.emplace_back(q[j].first, v);
          if (both) ++i;
          ++j;
        }
      }
      c = std::move(next);
    }
  }
  return reduced.size();
}

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_62(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 61,
                                                    (std::uint64_t{1} << 62) - 1);
  for (;;) {
    const std::uint64_t candidate = dist(gen) | 1;
    if (is_probable_prime(candidate)) return candidate;
  }
}

BettiVector::BettiVector(std::vector<std::uint64_t> from_minus_one, bool is_void)
    : values_(std::move(from_minus_one)), void_(is_void) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

std::uint64_t BettiVector::at(int d) const {
  const int i = d + 1;
  if (i < 0 || i >= static_cast<int>(values_.size())) return 0;
  return values_[static_cast<std::size_t>(i)];
}

std::vector<int> BettiVector::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != 0) out.push_back(static_cast<int>(i) - 1);
  return out;
}

std::int64_t BettiVector::alternating_sum() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto v = static_cast<std::int64_t>(values_[i]);
    s += (i % 2 == 1) ? v : -v;  // index 0 is degree -1
  }
  return s;
}

std::string BettiVector::to_string() const {
  if (void_) return "void";
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

namespace {

std::uint64_t prefilter_prime(int which) {
  static const std::uint64_t primes[2] = {random_prime_62(0x6e6573746f), random_prime_62(0x6265747469)};
  return primes[which];
}

}  // namespace

BettiVector reduced_betti(const SimplicialComplex& k, RankMethod method) {
  if (k.is_void()) return BettiVector::void_vector();
  const ChainComplexMatrices chain = boundary_matrices(k);
  const int top = k.dimension();

  // rank[d + 1] = rank of ∂_d, with ∂_{-1} = 0 and ∂_{top+1} = 0.
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 3, 0);
  for (int d = 0; d <= top; ++d) {
    const IntMatrix& m = chain.from_dimension(d);
    std::size_t r;
    if (method == RankMethod::ModularPrefilter) {
      const std::size_t r1 = rank_mod_prime(m, prefilter_prime(0));
      const std::size_t r2 = rank_mod_prime(m, prefilter_prime(1));
      r = (r1 == r2) ? r1 : rank_exact(m);
    } else {
      r = rank_exact(m);
    }
    rank[static_cast<std::size_t>(d) + 1] = r;
  }

  std::vector<std::uint64_t> betti;
  for (int d = -1; d <= top; ++d) {
    const std::size_t f = k.face_count(d);
    const std::size_t kernel = f - rank[static_cast<std::size_t>(d) + 1];
    betti.push_back(kernel - rank[static_cast<std::size_t>(d) + 2]);
  }
  return BettiVector(std::move(betti));
}

}  // namespace nestobetti
