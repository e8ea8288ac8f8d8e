#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nestobetti/simplicial_complex.hpp"

namespace nestobetti {

/// Sparse integer matrix stored by columns; each column lists (row, value)
/// with rows strictly increasing and values non-zero.
struct IntMatrix {
  using Column = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Column> columns;

  /// Row-major dense copy.
  std::vector<std::vector<std::int64_t>> dense() const;
  /// this * other (cols == other.rows).
  IntMatrix multiply(const IntMatrix& other) const;
  bool is_zero() const;
};

/// boundary[d + 1] maps d-chains to (d-1)-chains for d = 0 .. dim; boundary[0]
/// is unused and boundary[1] is the augmentation C_0 -> C_{-1}.
struct ChainComplexMatrices {
  std::vector<IntMatrix> boundary;

  const IntMatrix& from_dimension(int d) const { return boundary.at(static_cast<std::size_t>(d + 1)); }
  int top_dimension() const { return static_cast<int>(boundary.size()) - 2; }
  /// ∂_{d-1} ∘ ∂_d = 0 for every d.
  bool squares_to_zero() const;
};

ChainComplexMatrices boundary_matrices(const SimplicialComplex& k);

/// Rank over ℚ. Sparse fraction-free elimination in int64 with content
/// reduction; falls back to dense Bareiss over big integers on overflow.
std::size_t rank_exact(const IntMatrix& m);
/// Dense Bareiss elimination over arbitrary-precision integers.
std::size_t rank_bareiss(const IntMatrix& m);
/// Rank over GF(p), p an odd prime below 2^63.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t p);

bool is_probable_prime(std::uint64_t n);
/// A prime in [2^61, 2^62) drawn from a generator seeded with `seed`.
std::uint64_t random_prime_62(std::uint64_t seed);

/// Reduced Betti numbers β̃_{-1}, β̃_0, ... with trailing zeros trimmed.
class BettiVector {
 public:
  BettiVector() = default;
  BettiVector(std::vector<std::uint64_t> from_minus_one, bool is_void = false);

  static BettiVector void_vector() { return BettiVector({}, true); }

  bool is_void() const { return void_; }
  /// β̃_d for d >= -1; 0 outside the stored range.
  std::uint64_t at(int d) const;
  /// Highest degree + 1 stored (so values() has size degree_bound() + 1).
  const std::vector<std::uint64_t>& values() const { return values_; }
  bool all_zero() const { return values_.empty(); }
  /// Degrees with non-zero β̃.
  std::vector<int> support() const;
  std::int64_t alternating_sum() const;
  std::string to_string() const;

  bool operator==(const BettiVector&) const = default;

 private:
  std::vector<std::uint64_t> values_;
  bool void_ = false;
};

enum class RankMethod { Exact, ModularPrefilter };

BettiVector reduced_betti(const SimplicialComplex& k, RankMethod method = RankMethod::Exact);

}  // namespace nestobetti
