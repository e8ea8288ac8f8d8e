#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "nestobetti/homology.hpp"
#include "nestobetti/nested_complex.hpp"
#include "oracles.hpp"

using namespace nestobetti;
using testing_helpers::S;
using testing_helpers::example4;
using Face = SimplicialComplex::Face;

namespace {

IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  m.columns.resize(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (std::size_t r = 0; r < m.rows; ++r)
      if (rows[r][c] != 0) m.columns[c].emplace_back(static_cast<std::uint32_t>(r), rows[r][c]);
  return m;
}

std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<cpp_rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const cpp_rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

SimplicialComplex hexagon() {
  return SimplicialComplex::from_generators(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

std::vector<std::uint64_t> oracle_betti(const SimplicialComplex& k) {
  std::vector<Face> faces;
  for (int d = -1; d <= k.dimension(); ++d)
    for (const Face& f : k.faces(d)) faces.push_back(f);
  return oracle::reduced_betti(faces);
}

SimplicialComplex random_complex(std::mt19937_64& gen, std::uint32_t n) {
  std::vector<Face> gens;
  for (int i = 0; i < 8; ++i) {
    Face f;
    for (std::uint32_t v = 0; v < n; ++v)
      if (gen() % 3 == 0) f.push_back(v);
    gens.push_back(f);
  }
  return SimplicialComplex::from_generators(n, gens);
}

}  // namespace

TEST(Boundary, Segment) {
  const auto m = boundary_matrices(SimplicialComplex::from_generators(2, {{0, 1}}));
  EXPECT_EQ(m.from_dimension(1).dense(), (std::vector<std::vector<std::int64_t>>{{-1}, {1}}));
  EXPECT_EQ(m.from_dimension(0).dense(), (std::vector<std::vector<std::int64_t>>{{1, 1}}));
  EXPECT_TRUE(m.squares_to_zero());
}

TEST(Boundary, TriangleAndHexagonRanks) {
  const auto tri = SimplicialComplex::from_generators(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto mats = boundary_matrices(tri);
  const auto& d1 = mats.from_dimension(1);
  EXPECT_EQ(d1.rows, 3u);
  EXPECT_EQ(d1.cols, 3u);
  EXPECT_EQ(rank_exact(d1), 2u);
  EXPECT_EQ(rank_exact(boundary_matrices(hexagon()).from_dimension(1)), 5u);
}

TEST(Boundary, SquaresToZeroOnNestedComplexes) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto k = nested_set_complex(oracle::random_connected_chordal(6, gen)).complex;
    const auto m = boundary_matrices(k);
    EXPECT_TRUE(m.squares_to_zero());
    for (int d = 1; d <= m.top_dimension(); ++d) EXPECT_TRUE(m.from_dimension(d - 1).multiply(m.from_dimension(d)).is_zero());
  }
}

TEST(Rank, ExactBareissModularAgreeWithRational) {
  std::mt19937_64 gen(9);
  const std::uint64_t p = random_prime_62(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + gen() % 9, c = 1 + gen() % 9;
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    const int density = 1 + static_cast<int>(gen() % 4);
    for (auto& row : rows)
      for (auto& x : row) x = (static_cast<int>(gen() % 4) < density) ? static_cast<std::int64_t>(gen() % 7) - 3 : 0;
    // Force some dependence.
    if (r > 2) {
      for (std::size_t j = 0; j < c; ++j) rows[r - 1][j] = 2 * rows[0][j] - rows[1][j];
    }
    const IntMatrix m = from_dense(rows);
    const std::size_t want = rational_rank(rows);
    EXPECT_EQ(rank_exact(m), want);
    EXPECT_EQ(rank_bareiss(m), want);
    EXPECT_EQ(rank_mod_prime(m, p), want);
  }
}

TEST(Rank, OverflowFallsBackToBigIntegers) {
  const std::int64_t big = std::int64_t{1} << 40;
  const IntMatrix m = from_dense({{big, big + 1, 3}, {big + 7, big - 5, 11}, {3 * big, 2 * big, big - 1}, {1, 2, 3}});
  EXPECT_EQ(rank_exact(m), rank_bareiss(m));
  EXPECT_EQ(rank_exact(m), 3u);
  const IntMatrix singular = from_dense({{big, big + 1}, {2 * big, 2 * big + 2}});
  EXPECT_EQ(rank_exact(singular), 1u);
}

TEST(Primes, MillerRabinAndRandomPrime) {
  EXPECT_TRUE(is_probable_prime(2));
  EXPECT_TRUE(is_probable_prime(1'000'000'007));
  EXPECT_FALSE(is_probable_prime(1));
  EXPECT_FALSE(is_probable_prime(561));  // Carmichael
  EXPECT_TRUE(is_probable_prime((std::uint64_t{1} << 61) - 1));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::uint64_t p = random_prime_62(seed);
    EXPECT_TRUE(is_probable_prime(p));
    EXPECT_GE(p, std::uint64_t{1} << 61);
    EXPECT_LT(p, std::uint64_t{1} << 62);
    EXPECT_EQ(p, random_prime_62(seed));
  }
}

TEST(BettiVector, Accessors) {
  const BettiVector v({0, 0, 2});
  EXPECT_EQ(v.at(1), 2u);
  EXPECT_EQ(v.at(5), 0u);
  EXPECT_EQ(v.support(), (std::vector<int>{1}));
  EXPECT_EQ(v.alternating_sum(), -2);
  EXPECT_FALSE(v.all_zero());
  EXPECT_TRUE(BettiVector({0, 0}).all_zero());
  EXPECT_EQ(BettiVector({0, 0}), BettiVector(std::vector<std::uint64_t>{}));
  EXPECT_TRUE(BettiVector::void_vector().is_void());
}

TEST(ReducedBetti, SmallSpaces) {
  EXPECT_EQ(reduced_betti(hexagon()).at(1), 1u);
  EXPECT_EQ(reduced_betti(hexagon()).support(), (std::vector<int>{1}));
  EXPECT_EQ(reduced_betti(SimplicialComplex::empty_complex()).at(-1), 1u);
  EXPECT_TRUE(reduced_betti(SimplicialComplex::void_complex()).is_void());
  EXPECT_TRUE(reduced_betti(SimplicialComplex::void_complex()).all_zero());
  EXPECT_TRUE(reduced_betti(SimplicialComplex::from_generators(3, {{0, 1, 2}})).all_zero());
  EXPECT_EQ(reduced_betti(SimplicialComplex::from_generators(2, {{0}, {1}})).at(0), 1u);
}

TEST(ReducedBetti, ExampleParitySubcomplexes) {
  const BuildingSet b = example4();
  const auto circle = reduced_betti(induced_parity_subcomplex(b, S({1, 2, 3, 4})).complex);
  EXPECT_EQ(circle.support(), (std::vector<int>{1}));
  EXPECT_EQ(circle.at(1), 1u);
  EXPECT_TRUE(reduced_betti(induced_parity_subcomplex(b, S({1, 2})).complex).all_zero());
}

TEST(ReducedBetti, MatchesRationalOracleOnRandomComplexes) {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = random_complex(gen, 7);
    const auto want = oracle_betti(k);
    EXPECT_EQ(reduced_betti(k, RankMethod::Exact).values(), want);
    EXPECT_EQ(reduced_betti(k, RankMethod::ModularPrefilter).values(), want);
    EXPECT_EQ(reduced_betti(k).alternating_sum(), k.reduced_euler_characteristic());
  }
}

TEST(ReducedBetti, SpheresFromNestedComplexes) {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 5; ++trial) {
    const auto k = nested_set_complex(oracle::random_connected_chordal(5, gen)).complex;
    EXPECT_EQ(reduced_betti(k).values(), oracle_betti(k));
    EXPECT_EQ(reduced_betti(k).support(), (std::vector<int>{3}));
  }
}
