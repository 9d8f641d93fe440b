#include "chernfqh/wick.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace chernfqh;

namespace {

using G = GrassmannElement<Rational>;

G source_pair(const GeneratorLayout& layout, const Rational& c) {
  const Monomial ab = (Monomial{1} << layout.alpha(0)) | (Monomial{1} << layout.beta(0));
  return G::monomial(layout.count(), ab, c);
}

}  // namespace

TEST_CASE("single layer Gaussian") {
  const GeneratorLayout layout(1, 1);
  const IntSymMatrix k{{2}};
  const G expected = G::constant(layout.count(), 2) + source_pair(layout, -1);
  CHECK(wick_bruteforce<Rational>(k, 0, layout, 0) == expected);
  CHECK(wick_closed<Rational>(k, 0, layout, 0) == expected);
  CHECK(wick_bruteforce<Rational>(k, 1, layout, 0) == G::one(layout.count()));
}

TEST_CASE("closed form examples") {
  const GeneratorLayout layout(2, 1);
  const int m = layout.count();
  CHECK(wick_closed<Rational>(IntSymMatrix::identity(2), 0, layout, 0) == G::one(m) + source_pair(layout, -2));
  CHECK(wick_bruteforce<Rational>(IntSymMatrix::identity(2), 0, layout, 0) == G::one(m) + source_pair(layout, -2));
  CHECK(wick_closed<Rational>(IntSymMatrix{{10, 3}, {3, 2}}, 3, layout, 0) == G::one(m));
  CHECK(wick_bruteforce<Rational>(IntSymMatrix{{10, 3}, {3, 2}}, 3, layout, 0) == G::one(m));

  const WickFactors f = wick_factors(IntSymMatrix{{10, 3}, {3, 2}}, 0);
  CHECK(f.det == 11);
  CHECK(f.adjugate_sum == 6);
  CHECK_THROWS_AS(wick_factors(IntSymMatrix{{1}}, 2), std::out_of_range);
  CHECK_THROWS_AS(wick_closed<Rational>(IntSymMatrix{{1}}, 0, layout, 0), std::invalid_argument);
}

TEST_CASE("singular complements stay defined") {
  const GeneratorLayout layout(2, 1);
  const int m = layout.count();
  // adj [[1,2],[2,4]] = [[4,-2],[-2,1]], entry sum 1
  CHECK(wick_bruteforce<Rational>(IntSymMatrix{{1, 2}, {2, 4}}, 0, layout, 0) == source_pair(layout, -1));
  CHECK(wick_closed<Rational>(IntSymMatrix{{1, 2}, {2, 4}}, 0, layout, 0) == source_pair(layout, -1));
  CHECK(wick_bruteforce<Rational>(IntSymMatrix{{1, 1}, {1, 1}}, 0, layout, 0) == G::zero(m));
}

TEST_CASE("source-free integral is the determinant") {
  std::mt19937_64 rng(31);
  for (int k = 1; k <= 4; ++k) {
    const GeneratorLayout layout(k, 1);
    for (int trial = 0; trial < 10; ++trial) {
      const IntSymMatrix K = oracle::random_symmetric(rng, k, -2, 3);
      const G w = wick_bruteforce<Rational>(K, 0, layout, 0);
      CHECK(w.constant_term() == Rational(oracle::permutation_det(K.matrix())));
    }
  }
}

TEST_CASE("brute force matches the closed form") {
  std::mt19937_64 rng(32);
  for (int k = 1; k <= 4; ++k) {
    const GeneratorLayout layout(k, 1);
    for (int trial = 0; trial < 15; ++trial) {
      const IntSymMatrix K = oracle::random_symmetric(rng, k, -2, 3);
      for (LayerSet s = 0; s <= full_set(k); ++s) {
        CHECK(wick_bruteforce<Rational>(K, s, layout, 0) == wick_closed<Rational>(K, s, layout, 0));
        CHECK(wick_bruteforce<CheckedInt>(K, s, layout, 0) == wick_closed<CheckedInt>(K, s, layout, 0));
      }
    }
  }
}

TEST_CASE("other cycle blocks") {
  const GeneratorLayout layout(2, 3);
  const IntSymMatrix K{{3, 1}, {1, 2}};
  for (int r = 0; r < 3; ++r)
    for (LayerSet s = 0; s < 4; ++s)
      CHECK(wick_bruteforce<Rational>(K, s, layout, r) == wick_closed<Rational>(K, s, layout, r));
}

TEST_CASE("the flipped sign is caught") {
  const GeneratorLayout layout(2, 1);
  const IntSymMatrix K{{2, 1}, {1, 2}};
  CHECK_FALSE(wick_bruteforce<Rational>(K, 0, layout, 0) ==
              wick_closed<Rational>(K, 0, layout, 0, ExponentSign::positive));
  // With I = all layers the source term is absent and the sign cannot matter.
  CHECK(wick_bruteforce<Rational>(K, 3, layout, 0) == wick_closed<Rational>(K, 3, layout, 0, ExponentSign::positive));
}
