#include "chernfqh/grassmann.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace chernfqh;

namespace {

using G = GrassmannElement<Rational>;

G chi(int m, int a) { return G::generator(m, a); }

G random_element(std::mt19937_64& rng, int m, int terms, int max_degree, bool even_only) {
  std::uniform_int_distribution<Monomial> mono(0, (Monomial{1} << m) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<G::Term> out;
  while (static_cast<int>(out.size()) < terms) {
    const Monomial x = mono(rng);
    if (degree(x) > max_degree) continue;
    if (even_only && (degree(x) % 2 != 0 || x == 0)) continue;
    out.emplace_back(x, Rational(coeff(rng)));
  }
  return G::from_terms(m, out);
}

// Component of x of the given degree.
G homogeneous(const G& x, int d) {
  std::vector<G::Term> out;
  for (const auto& t : x.terms())
    if (degree(t.first) == d) out.push_back(t);
  return G::from_terms(x.generators(), out);
}

}  // namespace

TEST_CASE("merge sign") {
  CHECK(merge_sign(0b01, 0b10) == 1);
  CHECK(merge_sign(0b10, 0b01) == -1);
  CHECK(merge_sign(0b01, 0b01) == 0);
  CHECK(merge_sign(0b110, 0b001) == 1);
  CHECK(merge_sign(0b100, 0b011) == 1);
  CHECK(merge_sign(0b010, 0b101) == -1);
  CHECK(merge_sign(Monomial{1} << 63, 1) == -1);
}

TEST_CASE("products") {
  const int m = 4;
  CHECK(chi(m, 0) * chi(m, 1) == G::monomial(m, 0b11, 1));
  CHECK(chi(m, 1) * chi(m, 0) == G::monomial(m, 0b11, -1));
  CHECK((chi(m, 0) * chi(m, 0)).is_zero());
  CHECK(G::one(m) * chi(m, 2) == chi(m, 2));
  CHECK_THROWS_AS(chi(m, 4), std::out_of_range);
  CHECK_THROWS_AS(chi(3, 0) * chi(4, 0), std::invalid_argument);
  CHECK((chi(m, 0) - chi(m, 0)).is_zero());
}

TEST_CASE("associativity and graded commutativity") {
  std::mt19937_64 rng(21);
  const int m = 8;
  for (int trial = 0; trial < 50; ++trial) {
    const G x = random_element(rng, m, 6, 4, false);
    const G y = random_element(rng, m, 6, 4, false);
    const G z = random_element(rng, m, 6, 4, false);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    for (int dx = 0; dx <= 4; ++dx)
      for (int dy = 0; dy <= 4; ++dy) {
        const G hx = homogeneous(x, dx);
        const G hy = homogeneous(y, dy);
        const G swapped = hy * hx;
        CHECK(hx * hy == ((dx * dy) % 2 == 0 ? swapped : -swapped));
      }
  }
}

TEST_CASE("exponential") {
  const int m = 4;
  CHECK(gexp(G::zero(m)) == G::one(m));
  const G a = chi(m, 0) * chi(m, 1);
  const G b = chi(m, 2) * chi(m, 3);
  CHECK(gexp(a) == G::one(m) + a);
  CHECK(gexp(a + b) == G::one(m) + a + b + a * b);
  CHECK_THROWS_AS(gexp(chi(m, 0)), std::invalid_argument);
  CHECK_THROWS_AS(gexp(G::one(m) + a), std::invalid_argument);

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const G x = random_element(rng, 8, 8, 4, true);
    const G y = random_element(rng, 8, 8, 4, true);
    CHECK(gexp(x) == oracle::exp_power_series(x));
    CHECK(gexp(x + y) == gexp(x) * gexp(y));
  }
  // Integer scalars stay exact.
  using Z = GrassmannElement<Integer>;
  const Z e = Z::monomial(4, 0b0011, 2) + Z::monomial(4, 0b1100, 3);
  CHECK(gexp(e) == Z::one(4) + e + Z::monomial(4, 0b1111, 6));
}

TEST_CASE("Berezin integral") {
  const int m = 4;
  CHECK(berezin(chi(m, 2), 2) == G::one(m));
  CHECK(berezin(G::one(m), 2).is_zero());
  // int dchi_a kappa chi_a = (-1)^{deg kappa} kappa
  const G kappa = chi(m, 0) * chi(m, 3);
  CHECK(berezin(kappa * chi(m, 2), 2) == kappa);
  CHECK(berezin(chi(m, 1) * chi(m, 2), 2) == -chi(m, 1));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const G x = random_element(rng, 8, 10, 5, false);
    std::vector<G::Term> without;
    for (const auto& t : x.terms())
      if (!(t.first & (Monomial{1} << 4))) without.push_back(t);
    const G y = G::from_terms(8, without);
    CHECK(berezin(chi(8, 4) * y, 4) == y);
    CHECK(berezin(berezin(x, 4), 4).is_zero());
  }
}

TEST_CASE("single block measure") {
  const GeneratorLayout layout(1, 1);
  const int m = layout.count();
  const int psi = layout.psi(0, 0);
  const int bar = layout.psibar(0, 0);
  const auto measure = layout.block_measure(0);
  const std::span<const int> d(measure);
  CHECK(berezin_multi(chi(m, bar) * chi(m, psi), d) == G::one(m));
  CHECK(berezin_multi(chi(m, psi) * chi(m, bar), d) == -G::one(m));
  CHECK(berezin_multi(G::one(m), d).is_zero());
}

TEST_CASE("generator layout") {
  const GeneratorLayout layout(2, 3);
  CHECK(layout.count() == 18);
  CHECK(layout.psi(0, 0) == 0);
  CHECK(layout.psibar(0, 0) == 1);
  CHECK(layout.psi(0, 1) == 2);
  CHECK(layout.psi(1, 0) == 6);
  CHECK(layout.psibar(1, 2) == 11);
  CHECK(layout.alpha(0) == 12);
  CHECK(layout.beta(2) == 17);
  CHECK(layout.block_measure(1) == std::vector<int>{2, 3, 8, 9});
  CHECK(layout.full_measure().size() == 12);
  CHECK(layout.fermion_mask() == 0xFFF);
  CHECK(layout.source_mask() == Monomial{0x3F000});
  CHECK(layout.block_mask(0) == Monomial{0b11000011});
  for (int a = 0; a < layout.count(); ++a) CHECK(layout.position(layout.generator(a)) == a);
  CHECK(layout.name(1) == "psibar1^1");
  CHECK(layout.name(13) == "beta^1");
  CHECK_THROWS(layout.generator(18));

  const GeneratorLayout single(1, 1);
  const auto x = G::constant(4, 2) - chi(4, single.alpha(0)) * chi(4, single.beta(0));
  CHECK(format(x, single) == "2 - alpha^1*beta^1");
  CHECK(format(G::zero(4), single) == "0");
}
