#pragma once

#include "chernfqh/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chernfqh {

/// Sorted generator subset; bit a set means generator number a is present.
using Monomial = std::uint64_t;

inline constexpr int kMaxGenerators = 64;

inline int degree(Monomial m) { return std::popcount(m); }

/// Sign of m1 * m2 after sorting the concatenation: (-1)^{#pairs (x in m1, y in m2) with x > y}.
/// Zero when the monomials share a generator.
inline int merge_sign(Monomial m1, Monomial m2) {
  if ((m1 & m2) != 0) return 0;
  int inversions = 0;
  for (Monomial rest = m2; rest != 0; rest &= rest - 1) {
    const int y = std::countr_zero(rest);
    inversions += std::popcount(y >= 63 ? Monomial{0} : (m1 >> (y + 1)));
  }
  return (inversions & 1) ? -1 : 1;
}

enum class GeneratorKind { psi, psibar, alpha, beta };

/// psi/psibar carry a layer and a cycle; alpha/beta only a cycle. All 0-based.
struct GeneratorIndex {
  GeneratorKind kind;
  int layer = 0;
  int cycle = 0;

  friend bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;
};

/// Canonical ordering for k layers and g cycles:
/// psi_1^1, psibar_1^1, psi_1^2, psibar_1^2, ..., psi_k^g, psibar_k^g, alpha^1, beta^1, ..., alpha^g, beta^g.
class GeneratorLayout {
 public:
  GeneratorLayout(int layers, int cycles);

  int layers() const { return layers_; }
  int cycles() const { return cycles_; }
  int count() const { return 2 * layers_ * cycles_ + 2 * cycles_; }

  int position(const GeneratorIndex& gen) const;
  GeneratorIndex generator(int position) const;
  Monomial bit(const GeneratorIndex& gen) const { return Monomial{1} << position(gen); }

  int psi(int layer, int cycle) const { return position({GeneratorKind::psi, layer, cycle}); }
  int psibar(int layer, int cycle) const { return position({GeneratorKind::psibar, layer, cycle}); }
  int alpha(int cycle) const { return position({GeneratorKind::alpha, 0, cycle}); }
  int beta(int cycle) const { return position({GeneratorKind::beta, 0, cycle}); }

  /// All psi/psibar generators.
  Monomial fermion_mask() const;
  /// psi/psibar generators of one cycle block.
  Monomial block_mask(int cycle) const;
  /// alpha/beta generators.
  Monomial source_mask() const;

  /// D(psi^r, psibar^r) = dpsi_1^r dpsibar_1^r ... dpsi_k^r dpsibar_k^r, as generator positions.
  std::vector<int> block_measure(int cycle) const;
  /// Concatenation of all block measures, r = 1..g.
  std::vector<int> full_measure() const;

  std::string name(int position) const;

 private:
  int layers_;
  int cycles_;
};

/// Finite sum of coefficient-weighted monomials over `generators` anticommuting symbols.
/// Terms are kept sorted by monomial with no zero coefficients.
template <typename Scalar>
class GrassmannElement {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit GrassmannElement(int generators = 0) : generators_(check_count(generators)) {}

  static GrassmannElement zero(int generators) { return GrassmannElement(generators); }
  static GrassmannElement constant(int generators, const Scalar& c) {
    return monomial(generators, Monomial{0}, c);
  }
  static GrassmannElement one(int generators) { return constant(generators, Scalar(1)); }
  static GrassmannElement generator(int generators, int position, const Scalar& c = Scalar(1)) {
    if (position < 0 || position >= generators) throw std::out_of_range("generator position out of range");
    return monomial(generators, Monomial{1} << position, c);
  }
  static GrassmannElement monomial(int generators, Monomial m, const Scalar& c) {
    GrassmannElement e(generators);
    if ((m & ~e.ambient_mask()) != 0) throw std::out_of_range("monomial outside the ambient generators");
    if (c != 0) e.terms_.emplace_back(m, c);
    return e;
  }
  /// Builds from arbitrary (monomial, coefficient) pairs, summing duplicates.
  static GrassmannElement from_terms(int generators, std::vector<Term> terms) {
    GrassmannElement e(generators);
    for (const auto& t : terms)
      if ((t.first & ~e.ambient_mask()) != 0) throw std::out_of_range("monomial outside the ambient generators");
    e.terms_ = canonicalize(std::move(terms));
    return e;
  }

  int generators() const { return generators_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial key) { return t.first < key; });
    return (it != terms_.end() && it->first == m) ? it->second : Scalar(0);
  }
  Scalar constant_term() const { return coefficient(Monomial{0}); }

  /// Every stored monomial has even degree.
  bool is_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return degree(t.first) % 2 == 0; });
  }
  /// Union of all generators that occur.
  Monomial support() const {
    Monomial s = 0;
    for (const auto& t : terms_) s |= t.first;
    return s;
  }

  friend GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
    check_same(a, b);
    std::vector<Term> all(a.terms_);
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    GrassmannElement r(a.generators_);
    r.terms_ = canonicalize(std::move(all));
    return r;
  }
  friend GrassmannElement operator-(const GrassmannElement& a) {
    GrassmannElement r(a);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) { return a + (-b); }
  friend GrassmannElement operator*(const Scalar& s, const GrassmannElement& a) {
    GrassmannElement r(a.generators_);
    if (s == 0) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.emplace_back(t.first, s * t.second);
    return r;
  }
  /// Signed product: chi_a chi_b = -chi_b chi_a, chi_a^2 = 0.
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    check_same(a, b);
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const int s = merge_sign(ma, mb);
        if (s == 0) continue;
        Scalar c = ca * cb;
        if (s < 0) c = -c;
        products.emplace_back(ma | mb, std::move(c));
      }
    }
    GrassmannElement r(a.generators_);
    r.terms_ = canonicalize(std::move(products));
    return r;
  }
  GrassmannElement& operator+=(const GrassmannElement& b) { return *this = *this + b; }
  GrassmannElement& operator*=(const GrassmannElement& b) { return *this = *this * b; }

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.generators_ == b.generators_ && a.terms_ == b.terms_;
  }

 private:
  static int check_count(int generators) {
    if (generators < 0 || generators > kMaxGenerators)
      throw std::invalid_argument("generator count must be in [0, 64]");
    return generators;
  }
  Monomial ambient_mask() const {
    return generators_ == 64 ? ~Monomial{0} : (Monomial{1} << generators_) - 1;
  }
  static void check_same(const GrassmannElement& a, const GrassmannElement& b) {
    if (a.generators_ != b.generators_) throw std::invalid_argument("elements live in different algebras");
  }
  static std::vector<Term> canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second == 0) out.pop_back();
    return out;
  }

  int generators_;
  std::vector<Term> terms_;
};

/// exp(x) for even x with zero constant term.
/// Even monomials commute and square to zero, so exp(sum c_m m) = prod (1 + c_m m);
/// the expansion never divides, which keeps integer scalars exact.
template <typename Scalar>
GrassmannElement<Scalar> gexp(const GrassmannElement<Scalar>& x) {
  if (!x.is_even()) throw std::invalid_argument("gexp needs an even element");
  if (x.constant_term() != 0) throw std::invalid_argument("gexp needs a zero constant term");
  auto result = GrassmannElement<Scalar>::one(x.generators());
  for (const auto& [m, c] : x.terms()) {
    result = result + result * GrassmannElement<Scalar>::monomial(x.generators(), m, c);
  }
  return result;
}

/// Left Berezin integral over one generator: for a sorted monomial containing chi_a at
/// 1-based position delta, returns (-1)^{delta-1} times the monomial without chi_a.
template <typename Scalar>
GrassmannElement<Scalar> berezin(const GrassmannElement<Scalar>& x, int position) {
  if (position < 0 || position >= x.generators()) throw std::out_of_range("generator position out of range");
  const Monomial bit = Monomial{1} << position;
  const Monomial below = bit - 1;
  std::vector<typename GrassmannElement<Scalar>::Term> out;
  for (const auto& [m, c] : x.terms()) {
    if ((m & bit) == 0) continue;
    out.emplace_back(m & ~bit, (std::popcount(m & below) % 2 == 0) ? c : Scalar(-c));
  }
  // Removing the same bit from distinct monomials keeps them distinct and ordered.
  return GrassmannElement<Scalar>::from_terms(x.generators(), std::move(out));
}

/// Iterated Berezin integral; the rightmost differential in `measure` is applied first.
template <typename Scalar>
GrassmannElement<Scalar> berezin_multi(GrassmannElement<Scalar> x, std::span<const int> measure) {
  for (auto it = measure.rbegin(); it != measure.rend(); ++it) x = berezin(x, *it);
  return x;
}

/// Human-readable rendering using the layout's generator names.
template <typename Scalar>
std::string format(const GrassmannElement<Scalar>& x, const GeneratorLayout& layout) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    std::string coeff = c.str();
    if (!out.empty()) out += (coeff.front() == '-') ? " - " : " + ";
    else if (coeff.front() == '-') out += "-";
    if (coeff.front() == '-') coeff.erase(0, 1);
    std::string factors = (m == 0 || coeff != "1") ? coeff : std::string();
    for (Monomial rest = m; rest != 0; rest &= rest - 1) {
      if (!factors.empty()) factors += "*";
      factors += layout.name(std::countr_zero(rest));
    }
    out += factors;
  }
  return out;
}

}  // namespace chernfqh
