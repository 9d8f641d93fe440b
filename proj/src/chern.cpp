#include "chernfqh/chern.hpp"

#include "chernfqh/series.hpp"

#include <optional>
#include <string>

namespace chernfqh {

ChernCharacter theta_collect(const GrassmannElement<Rational>& x, const GeneratorLayout& layout) {
  const int g = layout.cycles();
  std::vector<std::optional<Rational>> value(static_cast<std::size_t>(g) + 1);
  std::vector<long long> seen(static_cast<std::size_t>(g) + 1, 0);

  for (const auto& [mask, c] : x.terms()) {
    if ((mask & layout.fermion_mask()) != 0)
      throw NonUniformThetaError("element still contains psi/psibar generators");
    int size = 0;
    for (int r = 0; r < g; ++r) {
      const bool a = (mask >> layout.alpha(r)) & 1u;
      const bool b = (mask >> layout.beta(r)) & 1u;
      if (a != b) throw NonUniformThetaError("unpaired alpha/beta generator in cycle " + std::to_string(r + 1));
      size += a ? 1 : 0;
    }
    auto& slot = value[static_cast<std::size_t>(size)];
    if (slot && *slot != c)
      throw NonUniformThetaError("coefficients of (alpha beta)^F differ at |F| = " + std::to_string(size));
    slot = c;
    ++seen[static_cast<std::size_t>(size)];
  }

  ChernCharacter ch = ChernCharacter::zero(g);
  for (int m = 0; m <= g; ++m) {
    if (seen[m] == 0) continue;
    if (Integer(seen[m]) != binomial(Integer(g), m))
      throw NonUniformThetaError("some (alpha beta)^F with |F| = " + std::to_string(m) + " are missing");
    ch.coeffs[m] = *value[m] / factorial(static_cast<unsigned>(m));
  }
  return ch;
}

namespace {

GrassmannElement<Rational> layer_theta(const GeneratorLayout& layout, int layer) {
  const int m = layout.count();
  auto theta = GrassmannElement<Rational>::zero(m);
  for (int r = 0; r < layout.cycles(); ++r) {
    theta += GrassmannElement<Rational>::generator(m, layout.psibar(layer, r)) *
             GrassmannElement<Rational>::generator(m, layout.psi(layer, r));
  }
  return theta;
}

GrassmannElement<Rational> evaluate(const LayerPolynomial& f, const GrassmannElement<Rational>& x) {
  auto result = GrassmannElement<Rational>::zero(x.generators());
  auto power = GrassmannElement<Rational>::one(x.generators());
  for (int a = 0; a <= f.degree(); ++a) {
    if (power.is_zero()) break;
    result += f[a] * power;
    power *= x;
  }
  return result;
}

}  // namespace

ChernCharacter ch_bruteforce(const Configuration& cfg, IntegrationSchedule schedule) {
  const int k = cfg.layers();
  const int g = cfg.genus();
  if (2 * g * k + 2 * g > kBruteForceGeneratorLimit)
    throw BruteForceLimitError("brute force needs 2gk + 2g <= " + std::to_string(kBruteForceGeneratorLimit) +
                               " generators, got " + std::to_string(2 * g * k + 2 * g));
  const GeneratorLayout layout(k, g);
  const int m = layout.count();
  const IntVector p = cfg.quasiholes();
  const IntVector& n = cfg.particles();

  auto integrand = GrassmannElement<Rational>::one(m);
  for (int i = 0; i < k; ++i) {
    if (n(i) < g) throw std::invalid_argument("brute force needs n_i >= g");
    // theta_i^a vanishes for a > g.
    const LayerPolynomial f =
        series_oracle_f(n(i).convert_to<long long>(), g, p(i).convert_to<long long>(), g);
    integrand *= evaluate(f, layer_theta(layout, i));
  }

  if (schedule == IntegrationSchedule::staged) {
    for (int r = 0; r < g; ++r) {
      const auto measure = layout.block_measure(r);
      integrand = berezin_multi(integrand * gexp(block_exponent<Rational>(cfg.coupling(), layout, r)),
                                std::span<const int>(measure));
    }
  } else {
    for (int r = 0; r < g; ++r) integrand *= gexp(block_exponent<Rational>(cfg.coupling(), layout, r));
    const auto measure = layout.full_measure();
    integrand = berezin_multi(std::move(integrand), std::span<const int>(measure));
  }
  return theta_collect(integrand, layout);
}

ChernCharacter ch_theorem1(const Configuration& cfg) {
  const IntVector p = cfg.quasiholes();
  for (int i = 0; i < p.size(); ++i)
    if (p(i) != 0) throw std::invalid_argument("closed form for p = 0 called with non-zero quasi-holes");
  const Integer d = det(cfg.coupling());
  if (d == 0) throw SingularMatrixError("K is singular");
  const Rational conductance = entry_sum(inverse(cfg.coupling()));
  const int g = cfg.genus();
  ChernCharacter ch = ChernCharacter::zero(g);
  Rational power = 1;
  for (int i = 0; i < g; ++i) power *= Rational(d);
  Rational term = power;
  for (int m = 0; m <= g; ++m) {
    ch.coeffs[m] = term / factorial(static_cast<unsigned>(m));
    term *= -conductance;
  }
  return ch;
}

void for_each_multi_index(int k, int g, const std::function<void(const MultiIndexTerm&)>& visit) {
  const std::size_t subsets = std::size_t{1} << k;
  MultiIndexTerm term{std::vector<int>(subsets, 0), std::vector<int>(subsets, 0)};
  const std::size_t slots = 2 * subsets;
  std::function<void(std::size_t, int)> recurse = [&](std::size_t slot, int budget) {
    int& cell = slot < subsets ? term.v[slot] : term.w[slot - subsets];
    if (slot + 1 == slots) {
      cell = budget;
      visit(term);
      cell = 0;
      return;
    }
    for (int c = 0; c <= budget; ++c) {
      cell = c;
      recurse(slot + 1, budget - c);
    }
    cell = 0;
  };
  recurse(0, g);
}

namespace {

struct SubsetFactor {
  Integer det;
  Integer pair;  // coefficient of alpha beta in the per-cycle Gaussian integral
};

class ClosedFormSum {
 public:
  ClosedFormSum(const Configuration& cfg, ExponentSign sign)
      : k_(cfg.layers()), g_(cfg.genus()), subsets_(std::size_t{1} << k_), p_(cfg.quasiholes()),
        v_(subsets_, 0), w_(subsets_, 0), load_(static_cast<std::size_t>(k_), 0), ch_(ChernCharacter::zero(g_)) {
    const GeneratorLayout single(k_, 1);
    factors_.reserve(subsets_);
    for (std::size_t s = 0; s < subsets_; ++s) {
      const auto block = wick_closed<Integer>(cfg.coupling(), static_cast<LayerSet>(s), single, 0, sign);
      const Monomial alpha_beta = (Monomial{1} << single.alpha(0)) | (Monomial{1} << single.beta(0));
      factors_.push_back({block.constant_term(), block.coefficient(alpha_beta)});
    }
    tops_.reserve(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) tops_.push_back(cfg.particles()(i) - g_ + p_(i));
  }

  ChernCharacter run() {
    for (int i = 0; i < k_; ++i)
      if (p_(i) < 0) return ch_;  // every layer binomial has a negative lower entry
    recurse(0, g_);
    return ch_;
  }

 private:
  bool overloaded() const {
    for (int i = 0; i < k_; ++i)
      if (Integer(load_[i]) > p_(i)) return true;
    return false;
  }

  void adjust(std::size_t subset, int delta) {
    for (int i = 0; i < k_; ++i)
      if (contains(static_cast<LayerSet>(subset), i)) load_[i] += delta;
  }

  void recurse(std::size_t slot, int budget) {
    const std::size_t slots = 2 * subsets_;
    const std::size_t subset = slot % subsets_;
    int& cell = slot < subsets_ ? v_[subset] : w_[subset];
    const int lo = (slot + 1 == slots) ? budget : 0;
    for (int c = lo; c <= budget; ++c) {
      cell = c;
      adjust(subset, c);
      const bool prune = overloaded();
      if (!prune) {
        if (slot + 1 == slots) accumulate();
        else recurse(slot + 1, budget - c);
      }
      adjust(subset, -c);
      cell = 0;
      if (prune) break;  // loads only grow with c
    }
  }

  void accumulate() {
    int vsum = 0;
    int wsum = 0;
    Integer product = 1;
    Integer vden = 1;
    Integer wden = 1;
    for (std::size_t s = 0; s < subsets_; ++s) {
      vsum += v_[s];
      wsum += w_[s];
      vden *= int_factorial(static_cast<unsigned>(v_[s]));
      wden *= int_factorial(static_cast<unsigned>(w_[s]));
      product *= pow(factors_[s].pair, static_cast<unsigned>(v_[s]));
      product *= pow(factors_[s].det, static_cast<unsigned>(w_[s]));
      if (product == 0) return;
    }
    for (int i = 0; i < k_; ++i) {
      product *= layer_binomial(tops_[i], (p_(i) - load_[i]).convert_to<long long>());
      if (product == 0) return;
    }
    // binom(|v|, v) binom(g - |v|, w) / |v|!  ==  1 / (prod v_I!) * (g - |v|)! / prod w_I!
    const Integer wnum = int_factorial(static_cast<unsigned>(wsum));
    ch_.coeffs[static_cast<std::size_t>(vsum)] += Rational(product * wnum, vden * wden);
  }

  int k_;
  int g_;
  std::size_t subsets_;
  IntVector p_;
  std::vector<Integer> tops_;
  std::vector<SubsetFactor> factors_;
  std::vector<int> v_;
  std::vector<int> w_;
  std::vector<long long> load_;
  ChernCharacter ch_;
};

}  // namespace

ChernCharacter ch_theorem3(const Configuration& cfg, ExponentSign sign) {
  if (det(cfg.coupling()) == 0) throw SingularMatrixError("K is singular");
  return ClosedFormSum(cfg, sign).run();
}

EquivalenceReport verify_equivalence(const Configuration& cfg, ExponentSign sign) {
  EquivalenceReport report;
  report.bruteforce = ch_bruteforce(cfg);
  report.closed_form = ch_theorem3(cfg, sign);
  report.equal = report.bruteforce == report.closed_form;
  return report;
}

std::vector<IntSymMatrix> coupling_matrices(int k, int entry_max) {
  if (k < 0 || entry_max < 0) throw std::invalid_argument("coupling_matrices needs k >= 0 and entry_max >= 0");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) cells.emplace_back(i, j);
  std::vector<IntSymMatrix> out;
  IntMatrix m = IntMatrix::Zero(k, k);
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == cells.size()) {
      IntSymMatrix candidate(m);
      if (det(candidate) != 0 && is_psd(minus_identity(candidate))) out.push_back(candidate);
      return;
    }
    const auto [i, j] = cells[c];
    for (int v = 0; v <= entry_max; ++v) {
      m(i, j) = v;
      m(j, i) = v;
      fill(c + 1);
    }
  };
  fill(0);
  return out;
}

std::vector<Configuration> oracle_sweep(const OracleSweepRange& range) {
  std::vector<Configuration> out;
  for (int k : range.layers) {
    const auto matrices = coupling_matrices(k, range.entry_max);
    const std::size_t values = range.quasihole_values.size();
    std::size_t combos = 1;
    for (int i = 0; i < k; ++i) combos *= values;
    for (const auto& K : matrices) {
      for (int g : range.genera) {
        for (std::size_t code = 0; code < combos; ++code) {
          IntVector p(k);
          std::size_t rest = code;
          for (int i = 0; i < k; ++i) {
            p(i) = range.quasihole_values[rest % values];
            rest /= values;
          }
          out.push_back(Configuration::from_quasiholes(K, g, minimal_particles(k, g), p));
        }
      }
    }
  }
  return out;
}

}  // namespace chernfqh
