#include "chernfqh/analysis.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace chernfqh {

namespace {

RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

Integer floor_of(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer f = num / den;  // truncates toward zero
  if (num < 0 && f * den != num) f -= 1;
  return f;
}

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

IntVector quasihole_vector(const Configuration& cfg) { return cfg.quasiholes(); }

ValidityReport validity(const Configuration& cfg) {
  const int g = cfg.genus();
  const IntVector p = cfg.quasiholes();
  const IntVector& n = cfg.particles();
  ValidityReport r;
  r.kminusI_psd = is_psd(minus_identity(cfg.coupling()));
  r.det_nonzero = det(cfg.coupling()) != 0;
  r.p_nonnegative = r.kodaira_bound = r.n_constraint = true;
  for (int i = 0; i < cfg.layers(); ++i) {
    if (p(i) < 0) r.p_nonnegative = false;
    if (!(p(i) > -(n(i) + 1 - g))) r.kodaira_bound = false;
    if (!(n(i) > 2 * g - 1)) r.n_constraint = false;
  }
  return r;
}

bool rank_vanishing(const Configuration& cfg) {
  const IntVector p = cfg.quasiholes();
  for (int i = 0; i < p.size(); ++i)
    if (p(i) < 0) return true;
  return false;
}

ShiftSolution solve_shift(const IntSymMatrix& k_matrix, int genus, const IntVector& degrees) {
  if (degrees.size() != k_matrix.size()) throw std::invalid_argument("degree vector must have one entry per layer");
  const RatMatrix inv = inverse(k_matrix);
  const IntVector rhs = degrees - Integer(genus - 1) * k_matrix.diagonal();
  ShiftSolution s;
  s.particles = inv * to_rational(rhs);
  s.integral = true;
  s.admissible = true;
  for (Eigen::Index i = 0; i < s.particles.size(); ++i) {
    if (!is_integral(s.particles(i))) s.integral = false;
    if (!(s.particles(i) > 2 * genus - 1)) s.admissible = false;
  }
  s.admissible = s.admissible && s.integral;
  return s;
}

ParticleMaxReport particle_max_analysis(const IntSymMatrix& k_matrix) {
  ParticleMaxReport r;
  r.column_sums = column_sums(inverse(k_matrix));
  r.all_nonnegative = true;
  for (Eigen::Index i = 0; i < r.column_sums.size(); ++i)
    if (r.column_sums(i) < 0) r.all_nonnegative = false;
  return r;
}

ParticleShift delta_n(const IntSymMatrix& k_matrix, const IntVector& quasiholes) {
  if (quasiholes.size() != k_matrix.size()) throw std::invalid_argument("quasi-hole vector must have one entry per layer");
  const RatMatrix inv = inverse(k_matrix);
  ParticleShift s;
  s.per_layer = -(inv * to_rational(quasiholes));
  s.total = -(column_sums(inv).transpose() * to_rational(quasiholes))(0);
  return s;
}

Rational conductance(const Configuration& cfg) {
  const ChernCharacter ch = ch_theorem3(cfg);
  if (ch.rank() == 0) throw RankZeroError("rank-zero configuration has no conductance");
  if (cfg.genus() == 0) return Rational(0);
  return -ch.coeffs[1] / ch.rank();
}

Rational asymptotic_conductance(const IntSymMatrix& k_matrix, const IntVector& particles, const IntVector& quasiholes) {
  if (particles.size() != k_matrix.size() || quasiholes.size() != k_matrix.size())
    throw std::invalid_argument("vectors must have one entry per layer");
  const RatMatrix inv = inverse(k_matrix);
  const RatVector c = column_sums(inv);
  Rational s = entry_sum(inv);
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (particles(i) == 0) throw std::domain_error("asymptotic conductance needs n_i != 0");
    s -= Rational(quasiholes(i), particles(i)) * c(i) * c(i);
  }
  return s;
}

FillingReport asymptotic_filling(const IntSymMatrix& k_matrix, int genus, const IntVector& degrees) {
  const int k = k_matrix.size();
  if (degrees.size() != k) throw std::invalid_argument("degree vector must have one entry per layer");
  const ParticleMaxReport pm = particle_max_analysis(k_matrix);
  for (int i = 0; i < k; ++i)
    if (!(pm.column_sums(i) > 0)) throw std::domain_error("asymptotic filling needs every C_i > 0");

  FillingReport report;
  report.leading = inverse(k_matrix) * to_rational(degrees);
  const RatVector n0 = solve_shift(k_matrix, genus, degrees).particles;
  const IntVector target = degrees - Integer(genus - 1) * k_matrix.diagonal();

  Integer radius = 0;
  for (int j = 0; j < k; ++j) {
    Integer col = 0;
    for (int i = 0; i < k; ++i) col += k_matrix(i, j);
    if (col > radius) radius = col;
  }
  radius += 1;

  IntVector base(k);
  for (int i = 0; i < k; ++i) base(i) = floor_of(n0(i)) - radius;
  const long long width = (2 * radius + 1).convert_to<long long>();

  bool found = false;
  Integer best_total = 0;
  Rational best_distance = 0;
  IntVector best;
  std::vector<long long> offset(static_cast<std::size_t>(k), 0);
  IntVector n(k);
  while (true) {
    for (int i = 0; i < k; ++i) n(i) = base(i) + offset[i];
    const IntVector slack = target - k_matrix.matrix() * n;
    bool feasible = true;
    for (int i = 0; i < k; ++i)
      if (slack(i) < 0) feasible = false;
    if (feasible) {
      const Integer total = n.sum();
      Rational distance = 0;
      for (int i = 0; i < k; ++i) distance = std::max(distance, abs_of(Rational(n(i)) - n0(i)));
      bool better = !found || total > best_total || (total == best_total && distance < best_distance);
      if (better) {
        found = true;
        best_total = total;
        best_distance = distance;
        best = n;
      }
    }
    int pos = 0;
    while (pos < k && ++offset[pos] == width) offset[pos++] = 0;
    if (pos == k) break;
  }
  if (!found) throw std::domain_error("no feasible particle vector in the search box");
  report.maximizer = best;
  return report;
}

}  // namespace chernfqh
