#pragma once

#include "chernfqh/chern.hpp"
#include "chernfqh/configuration.hpp"

namespace chernfqh {

struct ValidityReport {
  bool kminusI_psd = false;
  bool p_nonnegative = false;
  bool kodaira_bound = false;  // p_i > -(n_i + 1 - g) for every layer
  bool n_constraint = false;   // n_i > 2g - 1 for every layer
  bool det_nonzero = false;

  /// The closed form is the Chern character of the bundle (not just an Euler characteristic).
  bool certified() const { return kminusI_psd && kodaira_bound && n_constraint; }
};

IntVector quasihole_vector(const Configuration& cfg);
ValidityReport validity(const Configuration& cfg);

/// true iff some p_i < 0; the rank is then zero.
bool rank_vanishing(const Configuration& cfg);

struct ShiftSolution {
  RatVector particles;  // K^{-1} (d - (g - 1) diag K)
  bool integral = false;
  bool admissible = false;  // integral and n_i > 2g - 1
};

/// Solves K n0 = d - (g - 1) diag K. Throws SingularMatrixError.
ShiftSolution solve_shift(const IntSymMatrix& k_matrix, int genus, const IntVector& degrees);

struct ParticleMaxReport {
  RatVector column_sums;    // C_i = sum_j (K^{-1})_ji
  bool all_nonnegative = false;
};

ParticleMaxReport particle_max_analysis(const IntSymMatrix& k_matrix);

struct ParticleShift {
  RatVector per_layer;  // -K^{-1} p
  Rational total;       // -sum_i C_i p_i
};

ParticleShift delta_n(const IntSymMatrix& k_matrix, const IntVector& quasiholes);

class RankZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// s with sigma = -s theta, s = -c_1 / c_0 of the closed-form Chern character.
/// Zero for genus 0. Throws RankZeroError when c_0 = 0.
Rational conductance(const Configuration& cfg);

/// First-order large-field value |K^{-1}| - sum_i (p_i / n_i) C_i^2.
Rational asymptotic_conductance(const IntSymMatrix& k_matrix, const IntVector& particles, const IntVector& quasiholes);

struct FillingReport {
  RatVector leading;    // K^{-1} d
  IntVector maximizer;  // integral n maximizing sum n_i subject to p >= 0
};

/// Requires det K != 0 and every C_i > 0 (std::domain_error otherwise). The maximizer is
/// searched over the box |n - n0|_inf <= max column sum of K + 1 around the shift solution
/// n0, keeping p >= 0; ties go to the vector closest to n0, then the first one in scan order.
FillingReport asymptotic_filling(const IntSymMatrix& k_matrix, int genus, const IntVector& degrees);

}  // namespace chernfqh
