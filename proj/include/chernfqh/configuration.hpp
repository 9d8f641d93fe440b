#pragma once

#include "chernfqh/linalg.hpp"

namespace chernfqh {

/// A k-layer system (K, g, d, n). d is per layer; a scalar degree is broadcast.
/// The quasi-hole vector p = d - K n - (g - 1) diag(K) is always recomputed.
class Configuration {
 public:
  /// Throws std::invalid_argument on size mismatches, negative K entries or g < 0.
  Configuration(IntSymMatrix coupling, int genus, IntVector degrees, IntVector particles);

  /// The configuration whose quasi-hole vector is `quasiholes`.
  static Configuration from_quasiholes(IntSymMatrix coupling, int genus, IntVector particles,
                                       const IntVector& quasiholes);

  int layers() const { return coupling_.size(); }
  const IntSymMatrix& coupling() const { return coupling_; }
  int genus() const { return genus_; }
  const IntVector& degrees() const { return degrees_; }
  const IntVector& particles() const { return particles_; }
  IntVector quasiholes() const;

 private:
  IntSymMatrix coupling_;
  int genus_;
  IntVector degrees_;
  IntVector particles_;
};

IntVector broadcast(const Integer& value, int k);
IntVector to_int_vector(std::initializer_list<long long> values);

/// Smallest particle numbers with n_i > 2g - 1 (and n_i >= 0).
IntVector minimal_particles(int k, int genus);

}  // namespace chernfqh
